// Command-line front end: every subcommand prints a human-readable summary
// by default and the full JSON document with --json. Exit codes: 0 success,
// 1 bad input, 2 internal contract violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ulab/algebraic.hpp"
#include "ulab/braid.hpp"
#include "ulab/census.hpp"
#include "ulab/errors.hpp"
#include "ulab/family.hpp"
#include "ulab/poly_text.hpp"
#include "ulab/report.hpp"
#include "ulab/signature.hpp"
#include "ulab/staircase.hpp"

namespace {

using namespace ulab;

void print_report(const InvariantReport& r)
{
    std::cout << "name:             " << r.name << "\n"
              << "genus:            " << r.genus << "\n"
              << "tau:              " << r.tau << "\n";
    std::cout << "upsilon:          ";
    bool first = true;
    for (const auto& [t, v] : r.upsilon.breakpoints()) {
        if (!first) std::cout << "  ";
        first = false;
        std::cout << "(" << to_fraction_string(t) << ", " << to_fraction_string(v) << ")";
    }
    std::cout << "\n"
              << "integral:         " << to_fraction_string(r.integral) << "\n"
              << "-3*integral:      " << to_fraction_string(r.minus3_integral) << "\n"
              << "omega:            " << to_fraction_string(r.omega) << "\n"
              << "integral verdict: " << (r.is_integral ? "integral" : "non-integral") << "\n"
              << "semigroup closed: " << (r.semigroup_closed ? "yes" : "no") << "\n";
    if (r.witness)
        std::cout << "witness:          (" << r.witness->first << ", " << r.witness->second
                  << ")\n";
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw FileNotFound("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::pair<std::int64_t, std::int64_t> parse_pq(const std::string& s)
{
    std::size_t comma = s.find(',');
    if (comma == std::string::npos)
        throw InvalidParameters("expected \"p,q\", got \"" + s + "\"");
    try {
        return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw InvalidParameters("expected integers in \"p,q\", got \"" + s + "\"");
    }
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact concordance invariants of L-space knots"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of the text summary");

    auto* cmd_upsilon = app.add_subcommand("upsilon", "full invariant report for one polynomial");
    std::string poly_text, poly_file, name = "input";
    auto* opt_poly = cmd_upsilon->add_option("--poly", poly_text, "polynomial, e.g. \"1 - t + t^2\"");
    auto* opt_file = cmd_upsilon->add_option("--file", poly_file, "file containing the polynomial");
    cmd_upsilon->add_option("--name", name, "name used in the report");
    opt_poly->excludes(opt_file);

    auto* cmd_semigroup = app.add_subcommand("semigroup", "gap set and additivity check");
    std::string sg_poly;
    cmd_semigroup->add_option("--poly", sg_poly, "polynomial text")->required();

    auto* cmd_family = app.add_subcommand("family", "built-in braid family member");
    std::int64_t fam_n = 1;
    std::string route = "closed";
    cmd_family->add_option("--n", fam_n, "family index, n >= 1")->required();
    cmd_family->add_option("--route", route, "closed | torres | braid")
        ->check(CLI::IsMember({"closed", "torres", "braid"}));

    auto* cmd_torus = app.add_subcommand("torus", "torus knot report");
    std::string torus_pq;
    cmd_torus->add_option("--pq", torus_pq, "coprime pair p,q")->required();

    auto* cmd_algebraic = app.add_subcommand("algebraic", "singularity invariants");
    std::string alg_mults, alg_pq;
    auto* opt_mults = cmd_algebraic->add_option("--mults", alg_mults, "multiplicities m1,m2,...");
    auto* opt_pq = cmd_algebraic->add_option("--pq", alg_pq, "cusp parameters p,q");
    opt_mults->excludes(opt_pq);

    auto* cmd_braid = app.add_subcommand("braid", "Alexander polynomial of a braid closure");
    std::string word;
    cmd_braid->add_option("--word", word, "braid word \"strands:4 2 1 3 2 ...\"")->required();

    auto* cmd_signature = app.add_subcommand("signature", "unit-circle root localization");
    std::int64_t sig_n = 0, greedy_k = 0;
    auto* opt_sig_n = cmd_signature->add_option("--n", sig_n, "localize the first root for this index");
    auto* opt_greedy = cmd_signature->add_option("--greedy", greedy_k, "emit this many greedy terms");
    opt_sig_n->excludes(opt_greedy);

    auto* cmd_census = app.add_subcommand("census", "batch verdicts over a polynomial list");
    std::string census_input, census_format = "csv", census_style = "markdown";
    cmd_census->add_option("--input", census_input, "records file")->required();
    cmd_census->add_option("--format", census_format, "csv | jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    cmd_census->add_option("--style", census_style, "markdown | csv table style")
        ->check(CLI::IsMember({"markdown", "csv"}));

    // let a trailing --json reach the parent app from any subcommand
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (cmd_upsilon->parsed()) {
        if (poly_text.empty() && poly_file.empty())
            throw InvalidParameter("upsilon needs --poly or --file");
        LaurentPoly d = parse_poly(poly_file.empty() ? poly_text : slurp(poly_file));
        InvariantReport r = report(d, name);
        if (json) std::cout << report_to_json(r) << "\n";
        else print_report(r);
    } else if (cmd_semigroup->parsed()) {
        FormalSemigroup s = formal_semigroup(parse_poly(sg_poly));
        auto witness = is_closed_under_addition(s);
        if (json) {
            nlohmann::json j;
            j["genus"] = s.genus;
            j["gaps"] = s.gaps;
            j["semigroup_closed"] = !witness.has_value();
            if (witness) j["witness"] = {witness->first, witness->second};
            else j["witness"] = nullptr;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "genus: " << s.genus << "\ngaps:  ";
            for (std::size_t i = 0; i < s.gaps.size(); ++i)
                std::cout << (i ? " " : "") << s.gaps[i];
            std::cout << "\nclosed under addition: " << (witness ? "no" : "yes") << "\n";
            if (witness)
                std::cout << "witness: (" << witness->first << ", " << witness->second << ")\n";
        }
    } else if (cmd_family->parsed()) {
        LaurentPoly d;
        if (route == "closed") d = family_alexander(fam_n);
        else if (route == "torres") d = family_alexander_torres(fam_n);
        else d = alexander_of_closure(family_braid_word(fam_n));
        std::string fam_name = family_census_name(fam_n).value_or("family-" + std::to_string(fam_n));
        InvariantReport r = report(d, fam_name);
        if (json) {
            nlohmann::json j;
            j["n"] = fam_n;
            j["route"] = route;
            j["delta"] = nlohmann::json::parse(poly_to_json(d));
            j["report"] = nlohmann::json::parse(report_to_json(r));
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "delta:            " << d.to_string() << "\n";
            print_report(r);
        }
    } else if (cmd_torus->parsed()) {
        auto [p, q] = parse_pq(torus_pq);
        LaurentPoly d = torus_alexander(p, q);
        InvariantReport r =
            report(d, "T(" + std::to_string(p) + "," + std::to_string(q) + ")");
        if (json) std::cout << report_to_json(r) << "\n";
        else {
            std::cout << "delta:            " << d.to_string() << "\n";
            print_report(r);
        }
    } else if (cmd_algebraic->parsed()) {
        MultiplicitySequence ms;
        if (!alg_pq.empty()) {
            auto [p, q] = parse_pq(alg_pq);
            ms = multiplicity_sequence(p, q);
        } else if (!alg_mults.empty()) {
            std::vector<std::int64_t> entries;
            std::stringstream ss(alg_mults);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                try {
                    entries.push_back(std::stoll(tok));
                } catch (const std::exception&) {
                    throw InvalidParameters("bad multiplicity \"" + tok + "\"");
                }
            }
            ms = MultiplicitySequence(std::move(entries));
        } else {
            throw InvalidParameters("algebraic needs --mults or --pq");
        }
        SingularityReport r = singularity_report(ms);
        if (json) std::cout << singularity_report_to_json(r) << "\n";
        else {
            std::cout << "mults:       ";
            for (std::size_t i = 0; i < r.mults.entries.size(); ++i)
                std::cout << (i ? " " : "") << r.mults.entries[i];
            std::cout << "\nmilnor:      " << r.milnor << "\ngenus:       " << r.genus
                      << "\nomega:       " << r.omega << "\n-3*integral: " << r.minus3_integral
                      << "\n";
        }
    } else if (cmd_braid->parsed()) {
        BraidWord w = parse_braid(word);
        LaurentPoly d = alexander_of_closure(w);
        std::optional<std::int64_t> genus;
        bool positive = true;
        for (int l : w.letters) positive = positive && l > 0;
        if (positive) genus = positive_braid_genus(w);
        if (json) {
            nlohmann::json j;
            j["strands"] = w.strands;
            j["letters"] = w.letters;
            j["delta"] = nlohmann::json::parse(poly_to_json(d));
            if (genus) j["genus"] = *genus;
            else j["genus"] = nullptr;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "delta: " << d.to_string() << "\n";
            if (genus) std::cout << "genus: " << *genus << "\n";
        }
    } else if (cmd_signature->parsed()) {
        if (*opt_greedy) {
            GreedySequence g = greedy_sequence(greedy_k);
            if (json) {
                nlohmann::json j;
                j["terms"] = g.terms;
                j["radii"] = g.radii;
                std::cout << j.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < g.terms.size(); ++i)
                    std::cout << "a_" << i + 1 << " = " << g.terms[i]
                              << "   lambda = " << g.radii[i] << "\n";
            }
        } else if (*opt_sig_n) {
            RootLocalization r = locate_first_root(sig_n);
            if (json) {
                nlohmann::json j;
                j["n"] = r.n;
                j["bracket"] = {r.lo, r.hi};
                j["root"] = r.root;
                j["residual"] = r.residual;
                std::cout << j.dump() << "\n";
            } else {
                std::cout.precision(17);
                std::cout << "n:        " << r.n << "\nbracket:  [" << r.lo << ", " << r.hi
                          << "]\nroot:     " << r.root << "\nresidual: " << r.residual << "\n";
            }
        } else {
            throw InvalidParameter("signature needs --n or --greedy");
        }
    } else if (cmd_census->parsed()) {
        CensusFormat fmt = census_format == "csv" ? CensusFormat::Csv : CensusFormat::JsonLines;
        CensusReport rep = run_census(census_input, fmt);
        if (json)
            std::cout << census_report_to_json(rep) << "\n";
        else
            std::cout << emit_table(rep, census_style == "markdown" ? TableStyle::Markdown
                                                                    : TableStyle::Csv);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const ulab::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ulab::ContractError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
