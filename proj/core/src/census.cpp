#include "ulab/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <variant>

#include <nlohmann/json.hpp>

#include "ulab/errors.hpp"
#include "ulab/poly_text.hpp"

namespace ulab {

namespace {

std::string trimmed(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what)
{
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

} // namespace

unsigned census_thread_cap()
{
    if (const char* env = std::getenv("UPSILON_LAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<unsigned>(v);
        return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::vector<CensusRecord> read_census_records(const std::string& path, CensusFormat format)
{
    std::ifstream in(path);
    if (!in) throw FileNotFound("cannot open census file: " + path);

    std::vector<CensusRecord> records;
    std::string line;
    std::size_t line_no = 0;
    bool seen_record = false;
    auto unquoted = [](std::string s) {
        if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
        return s;
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        if (format == CensusFormat::Csv) {
            if (!seen_record && t == "name,polynomial") continue;
            seen_record = true;
            std::size_t comma = t.find(',');
            if (comma == std::string::npos) parse_fail(line_no, "expected \"name,polynomial\"");
            std::string name = unquoted(trimmed(t.substr(0, comma)));
            std::string poly = unquoted(trimmed(t.substr(comma + 1)));
            if (name.empty()) parse_fail(line_no, "empty record name");
            try {
                records.push_back({name, parse_poly(poly)});
            } catch (const ParseError& e) {
                parse_fail(line_no, e.what());
            }
        } else {
            nlohmann::json j = nlohmann::json::parse(t, nullptr, false);
            if (j.is_discarded() || !j.is_object()) parse_fail(line_no, "malformed JSON object");
            if (!j.contains("name") || !j["name"].is_string())
                parse_fail(line_no, "record needs a string \"name\"");
            try {
                records.push_back({j["name"].get<std::string>(), poly_from_json(t)});
            } catch (const ParseError& e) {
                parse_fail(line_no, e.what());
            }
        }
    }
    return records;
}

CensusReport census_report(const std::vector<CensusRecord>& records)
{
    using Slot = std::variant<std::monostate, InvariantReport, CensusReject, std::exception_ptr>;
    std::vector<Slot> slots(records.size());

    unsigned cap = census_thread_cap();
    unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(records.size(), cap));

    // bad records become rejects; anything else (a contract violation) is
    // carried back to the calling thread and rethrown after the join
    auto evaluate = [&](std::size_t i) {
        try {
            slots[i] = report(records[i].delta, records[i].name);
        } catch (const InputError& e) {
            slots[i] = CensusReject{records[i].name, e.what()};
        } catch (...) {
            slots[i] = std::current_exception();
        }
    };

    if (workers <= 1) {
        for (std::size_t i = 0; i < records.size(); ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < records.size(); i = next.fetch_add(1))
                    evaluate(i);
            });
        for (auto& th : pool) th.join();
    }
    for (const auto& slot : slots)
        if (std::holds_alternative<std::exception_ptr>(slot))
            std::rethrow_exception(std::get<std::exception_ptr>(slot));

    CensusReport out;
    for (auto& slot : slots) {
        if (std::holds_alternative<InvariantReport>(slot))
            out.rows.push_back(std::get<InvariantReport>(std::move(slot)));
        else if (std::holds_alternative<CensusReject>(slot))
            out.rejects.push_back(std::get<CensusReject>(std::move(slot)));
    }
    for (const auto& row : out.rows) {
        if (row.is_integral) continue;
        ++out.non_integral_count;
        out.denominators.push_back(rat_den(row.minus3_integral));
    }
    std::sort(out.denominators.begin(), out.denominators.end());
    out.denominators.erase(std::unique(out.denominators.begin(), out.denominators.end()),
                           out.denominators.end());
    return out;
}

CensusReport run_census(const std::string& path, CensusFormat format)
{
    return census_report(read_census_records(path, format));
}

std::string emit_table(const CensusReport& report, TableStyle style)
{
    std::ostringstream out;
    std::size_t total = report.rows.size() + report.rejects.size();
    std::string denoms;
    for (const auto& d : report.denominators) {
        if (!denoms.empty()) denoms += ",";
        denoms += d.str();
    }
    if (style == TableStyle::Markdown) {
        out << "| knot | -3*integral |\n|---|---|\n";
        for (const auto& row : report.rows)
            if (!row.is_integral)
                out << "| " << row.name << " | " << to_fraction_string(row.minus3_integral)
                    << " |\n";
        out << "\n" << report.non_integral_count << " of " << total
            << " records non-integral; denominators {" << denoms << "}";
        if (!report.rejects.empty()) out << "; " << report.rejects.size() << " rejected";
        out << "\n";
    } else {
        out << "name,minus3I\n";
        for (const auto& row : report.rows)
            if (!row.is_integral)
                out << row.name << "," << to_fraction_string(row.minus3_integral) << "\n";
        out << "# non_integral=" << report.non_integral_count << " total=" << total
            << " rejected=" << report.rejects.size() << " denominators={" << denoms << "}\n";
    }
    return out.str();
}

std::string census_report_to_json(const CensusReport& report)
{
    nlohmann::json j;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows)
        rows.push_back(nlohmann::json::parse(report_to_json(row)));
    j["rows"] = std::move(rows);
    nlohmann::json rejects = nlohmann::json::array();
    for (const auto& rej : report.rejects)
        rejects.push_back({{"name", rej.name}, {"reason", rej.reason}});
    j["rejects"] = std::move(rejects);
    j["nonIntegralCount"] = report.non_integral_count;
    nlohmann::json denoms = nlohmann::json::array();
    for (const auto& d : report.denominators) denoms.push_back(d.str());
    j["denominators"] = std::move(denoms);
    return j.dump();
}

} // namespace ulab
