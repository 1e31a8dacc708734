#ifndef ULAB_CENSUS_HPP
#define ULAB_CENSUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ulab/laurent.hpp"
#include "ulab/report.hpp"

namespace ulab {

enum class CensusFormat { Csv, JsonLines };
enum class TableStyle { Markdown, Csv };

struct CensusRecord {
    std::string name;
    LaurentPoly delta;
};

struct CensusReject {
    std::string name;
    std::string reason;
};

/** Batch verdicts over a list of named Alexander polynomials. Rows keep
 *  input order; rejects (records that fail validation) are listed apart
 *  and never abort the batch. */
struct CensusReport {
    std::vector<InvariantReport> rows;
    std::vector<CensusReject> rejects;
    std::int64_t non_integral_count = 0;
    std::vector<BigInt> denominators; // sorted, distinct, from non-integral rows
};

/* CSV: "name,polynomial" (optional header line); JSONL: one
 * {"name": ..., "coeffs": [...]} object per line (optional "minDegree").
 * Throws FileNotFound / ParseError (with line number). */
std::vector<CensusRecord> read_census_records(const std::string& path, CensusFormat format);

/* Record evaluation fans out over worker threads; UPSILON_LAB_THREADS
 * caps the pool. Results are deterministic and ordered regardless. */
CensusReport census_report(const std::vector<CensusRecord>& records);
CensusReport run_census(const std::string& path, CensusFormat format);

/* Non-integral rows as a name/value table plus a summary line. Markdown
 * mirrors the usual census table layout; CSV re-parses to the same
 * minus-three-integral strings. */
std::string emit_table(const CensusReport& report, TableStyle style);

std::string census_report_to_json(const CensusReport& report);

// thread cap from UPSILON_LAB_THREADS (>= 1), hardware concurrency otherwise
unsigned census_thread_cap();

} // namespace ulab

#endif
