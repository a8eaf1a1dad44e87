#ifndef BGS_REPORT_IO_HPP
#define BGS_REPORT_IO_HPP

#include <span>
#include <string>

#include <json.hpp>

#include <bgs/harness.hpp>

namespace bgs
{

// Whether wall-clock fields are written as measured or as zero.
enum class Timing { measured, zeroed };

// {"max_n", "verdict", "summary", "records": [{"n", "consensus", "agreeing",
//  "dissenting": [{"formula", "value" | "error"}], "not_applicable",
//  "elapsed_ns": {name: ns}}]}
nlohmann::ordered_json report_to_json(const VerificationReport &report, Timing timing);

// One row per evaluation: n,formula,status,value,elapsed_ns. status is
// agree, dissent or error.
std::string report_to_csv(const VerificationReport &report, Timing timing);

// Human-readable summary; carries no timing.
std::string report_to_plain(const VerificationReport &report);

inline constexpr const char *bench_csv_header = "formula,n,reps,median_ns,value";

std::string bench_to_csv(std::span<const BenchRecord> records, Timing timing);
nlohmann::ordered_json bench_to_json(std::span<const BenchRecord> records, Timing timing);

} // namespace bgs

#endif
