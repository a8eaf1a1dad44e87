#ifndef BGS_HARNESS_HPP
#define BGS_HARNESS_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <bgs/formula_registry.hpp>
#include <bgs/formulas.hpp>
#include <bgs/rational.hpp>

namespace bgs
{

// One formula at one index. Exactly one of value / error is set.
struct FormulaEvaluation {
    FormulaId formula;
    unsigned n = 0;
    std::optional<Rational> value;
    std::chrono::nanoseconds elapsed{0};
    std::optional<std::string> error;

    bool ok() const
    {
        return value.has_value();
    }
};

// Every applicable formula at Bernoulli index n, in FormulaId order, valued
// as B_n. Exceptions thrown by a formula are captured as ERROR entries.
// Throws std::invalid_argument when ctx lacks required_triangle_rows(n).
std::vector<FormulaEvaluation> evaluate_all(unsigned n, const FormulaContext &ctx);

struct Dissent {
    FormulaId formula;
    std::optional<Rational> value;
    std::optional<std::string> error;
};

struct IndexRecord {
    unsigned n = 0;
    // Always the SERIES_ORACLE value.
    Rational consensus;
    std::vector<FormulaId> agreeing;
    std::vector<Dissent> dissenting;
    std::vector<FormulaId> not_applicable;
    std::vector<std::pair<FormulaId, std::chrono::nanoseconds>> elapsed;
};

enum class Verdict { all_trusted_agree, trusted_dissent_found };

std::string_view verdict_name(Verdict v);

struct ReportSummary {
    std::size_t indices = 0;
    std::size_t agreements = 0;
    std::size_t dissents = 0;
    std::size_t trusted_dissents = 0;
    std::size_t untrusted_dissents = 0;
    std::size_t errors = 0;

    friend bool operator==(const ReportSummary &, const ReportSummary &) = default;
};

struct VerificationReport {
    unsigned max_n = 0;
    std::vector<IndexRecord> records;
    ReportSummary summary;
    Verdict verdict = Verdict::all_trusted_agree;

    bool has_untrusted_dissent() const
    {
        return summary.untrusted_dissents > 0;
    }
};

// Same report regardless of thread count; records ordered by n, formulas by
// FormulaId. threads == 0 means hardware concurrency.
VerificationReport verify_range(unsigned max_n, const FormulaContext &ctx, unsigned threads = 1);
VerificationReport verify_range(unsigned max_n, unsigned threads = 1);

// Equality of everything except timing.
bool same_content(const VerificationReport &a, const VerificationReport &b);

struct BenchRecord {
    FormulaId formula;
    unsigned n = 0;
    unsigned repetitions = 1;
    std::chrono::nanoseconds median{0};
    // Serialized B_n value, identical across repetitions.
    std::string value_digest;
};

// One untimed warm-up, then `repetitions` timed runs per (formula, n).
// Pairs where the formula is not applicable are skipped. Throws
// std::invalid_argument when repetitions == 0 and std::logic_error if the
// value changes between repetitions.
std::vector<BenchRecord> bench(std::span<const FormulaId> formulas, std::span<const unsigned> n_values,
                               unsigned repetitions, const FormulaContext &ctx);

// Median of the samples; mean of the two middle samples for even counts.
std::chrono::nanoseconds median_of(std::vector<std::chrono::nanoseconds> samples);

} // namespace bgs

#endif
