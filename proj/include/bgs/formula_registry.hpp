#ifndef BGS_FORMULA_REGISTRY_HPP
#define BGS_FORMULA_REGISTRY_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>

#include <bgs/formulas.hpp>

namespace bgs
{

// Enumerator order is the report order.
enum class FormulaId {
    series_oracle,
    higgins_9,
    stirling_single_10,
    gould_double_11,
    stirling_ratio_12,
    faulhaber_recursion_13,
    tangent_double_14_as_printed,
    double_stirling_15,
    genocchi_theorem_16,
};

enum class NativeValue { bernoulli, genocchi };

struct FormulaInfo {
    FormulaId id;
    std::string_view name;
    bool trusted;
    // Defined only at even Bernoulli indices n = 2k, k >= 1.
    bool even_only;
    NativeValue native;
};

const std::array<FormulaInfo, 9> &all_formulas();
const FormulaInfo &formula_info(FormulaId id);
std::string_view formula_name(FormulaId id);
// Case-insensitive match against the canonical names.
std::optional<FormulaId> parse_formula_id(std::string_view name);

class not_applicable_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// n is always a Bernoulli (or Genocchi) index, never the k of B_{2k}.
bool formula_applicable(FormulaId id, unsigned n);

// The formula's own output: G_n for the Genocchi formula, B_n otherwise.
// Throws not_applicable_error when formula_applicable(id, n) is false.
Rational evaluate_native(FormulaId id, unsigned n, const FormulaContext &ctx);

// B_n; Genocchi output is mapped back through B_n = G_n / (2(1 - 2^n)).
Rational evaluate_bernoulli(FormulaId id, unsigned n, const FormulaContext &ctx);

} // namespace bgs

#endif
