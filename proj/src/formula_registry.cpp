#include <bgs/formula_registry.hpp>

#include <algorithm>
#include <cctype>
#include <string>

namespace bgs
{

namespace
{

constexpr std::array<FormulaInfo, 9> registry{{
    {FormulaId::series_oracle, "SERIES_ORACLE", true, false, NativeValue::bernoulli},
    {FormulaId::higgins_9, "HIGGINS_9", true, false, NativeValue::bernoulli},
    {FormulaId::stirling_single_10, "STIRLING_SINGLE_10", true, false, NativeValue::bernoulli},
    {FormulaId::gould_double_11, "GOULD_DOUBLE_11", true, false, NativeValue::bernoulli},
    {FormulaId::stirling_ratio_12, "STIRLING_RATIO_12", true, false, NativeValue::bernoulli},
    {FormulaId::faulhaber_recursion_13, "FAULHABER_RECURSION_13", true, true, NativeValue::bernoulli},
    {FormulaId::tangent_double_14_as_printed, "TANGENT_DOUBLE_14_AS_PRINTED", false, true, NativeValue::bernoulli},
    {FormulaId::double_stirling_15, "DOUBLE_STIRLING_15", true, true, NativeValue::bernoulli},
    {FormulaId::genocchi_theorem_16, "GENOCCHI_THEOREM_16", true, false, NativeValue::genocchi},
}};

bool iequals(std::string_view a, std::string_view b)
{
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::toupper(static_cast<unsigned char>(x)) == std::toupper(static_cast<unsigned char>(y));
           });
}

} // namespace

const std::array<FormulaInfo, 9> &all_formulas()
{
    return registry;
}

const FormulaInfo &formula_info(FormulaId id)
{
    return registry.at(static_cast<std::size_t>(id));
}

std::string_view formula_name(FormulaId id)
{
    return formula_info(id).name;
}

std::optional<FormulaId> parse_formula_id(std::string_view name)
{
    for (const auto &info : registry) {
        if (iequals(info.name, name)) {
            return info.id;
        }
    }
    return std::nullopt;
}

bool formula_applicable(FormulaId id, unsigned n)
{
    const auto &info = formula_info(id);
    if (info.even_only) {
        return n >= 2 && n % 2 == 0;
    }
    if (info.native == NativeValue::genocchi) {
        return n >= 1;
    }
    return true;
}

Rational evaluate_native(FormulaId id, unsigned n, const FormulaContext &ctx)
{
    if (!formula_applicable(id, n)) {
        throw not_applicable_error(std::string(formula_name(id)) + " is not applicable at n = " + std::to_string(n));
    }
    switch (id) {
        case FormulaId::series_oracle:
            return bernoulli_series_oracle(n);
        case FormulaId::higgins_9:
            return bernoulli_higgins(n);
        case FormulaId::stirling_single_10:
            return bernoulli_stirling_single(n, ctx);
        case FormulaId::gould_double_11:
            return bernoulli_gould_double(n, ctx);
        case FormulaId::stirling_ratio_12:
            return bernoulli_stirling_ratio(n, ctx);
        case FormulaId::faulhaber_recursion_13:
            return bernoulli_faulhaber_recursion(n / 2u);
        case FormulaId::tangent_double_14_as_printed:
            return bernoulli_tangent_double_as_printed(n / 2u);
        case FormulaId::double_stirling_15:
            return bernoulli_double_stirling(n / 2u, ctx);
        case FormulaId::genocchi_theorem_16:
            return genocchi_theorem(n, ctx);
    }
    throw std::logic_error("unhandled formula id");
}

Rational evaluate_bernoulli(FormulaId id, unsigned n, const FormulaContext &ctx)
{
    Rational v = evaluate_native(id, n, ctx);
    if (formula_info(id).native == NativeValue::genocchi) {
        return bernoulli_from_genocchi(n, v);
    }
    return v;
}

} // namespace bgs
