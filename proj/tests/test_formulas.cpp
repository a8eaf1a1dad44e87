#include <doctest.h>

#include <bgs/formula_registry.hpp>
#include <bgs/formulas.hpp>

#include "oracles.hpp"

using namespace bgs;

namespace
{

Rational q(long p, long d = 1)
{
    return Rational(BigInt(p), BigInt(d));
}

// Values of B_n computed by an independent route (series division).
const std::vector<Rational> &reference_bernoulli()
{
    static const auto b = testing::bernoulli_by_series_division(60);
    return b;
}

} // namespace

TEST_SUITE("number-formulas")
{
    TEST_CASE("series oracle")
    {
        CHECK(bernoulli_series_oracle(0) == bernoulli_constants::b0);
        CHECK(bernoulli_series_oracle(1) == bernoulli_constants::b1);
        CHECK(bernoulli_series_oracle(4) == q(-1, 30));
        CHECK(bernoulli_series_oracle_sequence(60) == reference_bernoulli());
    }

    TEST_CASE("Higgins double sum")
    {
        CHECK(bernoulli_higgins(0) == q(1));
        CHECK(bernoulli_higgins(2) == q(1, 6));
        CHECK(bernoulli_higgins(3) == q(0));
    }

    TEST_CASE("single Stirling sum")
    {
        CHECK(bernoulli_stirling_single(0) == q(1));
        CHECK(bernoulli_stirling_single(2) == q(1, 6));
        for (unsigned k = 0; k <= 10; ++k) {
            CHECK(bernoulli_stirling_single(2 * k + 3) == bernoulli_constants::odd_from_three);
        }
    }

    TEST_CASE("Gould double sum")
    {
        CHECK(bernoulli_gould_double(0) == q(1));
        CHECK(bernoulli_gould_double(2) == q(1, 6));
        CHECK(bernoulli_gould_double(1) == q(-1, 2));
    }

    TEST_CASE("Stirling ratio sum")
    {
        CHECK(bernoulli_stirling_ratio(0) == q(1));
        CHECK(bernoulli_stirling_ratio(2) == q(1, 6));
        CHECK(bernoulli_stirling_ratio(5) == q(0));
        const FormulaContext small(5);
        CHECK_THROWS_AS(bernoulli_stirling_ratio(3, small), std::invalid_argument);
    }

    TEST_CASE("Faulhaber coefficients")
    {
        CHECK(faulhaber_coefficients(0).coefficients == std::vector<Rational>{q(0), q(1)});
        CHECK(faulhaber_coefficients(1).coefficients == std::vector<Rational>{q(0), q(1, 2), q(1, 2)});
        CHECK(faulhaber_coefficients(3).coefficients
              == std::vector<Rational>{q(0), q(0), q(1, 4), q(1, 2), q(1, 4)});
        for (unsigned p = 0; p <= 25; ++p) {
            const auto t = faulhaber_coefficients(p);
            REQUIRE(t.coefficients.size() == p + 2);
            CHECK(t.coefficients[0].is_zero());
            for (unsigned long n = 1; n <= p + 3; ++n) {
                CHECK(t.evaluate(BigInt(n)) == Rational(testing::power_sum(n, p)));
            }
        }
    }

    TEST_CASE("Faulhaber recursion uses exponent 2k-1")
    {
        CHECK(bernoulli_faulhaber_recursion(1) == q(1, 6));
        CHECK(bernoulli_faulhaber_recursion(2) == q(-1, 30));
        CHECK(bernoulli_faulhaber_recursion(3) == q(1, 42));
        CHECK_THROWS_AS(bernoulli_faulhaber_recursion(0), std::invalid_argument);

        // The competing reading (exponent 2k) gives 3/10 at k = 2.
        const auto a = faulhaber_coefficients(4);
        CHECK(q(1, 2) - q(1, 5) - q(4) * (a.coefficients[2] / q(3)) == q(3, 10));
    }

    TEST_CASE("tangent double sum as printed")
    {
        CHECK(bernoulli_tangent_double_as_printed(1) == q(1, 3));
        CHECK(bernoulli_tangent_double_as_printed(2) == q(-1, 10));
        CHECK(bernoulli_tangent_double_as_printed(1) != reference_bernoulli()[2]);
        CHECK_THROWS_AS(bernoulli_tangent_double_as_printed(0), std::invalid_argument);
    }

    TEST_CASE("double Stirling formula")
    {
        CHECK(bernoulli_double_stirling(1) == q(1, 6));
        CHECK(bernoulli_double_stirling(2) == reference_bernoulli()[4]);
        CHECK(bernoulli_double_stirling(3) == reference_bernoulli()[6]);
        CHECK(bernoulli_double_stirling(3) == q(1, 42));
    }

    TEST_CASE("Genocchi formula at the even indices up to 18")
    {
        const std::vector<std::pair<unsigned, long>> table{{1, 1},     {2, -1},       {4, 1},        {6, -3},
                                                           {8, 17},    {10, -155},    {12, 2073},    {14, -38227},
                                                           {16, 929569}, {18, -28820619}};
        const FormulaContext ctx(18);
        for (const auto &[n, g] : table) {
            CHECK(genocchi_theorem(n, ctx) == q(g));
        }
        const auto series = testing::genocchi_by_series_division(18);
        for (unsigned n = 1; n <= 18; ++n) {
            CHECK(genocchi_theorem(n, ctx) == series[n]);
        }
        CHECK_THROWS_AS(genocchi_theorem(0), std::invalid_argument);
    }

    TEST_CASE("Genocchi properties")
    {
        const FormulaContext ctx(60);
        const auto &b = reference_bernoulli();
        int previous_sign = 0;
        for (unsigned k = 1; k <= 60; ++k) {
            const auto g = genocchi_theorem(k, ctx);
            CHECK(g.is_integer());
            CHECK(g == genocchi_from_bernoulli(k, b[k]));
            CHECK(bernoulli_from_genocchi(k, g) == b[k]);
            if (k >= 3 && k % 2 == 1) {
                CHECK(g.is_zero());
            }
            if (k % 2 == 0 && k <= 18) {
                if (previous_sign != 0) {
                    CHECK(g.sign() == -previous_sign);
                }
                previous_sign = g.sign();
            }
        }
    }

    TEST_CASE("bridges")
    {
        CHECK(genocchi_from_bernoulli(1, q(-1, 2)) == q(1));
        CHECK(genocchi_from_bernoulli(6, q(1, 42)) == q(-3));
        CHECK(genocchi_from_bernoulli(3, q(0)) == q(0));
        CHECK(bernoulli_from_genocchi(2, q(-1)) == q(1, 6));
        CHECK(bernoulli_from_genocchi(8, q(17)) == q(-1, 30));
        CHECK(bernoulli_from_genocchi(5, q(0)) == q(0));
        CHECK_THROWS_AS(bernoulli_from_genocchi(0, q(1)), std::invalid_argument);
    }

    TEST_CASE("Euler polynomial at zero")
    {
        CHECK(euler_at_zero(1) == q(-1, 2));
        CHECK(euler_at_zero(2) == q(1, 4));
        CHECK(euler_at_zero(3) == q(-1, 2));
    }

    TEST_CASE("trusted formulas agree with the oracle up to 60")
    {
        const auto ctx = FormulaContext::for_index(60);
        const auto &b = reference_bernoulli();
        for (unsigned n = 0; n <= 60; ++n) {
            CAPTURE(n);
            CHECK(bernoulli_higgins(n) == b[n]);
            CHECK(bernoulli_stirling_single(n, ctx) == b[n]);
            CHECK(bernoulli_gould_double(n, ctx) == b[n]);
            CHECK(bernoulli_stirling_ratio(n, ctx) == b[n]);
            if (n >= 2 && n % 2 == 0) {
                CHECK(bernoulli_faulhaber_recursion(n / 2) == b[n]);
                CHECK(bernoulli_double_stirling(n / 2, ctx) == b[n]);
            }
        }
    }

    TEST_CASE("registry")
    {
        CHECK(all_formulas().size() == 9);
        int untrusted = 0;
        for (const auto &info : all_formulas()) {
            CHECK(parse_formula_id(info.name) == info.id);
            CHECK(formula_info(info.id).name == info.name);
            untrusted += info.trusted ? 0 : 1;
        }
        CHECK(untrusted == 1);
        CHECK_FALSE(formula_info(FormulaId::tangent_double_14_as_printed).trusted);
        CHECK(parse_formula_id("genocchi_theorem_16") == FormulaId::genocchi_theorem_16);
        CHECK_FALSE(parse_formula_id("NOPE").has_value());

        CHECK_FALSE(formula_applicable(FormulaId::faulhaber_recursion_13, 3));
        CHECK_FALSE(formula_applicable(FormulaId::faulhaber_recursion_13, 0));
        CHECK(formula_applicable(FormulaId::faulhaber_recursion_13, 4));
        CHECK_FALSE(formula_applicable(FormulaId::genocchi_theorem_16, 0));
        CHECK(formula_applicable(FormulaId::higgins_9, 0));

        const FormulaContext ctx(30);
        CHECK(evaluate_native(FormulaId::genocchi_theorem_16, 12, ctx) == q(2073));
        CHECK(evaluate_bernoulli(FormulaId::genocchi_theorem_16, 12, ctx) == reference_bernoulli()[12]);
        CHECK(evaluate_native(FormulaId::faulhaber_recursion_13, 4, ctx) == q(-1, 30));
        CHECK_THROWS_AS(evaluate_native(FormulaId::double_stirling_15, 5, ctx), not_applicable_error);
    }
}
