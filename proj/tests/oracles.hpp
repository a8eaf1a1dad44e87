// Independent reference computations used only by the tests. Nothing here
// calls into the formula or Stirling code it is used to check.
#ifndef BGS_TESTS_ORACLES_HPP
#define BGS_TESTS_ORACLES_HPP

#include <stdexcept>
#include <vector>

#include <bgs/series.hpp>

namespace bgs::testing
{

inline BigInt product_factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

// 1/a mod x^(N+1); requires a[0] != 0.
inline TruncatedSeries series_reciprocal(const TruncatedSeries &a)
{
    if (a[0].is_zero()) {
        throw std::invalid_argument("series not invertible");
    }
    const auto n = a.order();
    std::vector<Rational> r(n + 1u);
    r[0] = Rational(1) / a[0];
    for (std::size_t j = 1; j <= n; ++j) {
        Rational acc;
        for (std::size_t i = 1; i <= j; ++i) {
            acc += a[i] * r[j - i];
        }
        r[j] = -acc / a[0];
    }
    return TruncatedSeries(n, std::move(r));
}

// B_0..B_N as N! [x^n] of x/(e^x - 1) = 1 / sum_j x^j/(j+1)!.
inline std::vector<Rational> bernoulli_by_series_division(unsigned max_n)
{
    std::vector<Rational> c(max_n + 1u);
    for (unsigned j = 0; j <= max_n; ++j) {
        c[j] = Rational(BigInt(1), product_factorial(j + 1u));
    }
    const auto inv = series_reciprocal(TruncatedSeries(max_n, c));
    std::vector<Rational> b;
    for (unsigned n = 0; n <= max_n; ++n) {
        b.push_back(inv[n] * Rational(product_factorial(n)));
    }
    return b;
}

// G_1..G_N (index 0 holds G_0 = 0) from 2t/(e^t + 1).
inline std::vector<Rational> genocchi_by_series_division(unsigned max_n)
{
    auto denom = TruncatedSeries::exp(max_n);
    denom += TruncatedSeries(max_n, {Rational(1)});
    std::vector<Rational> two_t(max_n + 1u);
    if (max_n >= 1) {
        two_t[1] = Rational(2);
    }
    const auto g = series_mul(TruncatedSeries(max_n, two_t), series_reciprocal(denom));
    std::vector<Rational> out;
    for (unsigned n = 0; n <= max_n; ++n) {
        out.push_back(g[n] * Rational(product_factorial(n)));
    }
    return out;
}

// sum_{m=1..n} m^p by direct summation.
inline BigInt power_sum(unsigned long n, unsigned p)
{
    BigInt s;
    for (unsigned long m = 1; m <= n; ++m) {
        BigInt t;
        mpz_ui_pow_ui(t.get_mpz_t(), m, p);
        s += t;
    }
    return s;
}

} // namespace bgs::testing

#endif
