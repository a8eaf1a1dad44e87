#include <bgs/formulas.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace bgs
{

namespace
{

void require_positive(unsigned k, const char *what)
{
    if (k == 0) {
        throw std::invalid_argument(std::string(what) + " requires k >= 1");
    }
}

// sum_{k=0..j} (-1)^(j-k) C(j,k) k^e, i.e. the j-th forward difference of x^e at 0.
BigInt alternating_power_sum(unsigned j, unsigned e, const FactorialTable &f)
{
    BigInt sum;
    for (unsigned k = 0; k <= j; ++k) {
        const BigInt term = f.binomial(j, k) * int_pow(BigInt(k), e);
        if (sign_pow(j - k) > 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

Rational signed_term(unsigned parity, Rational v)
{
    return sign_pow(parity) > 0 ? std::move(v) : -v;
}

} // namespace

unsigned required_triangle_rows(unsigned n)
{
    return std::max(2u * n, n + 1u);
}

FormulaContext::FormulaContext(unsigned max_row)
    : m_triangle(std::make_shared<const StirlingTriangle>(StirlingTriangle::build(max_row))),
      m_factorials(max_row + 1u)
{
}

FormulaContext::FormulaContext(std::shared_ptr<const StirlingTriangle> triangle)
    : m_triangle(std::move(triangle)), m_factorials(m_triangle->max_n() + 1u)
{
}

void FormulaContext::require_rows(unsigned row) const
{
    if (row > m_triangle->max_n()) {
        throw std::invalid_argument("Stirling triangle covers rows up to " + std::to_string(m_triangle->max_n())
                                    + ", row " + std::to_string(row) + " required");
    }
}

std::vector<Rational> bernoulli_series_oracle_sequence(unsigned max_n)
{
    std::vector<Rational> b;
    b.reserve(max_n + 1u);
    b.emplace_back(1);
    for (unsigned n = 1; n <= max_n; ++n) {
        Rational acc;
        for (unsigned j = 0; j < n; ++j) {
            acc += Rational(binomial(n + 1u, j)) * b[j];
        }
        b.push_back(-acc / Rational(static_cast<long>(n + 1u)));
    }
    return b;
}

Rational bernoulli_series_oracle(unsigned n)
{
    return bernoulli_series_oracle_sequence(n).back();
}

Rational bernoulli_higgins(unsigned n)
{
    Rational total;
    BigInt inner;
    for (unsigned k = 0; k <= n; ++k) {
        inner = 0;
        for (unsigned j = 0; j <= k; ++j) {
            const BigInt term = binomial(k, j) * int_pow(BigInt(j), n);
            if (sign_pow(j) > 0) {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += Rational(inner, BigInt(k + 1u));
    }
    return total;
}

Rational bernoulli_stirling_single(unsigned n, const FormulaContext &ctx)
{
    ctx.require_rows(n);
    const auto &s = ctx.triangle();
    const auto &f = ctx.factorials();
    Rational total;
    for (unsigned k = 0; k <= n; ++k) {
        total += signed_term(k, Rational(f.factorial(k) * s(n, k), BigInt(k + 1u)));
    }
    return total;
}

Rational bernoulli_stirling_single(unsigned n)
{
    return bernoulli_stirling_single(n, FormulaContext(n));
}

Rational bernoulli_gould_double(unsigned n, const FormulaContext &ctx)
{
    const auto &f = ctx.factorials();
    Rational total;
    for (unsigned j = 0; j <= n; ++j) {
        const BigInt inner = alternating_power_sum(j, n + j, f);
        const Rational term(f.binomial(n + 1u, j + 1u) * f.factorial(n) * inner, f.factorial(n + j));
        total += signed_term(j, term);
    }
    return total;
}

Rational bernoulli_gould_double(unsigned n)
{
    return bernoulli_gould_double(n, FormulaContext(0u));
}

Rational bernoulli_stirling_ratio(unsigned n, const FormulaContext &ctx)
{
    ctx.require_rows(2u * n);
    const auto &s = ctx.triangle();
    const auto &f = ctx.factorials();
    Rational total;
    for (unsigned i = 0; i <= n; ++i) {
        const Rational term(f.binomial(n + 1u, i + 1u) * s(n + i, i), f.binomial(n + i, i));
        total += signed_term(i, term);
    }
    return total;
}

Rational bernoulli_stirling_ratio(unsigned n)
{
    return bernoulli_stirling_ratio(n, FormulaContext(2u * n));
}

Rational FaulhaberTable::evaluate(const BigInt &n) const
{
    Rational acc;
    const Rational x(n);
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

FaulhaberTable faulhaber_coefficients(unsigned p)
{
    const unsigned points = p + 2u;

    // Power sums at n = 0..p+1, reduced in place to forward differences at 0.
    std::vector<BigInt> diff(points);
    for (unsigned n = 1; n < points; ++n) {
        diff[n] = diff[n - 1u] + int_pow(BigInt(n), p);
    }
    for (unsigned j = 1; j < points; ++j) {
        for (unsigned n = points - 1u; n >= j; --n) {
            diff[n] -= diff[n - 1u];
        }
    }

    // f(n) = sum_j diff[j] C(n, j); expand C(n, j) = n(n-1)...(n-j+1)/j!.
    std::vector<Rational> coeffs(points);
    std::vector<BigInt> falling{BigInt(1)};
    BigInt jfact = 1;
    for (unsigned j = 0; j < points; ++j) {
        if (j > 0) {
            // falling *= (n - (j-1))
            std::vector<BigInt> next(falling.size() + 1u);
            for (std::size_t i = 0; i < falling.size(); ++i) {
                next[i + 1u] += falling[i];
                next[i] -= falling[i] * (j - 1u);
            }
            falling = std::move(next);
            jfact *= j;
        }
        if (diff[j] == 0) {
            continue;
        }
        const Rational scale(diff[j], jfact);
        for (std::size_t i = 0; i < falling.size(); ++i) {
            if (falling[i] != 0) {
                coeffs[i] += scale * Rational(falling[i]);
            }
        }
    }
    return FaulhaberTable{p, std::move(coeffs)};
}

Rational bernoulli_faulhaber_recursion(unsigned k)
{
    require_positive(k, "Faulhaber recursion");
    const FaulhaberTable a = faulhaber_coefficients(2u * k - 1u);
    Rational sum;
    for (unsigned i = 1; i < k; ++i) {
        const unsigned m = 2u * (k - i);
        sum += a.coefficients[m] / Rational(static_cast<long>(m + 1u));
    }
    return Rational(BigInt(1), BigInt(2)) - Rational(BigInt(1), BigInt(2u * k + 1u))
           - Rational(static_cast<long>(2u * k)) * sum;
}

Rational bernoulli_tangent_double_as_printed(unsigned k)
{
    require_positive(k, "tangent double sum");
    BigInt sum;
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned l = 0; l + i < k; ++l) {
            const BigInt term = binomial(2u * k, l) * int_pow(BigInt(k - i - l), 2u * k - 1u);
            if (sign_pow(i + l) > 0) {
                sum += term;
            } else {
                sum -= term;
            }
        }
    }
    const BigInt den = int_pow(BigInt(2), 2u * (k - 1u)) * (int_pow(BigInt(2), 2u * k) - 1);
    return signed_term(k - 1u, Rational(sum * k, den));
}

Rational bernoulli_double_stirling(unsigned k, const FormulaContext &ctx)
{
    require_positive(k, "double Stirling formula");
    const unsigned n = 2u * k;
    ctx.require_rows(n + 1u);
    const auto &s = ctx.triangle();
    const auto &f = ctx.factorials();

    Rational first;
    for (unsigned m = 1; m < n; ++m) {
        first += Rational(s(n + 1u, m + 1u) * s(n, n - m), f.binomial(n, m));
    }
    Rational second;
    for (unsigned m = 1; m <= n; ++m) {
        second += Rational(s(n, m) * s(n + 1u, n - m + 1u), f.binomial(n, m - 1u));
    }
    return Rational(1) + first - Rational(BigInt(n), BigInt(n + 1u)) * second;
}

Rational bernoulli_double_stirling(unsigned k)
{
    require_positive(k, "double Stirling formula");
    return bernoulli_double_stirling(k, FormulaContext(2u * k + 1u));
}

Rational genocchi_theorem(unsigned k, const FormulaContext &ctx)
{
    require_positive(k, "Genocchi formula");
    ctx.require_rows(k);
    const auto &s = ctx.triangle();
    const auto &f = ctx.factorials();
    Rational sum;
    for (unsigned m = 1; m <= k; ++m) {
        const Rational term(f.factorial(m - 1u) * s(k, m), int_pow(BigInt(2), m - 1u));
        sum += signed_term(m, term);
    }
    Rational g = signed_term(k, Rational(static_cast<long>(k)) * sum);
    if (!g.is_integer()) {
        throw std::logic_error("Genocchi formula produced non-integer " + g.to_string() + " at k = "
                               + std::to_string(k));
    }
    return g;
}

Rational genocchi_theorem(unsigned k)
{
    return genocchi_theorem(k, FormulaContext(k));
}

Rational genocchi_from_bernoulli(unsigned n, const Rational &b)
{
    require_positive(n, "Genocchi/Bernoulli bridge");
    return Rational(BigInt(2 * (1 - int_pow(BigInt(2), n)))) * b;
}

Rational bernoulli_from_genocchi(unsigned n, const Rational &g)
{
    require_positive(n, "Bernoulli/Genocchi inversion");
    return g / Rational(BigInt(2 * (1 - int_pow(BigInt(2), n))));
}

Rational euler_at_zero(unsigned n, const FormulaContext &ctx)
{
    require_positive(n, "Euler value at zero");
    return genocchi_theorem(2u * n, ctx) / Rational(static_cast<long>(2u * n));
}

Rational euler_at_zero(unsigned n)
{
    return euler_at_zero(n, FormulaContext(2u * n));
}

} // namespace bgs
