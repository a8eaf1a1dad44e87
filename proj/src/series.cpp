#include <bgs/series.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace bgs
{

TruncatedSeries::TruncatedSeries(std::size_t order) : m_coeffs(order + 1u) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Rational> coefficients)
    : m_coeffs(std::move(coefficients))
{
    m_coeffs.resize(order + 1u);
}

TruncatedSeries TruncatedSeries::exp(std::size_t order)
{
    TruncatedSeries r(order);
    Rational term(1);
    for (std::size_t j = 0; j <= order; ++j) {
        if (j > 0) {
            term /= Rational(static_cast<long>(j));
        }
        r.m_coeffs[j] = term;
    }
    return r;
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const Rational &c) { return c.is_zero(); });
}

void TruncatedSeries::check_order(const TruncatedSeries &o) const
{
    if (o.order() != order()) {
        throw series_error("series order mismatch: " + std::to_string(order()) + " vs " + std::to_string(o.order()));
    }
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &o)
{
    check_order(o);
    for (std::size_t j = 0; j < m_coeffs.size(); ++j) {
        m_coeffs[j] += o.m_coeffs[j];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &o)
{
    check_order(o);
    for (std::size_t j = 0; j < m_coeffs.size(); ++j) {
        m_coeffs[j] -= o.m_coeffs[j];
    }
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(const Rational &c)
{
    for (auto &x : m_coeffs) {
        x *= c;
    }
    return *this;
}

TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b)
{
    if (a.order() != b.order()) {
        throw series_error("series order mismatch: " + std::to_string(a.order()) + " vs "
                           + std::to_string(b.order()));
    }
    const auto n = a.order();
    std::vector<Rational> out(n + 1u);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return TruncatedSeries(n, std::move(out));
}

TruncatedSeries series_pow(const TruncatedSeries &base, unsigned exp)
{
    TruncatedSeries result(base.order(), {Rational(1)});
    TruncatedSeries sq = base;
    while (exp > 0) {
        if (exp & 1u) {
            result = series_mul(result, sq);
        }
        exp >>= 1u;
        if (exp > 0) {
            sq = series_mul(sq, sq);
        }
    }
    return result;
}

} // namespace bgs
