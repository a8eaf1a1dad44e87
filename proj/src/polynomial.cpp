#include <bgs/polynomial.hpp>

#include <algorithm>
#include <utility>

namespace bgs
{

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : m_coeffs(std::move(coefficients))
{
    trim();
}

RationalPolynomial RationalPolynomial::monomial(std::size_t power, const Rational &c)
{
    std::vector<Rational> v(power + 1u);
    v[power] = c;
    return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

Rational RationalPolynomial::coefficient(std::size_t i) const
{
    return i < m_coeffs.size() ? m_coeffs[i] : Rational{};
}

std::optional<std::size_t> RationalPolynomial::degree() const
{
    if (m_coeffs.empty()) {
        return std::nullopt;
    }
    return m_coeffs.size() - 1u;
}

std::string RationalPolynomial::to_string() const
{
    if (m_coeffs.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = m_coeffs.size(); i-- > 0;) {
        const Rational &c = m_coeffs[i];
        if (c.is_zero()) {
            continue;
        }
        const bool neg = c.sign() < 0;
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational mag = neg ? -c : c;
        const bool unit = mag == Rational(1);
        if (i == 0 || !unit) {
            out += mag.to_string();
        }
        if (i >= 1) {
            out += "x";
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

RationalPolynomial &RationalPolynomial::operator+=(const RationalPolynomial &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] += o.m_coeffs[i];
    }
    trim();
    return *this;
}

RationalPolynomial &RationalPolynomial::operator-=(const RationalPolynomial &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] -= o.m_coeffs[i];
    }
    trim();
    return *this;
}

RationalPolynomial &RationalPolynomial::operator*=(const Rational &c)
{
    for (auto &x : m_coeffs) {
        x *= c;
    }
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial &a, const RationalPolynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.m_coeffs.size() + b.m_coeffs.size() - 1u);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
            out[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return RationalPolynomial(std::move(out));
}

RationalPolynomial poly_derivative(const RationalPolynomial &p)
{
    const auto &c = p.coefficients();
    if (c.size() <= 1u) {
        return {};
    }
    std::vector<Rational> out;
    out.reserve(c.size() - 1u);
    for (std::size_t i = 1; i < c.size(); ++i) {
        out.push_back(c[i] * Rational(static_cast<long>(i)));
    }
    return RationalPolynomial(std::move(out));
}

Rational poly_eval(const RationalPolynomial &p, const Rational &v)
{
    const auto &c = p.coefficients();
    Rational acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * v + *it;
    }
    return acc;
}

} // namespace bgs
