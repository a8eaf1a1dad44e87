#ifndef BGS_POLYNOMIAL_HPP
#define BGS_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <bgs/rational.hpp>

namespace bgs
{

// Dense univariate polynomial over the rationals. coefficients()[i] is the
// coefficient of x^i; the highest stored coefficient is never zero, so the
// zero polynomial has no coefficients at all.
class RationalPolynomial
{
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    // c * x^power
    static RationalPolynomial monomial(std::size_t power, const Rational &c = Rational(1));

    const std::vector<Rational> &coefficients() const
    {
        return m_coeffs;
    }
    // Zero beyond the stored range.
    Rational coefficient(std::size_t i) const;
    // std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const
    {
        return m_coeffs.empty();
    }

    // Human-readable form such as "2x^3 - 3x^2 + x".
    std::string to_string() const;

    RationalPolynomial &operator+=(const RationalPolynomial &o);
    RationalPolynomial &operator-=(const RationalPolynomial &o);
    RationalPolynomial &operator*=(const Rational &c);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial &b)
    {
        return a += b;
    }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial &b)
    {
        return a -= b;
    }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational &c)
    {
        return a *= c;
    }
    friend RationalPolynomial operator*(const RationalPolynomial &a, const RationalPolynomial &b);
    friend bool operator==(const RationalPolynomial &, const RationalPolynomial &) = default;

private:
    void trim();

    std::vector<Rational> m_coeffs;
};

RationalPolynomial poly_derivative(const RationalPolynomial &p);

// Horner evaluation.
Rational poly_eval(const RationalPolynomial &p, const Rational &v);

} // namespace bgs

#endif
