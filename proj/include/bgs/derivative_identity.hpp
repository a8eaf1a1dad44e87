#ifndef BGS_DERIVATIVE_IDENTITY_HPP
#define BGS_DERIVATIVE_IDENTITY_HPP

#include <bgs/formulas.hpp>
#include <bgs/polynomial.hpp>
#include <bgs/rational.hpp>

namespace bgs
{

/// Formal chain rule for an indeterminate x = x(t) whose t-derivative is a
/// polynomial in x itself: d/dt p(x) = p'(x) * substitution_factor(x).
///
/// For x = 1/(lambda e^(alpha t) - 1) the factor is -alpha (x + x^2), for
/// every lambda; lambda only matters once x is given a numeric value.
/// For x = 1/(e^t + 1) it is x^2 - x.
struct DerivativeRule {
    RationalPolynomial substitution_factor;

    static DerivativeRule u_form(const Rational &alpha);
    static DerivativeRule v_form();

    RationalPolynomial apply(const RationalPolynomial &p) const;
    // k-fold application starting from p.
    RationalPolynomial apply_n(RationalPolynomial p, unsigned k) const;
};

// k-th t-derivative of x = 1/(lambda e^(alpha t) - 1), as a polynomial in x.
RationalPolynomial derivative_polynomial(unsigned k, const Rational &alpha);

// (-1)^k alpha^k sum_{m=1..k+1} (m-1)! S(k+1,m) x^m
RationalPolynomial derivative_polynomial_closed_form(unsigned k, const Rational &alpha, const FormulaContext &ctx);

// k-th t-derivative of x = 1/(e^t + 1), as a polynomial in x.
RationalPolynomial eq18_polynomial(unsigned k);

// (-1)^(k+1) sum_{m=1..k+1} (-1)^m (m-1)! S(k+1,m) x^m
RationalPolynomial eq18_polynomial_closed_form(unsigned k, const FormulaContext &ctx);

// G_k = 2k * [ (k-1)-th derivative of 1/(e^t+1) ] at t = 0, where x = 1/2.
// Throws std::invalid_argument for k == 0 and std::logic_error for a
// non-integer result.
Rational genocchi_via_proof(unsigned k);

} // namespace bgs

#endif
