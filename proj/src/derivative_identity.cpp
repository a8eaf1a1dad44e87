#include <bgs/derivative_identity.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bgs
{

DerivativeRule DerivativeRule::u_form(const Rational &alpha)
{
    return {RationalPolynomial({Rational{}, -alpha, -alpha})};
}

DerivativeRule DerivativeRule::v_form()
{
    return {RationalPolynomial({Rational{}, Rational(-1), Rational(1)})};
}

RationalPolynomial DerivativeRule::apply(const RationalPolynomial &p) const
{
    return poly_derivative(p) * substitution_factor;
}

RationalPolynomial DerivativeRule::apply_n(RationalPolynomial p, unsigned k) const
{
    for (unsigned i = 0; i < k; ++i) {
        p = apply(p);
    }
    return p;
}

RationalPolynomial derivative_polynomial(unsigned k, const Rational &alpha)
{
    return DerivativeRule::u_form(alpha).apply_n(RationalPolynomial::monomial(1), k);
}

RationalPolynomial derivative_polynomial_closed_form(unsigned k, const Rational &alpha, const FormulaContext &ctx)
{
    ctx.require_rows(k + 1u);
    Rational scale(int_pow(alpha.numerator(), k), int_pow(alpha.denominator(), k));
    if (k % 2 == 1) {
        scale = -scale;
    }
    std::vector<Rational> c(k + 2u);
    for (unsigned m = 1; m <= k + 1u; ++m) {
        c[m] = scale * Rational(ctx.factorials().factorial(m - 1u) * ctx.triangle()(k + 1u, m));
    }
    return RationalPolynomial(std::move(c));
}

RationalPolynomial eq18_polynomial(unsigned k)
{
    return DerivativeRule::v_form().apply_n(RationalPolynomial::monomial(1), k);
}

RationalPolynomial eq18_polynomial_closed_form(unsigned k, const FormulaContext &ctx)
{
    ctx.require_rows(k + 1u);
    std::vector<Rational> c(k + 2u);
    for (unsigned m = 1; m <= k + 1u; ++m) {
        Rational v(ctx.factorials().factorial(m - 1u) * ctx.triangle()(k + 1u, m));
        c[m] = sign_pow(k + 1u + m) > 0 ? v : -v;
    }
    return RationalPolynomial(std::move(c));
}

Rational genocchi_via_proof(unsigned k)
{
    if (k == 0) {
        throw std::invalid_argument("proof-chain Genocchi value requires k >= 1");
    }
    const Rational at_zero = poly_eval(eq18_polynomial(k - 1u), Rational(BigInt(1), BigInt(2)));
    Rational g = Rational(static_cast<long>(2u * k)) * at_zero;
    if (!g.is_integer()) {
        throw std::logic_error("proof-chain Genocchi value " + g.to_string() + " is not an integer at k = "
                               + std::to_string(k));
    }
    return g;
}

} // namespace bgs
