#ifndef BGS_FORMULAS_HPP
#define BGS_FORMULAS_HPP

#include <memory>
#include <vector>

#include <bgs/combinatorics.hpp>
#include <bgs/rational.hpp>
#include <bgs/stirling.hpp>

namespace bgs
{

// Values every trusted Bernoulli formula must reproduce.
namespace bernoulli_constants
{
inline const Rational b0{1};
inline const Rational b1{BigInt(-1), BigInt(2)};
// B_{2n+3} for n >= 0.
inline const Rational odd_from_three{0};
} // namespace bernoulli_constants

// Row count (largest n in S(n, .)) any formula needs at Bernoulli index n.
unsigned required_triangle_rows(unsigned n);

/// Shared, read-only inputs of a batch of formula evaluations: a Stirling
/// triangle and a factorial table sized to match it.
///
/// Nothing in a context is mutated after construction, so a single context
/// may serve concurrent evaluations.
class FormulaContext
{
public:
    // Builds a triangle with rows 0..max_row.
    explicit FormulaContext(unsigned max_row);
    explicit FormulaContext(std::shared_ptr<const StirlingTriangle> triangle);

    // Smallest context that serves every formula at indices 0..max_index.
    static FormulaContext for_index(unsigned max_index)
    {
        return FormulaContext(required_triangle_rows(max_index));
    }

    const StirlingTriangle &triangle() const
    {
        return *m_triangle;
    }
    const FactorialTable &factorials() const
    {
        return m_factorials;
    }
    // Throws std::invalid_argument when the triangle lacks row `row`.
    void require_rows(unsigned row) const;

private:
    std::shared_ptr<const StirlingTriangle> m_triangle;
    FactorialTable m_factorials;
};

// Ground truth: the recurrence sum_{j=0..n} C(n+1, j) B_j = 0 for n >= 1,
// read off x = (e^x - 1) * sum B_n x^n / n!. Uses no Stirling numbers.
Rational bernoulli_series_oracle(unsigned n);
// B_0..B_max_n in one pass of the same recurrence.
std::vector<Rational> bernoulli_series_oracle_sequence(unsigned max_n);

// sum_{k=0..n} 1/(k+1) sum_{j=0..k} (-1)^j C(k,j) j^n
Rational bernoulli_higgins(unsigned n);

// sum_{k=0..n} (-1)^k k!/(k+1) S(n,k)
Rational bernoulli_stirling_single(unsigned n, const FormulaContext &ctx);
Rational bernoulli_stirling_single(unsigned n);

// sum_{j=0..n} (-1)^j C(n+1,j+1) n!/(n+j)! sum_{k=0..j} (-1)^(j-k) C(j,k) k^(n+j)
Rational bernoulli_gould_double(unsigned n, const FormulaContext &ctx);
Rational bernoulli_gould_double(unsigned n);

// sum_{i=0..n} (-1)^i C(n+1,i+1)/C(n+i,i) S(n+i,i); needs rows up to 2n.
Rational bernoulli_stirling_ratio(unsigned n, const FormulaContext &ctx);
Rational bernoulli_stirling_ratio(unsigned n);

/// Coefficients of the power-sum polynomial
/// sum_{m=1..n} m^p = sum_{m=0..p+1} A_m n^m.
struct FaulhaberTable {
    unsigned exponent = 0;
    // A_0..A_{p+1}
    std::vector<Rational> coefficients;

    Rational evaluate(const BigInt &n) const;
};

// Exact interpolation through (n, sum_{m<=n} m^p) for n = 0..p+1 using
// forward differences in the binomial basis.
FaulhaberTable faulhaber_coefficients(unsigned p);

// B_{2k} = 1/2 - 1/(2k+1) - 2k sum_{i=1..k-1} A_{2(k-i)}/(2(k-i)+1), with
// A_m taken from the power sums of exponent 2k-1. Requires k >= 1.
Rational bernoulli_faulhaber_recursion(unsigned k);

// The tangent-number double sum exactly as published:
// (-1)^(k-1) k / (2^(2(k-1)) (2^(2k) - 1))
//   * sum_{i=0..k-1} sum_{l=0..k-i-1} (-1)^(i+l) C(2k,l) (k-i-l)^(2k-1).
// This does not equal B_{2k}; it is kept verbatim so the harness can report
// the discrepancy. Requires k >= 1.
Rational bernoulli_tangent_double_as_printed(unsigned k);

// B_{2k} from products of Stirling numbers of rows 2k and 2k+1. Requires k >= 1.
Rational bernoulli_double_stirling(unsigned k, const FormulaContext &ctx);
Rational bernoulli_double_stirling(unsigned k);

// G_k = (-1)^k k sum_{m=1..k} (-1)^m (m-1)!/2^(m-1) S(k,m). Requires k >= 1.
// Throws std::logic_error if the sum does not reduce to an integer.
Rational genocchi_theorem(unsigned k, const FormulaContext &ctx);
Rational genocchi_theorem(unsigned k);

// G_n = 2(1 - 2^n) B_n, n >= 1.
Rational genocchi_from_bernoulli(unsigned n, const Rational &b);
// B_n = G_n / (2(1 - 2^n)). Throws std::invalid_argument for n == 0.
Rational bernoulli_from_genocchi(unsigned n, const Rational &g);

// E_{2n-1}(0) = G_{2n} / (2n), n >= 1.
Rational euler_at_zero(unsigned n, const FormulaContext &ctx);
Rational euler_at_zero(unsigned n);

} // namespace bgs

#endif
