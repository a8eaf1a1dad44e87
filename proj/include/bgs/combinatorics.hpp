#ifndef BGS_COMBINATORICS_HPP
#define BGS_COMBINATORICS_HPP

#include <vector>

#include <bgs/rational.hpp>

namespace bgs
{

BigInt factorial(unsigned n);

// C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

// base^exp with 0^0 == 1.
BigInt int_pow(const BigInt &base, unsigned exp);

inline int sign_pow(unsigned exp)
{
    return exp % 2 == 0 ? 1 : -1;
}

/// Precomputed factorials 0!..max_n! with binomials derived from them.
///
/// Immutable after construction, so one table can be shared by every thread
/// in an evaluation session. Requests beyond the prepared range fall back to
/// the free functions above rather than failing.
class FactorialTable
{
public:
    explicit FactorialTable(unsigned max_n);

    unsigned max_n() const
    {
        return static_cast<unsigned>(m_fact.size() - 1);
    }
    BigInt factorial(unsigned n) const;
    BigInt binomial(unsigned n, unsigned k) const;

private:
    std::vector<BigInt> m_fact;
};

} // namespace bgs

#endif
