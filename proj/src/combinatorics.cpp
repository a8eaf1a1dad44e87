#include <bgs/combinatorics.hpp>

namespace bgs
{

BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt int_pow(const BigInt &base, unsigned exp)
{
    // GMP also defines 0^0 = 1, but the convention is load-bearing here.
    if (exp == 0) {
        return 1;
    }
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

FactorialTable::FactorialTable(unsigned max_n)
{
    m_fact.reserve(max_n + 1u);
    m_fact.emplace_back(1);
    for (unsigned i = 1; i <= max_n; ++i) {
        m_fact.push_back(m_fact.back() * i);
    }
}

BigInt FactorialTable::factorial(unsigned n) const
{
    if (n < m_fact.size()) {
        return m_fact[n];
    }
    return bgs::factorial(n);
}

BigInt FactorialTable::binomial(unsigned n, unsigned k) const
{
    if (k > n) {
        return 0;
    }
    if (n < m_fact.size()) {
        BigInt r = m_fact[n] / m_fact[k];
        return r / m_fact[n - k];
    }
    return bgs::binomial(n, k);
}

} // namespace bgs
