#ifndef BGS_SERIES_HPP
#define BGS_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <bgs/rational.hpp>

namespace bgs
{

class series_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Power series in one variable, truncated at x^order. Exactly order + 1
// coefficients are kept; anything above is dropped.
class TruncatedSeries
{
public:
    explicit TruncatedSeries(std::size_t order);
    // Missing coefficients are zero, excess ones are dropped.
    TruncatedSeries(std::size_t order, std::vector<Rational> coefficients);

    // e^x mod x^(order+1).
    static TruncatedSeries exp(std::size_t order);

    std::size_t order() const
    {
        return m_coeffs.size() - 1u;
    }
    const Rational &operator[](std::size_t j) const
    {
        return m_coeffs.at(j);
    }
    const std::vector<Rational> &coefficients() const
    {
        return m_coeffs;
    }
    bool is_zero() const;

    TruncatedSeries &operator+=(const TruncatedSeries &o);
    TruncatedSeries &operator-=(const TruncatedSeries &o);
    TruncatedSeries &operator*=(const Rational &c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a -= b;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational &c)
    {
        return a *= c;
    }
    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    void check_order(const TruncatedSeries &o) const;

    std::vector<Rational> m_coeffs;
};

// Cauchy product truncated at the shared order. Throws series_error when
// the orders differ.
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b);

inline TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return series_mul(a, b);
}

TruncatedSeries series_pow(const TruncatedSeries &base, unsigned exp);

} // namespace bgs

#endif
