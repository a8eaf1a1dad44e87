#ifndef BGS_RATIONAL_HPP
#define BGS_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bgs
{

// Arbitrary-precision signed integer. mpz_class already keeps the
// sign/magnitude pair consistent (zero has no sign).
using BigInt = mpz_class;

class rational_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Exact rational number, always reduced with a positive denominator, so
// structural equality is mathematical equality.
class Rational
{
public:
    Rational() = default;
    Rational(long v) : m_value(v) {}
    Rational(const BigInt &v) : m_value(v) {}
    // Throws rational_error when den == 0.
    Rational(const BigInt &num, const BigInt &den);

    BigInt numerator() const
    {
        return m_value.get_num();
    }
    BigInt denominator() const
    {
        return m_value.get_den();
    }
    bool is_zero() const
    {
        return sgn(m_value) == 0;
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }
    int sign() const
    {
        return sgn(m_value);
    }

    // "p/q", or "p" when q == 1.
    std::string to_string() const;
    // Accepts "p" or "p/q" in decimal with an optional leading '-'. The
    // result is reduced. Throws rational_error on malformed input.
    static Rational parse(std::string_view text);

    Rational &operator+=(const Rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    // Throws rational_error on division by zero.
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        r.m_value = -a.m_value;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_value == b.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    const mpq_class &raw() const
    {
        return m_value;
    }

private:
    mpq_class m_value;
};

// rat(num, den): reduced fraction, throws rational_error when den == 0.
inline Rational rat(const BigInt &num, const BigInt &den)
{
    return Rational(num, den);
}

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace bgs

#endif
