#include <bgs/rational.hpp>

#include <cctype>
#include <ostream>

namespace bgs
{

Rational::Rational(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw rational_error("rational with zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw rational_error("division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

std::string Rational::to_string() const
{
    return m_value.get_str(10);
}

namespace
{

bool is_decimal_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (const char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_decimal_integer(num_text) || !is_decimal_integer(den_text) || den_text.front() == '-') {
        throw rational_error("malformed rational '" + std::string(text) + "'");
    }
    return Rational(BigInt(std::string(num_text), 10), BigInt(std::string(den_text), 10));
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_string();
}

} // namespace bgs
