#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace umbra
{

/// Exact rational number backed by GMP.
///
/// Always held in lowest terms with a positive denominator; zero is 0/1.
class rational
{
public:
    rational() = default;
    rational(long n) : m_value(n) {}
    rational(long num, long den);
    explicit rational(mpq_class v);

    /// Builds num/den from decimal strings, e.g. {"-3", "4"}.
    static rational from_strings(std::string_view num, std::string_view den);
    /// Accepts "p" or "p/q" with optional leading sign.
    static rational parse(std::string_view text);

    static rational factorial(unsigned long n);
    static rational binomial(unsigned long n, unsigned long k);
    /// Falling factorial (v)_k = v(v-1)...(v-k+1) of an integer; (v)_0 = 1.
    static rational falling(long v, unsigned long k);

    std::string num_str() const;
    std::string den_str() const;
    std::string to_string() const;

    bool is_zero() const { return sgn(m_value) == 0; }
    bool is_one() const { return m_value == 1; }
    bool is_integer() const { return m_value.get_den() == 1; }
    int sign() const { return sgn(m_value); }

    rational inverse() const;
    rational pow(long k) const;

    const mpq_class &get() const { return m_value; }

    rational operator-() const { return rational(mpq_class(-m_value)); }
    rational &operator+=(const rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    rational &operator-=(const rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    rational &operator*=(const rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    rational &operator/=(const rational &o);

    friend rational operator+(rational a, const rational &b) { return a += b; }
    friend rational operator-(rational a, const rational &b) { return a -= b; }
    friend rational operator*(rational a, const rational &b) { return a *= b; }
    friend rational operator/(rational a, const rational &b) { return a /= b; }

    friend bool operator==(const rational &a, const rational &b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const rational &a, const rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream &operator<<(std::ostream &os, const rational &r) { return os << r.to_string(); }

private:
    mpq_class m_value;
};

} // namespace umbra
