#include <umbra/rational.hpp>

#include <cctype>
#include <string>

#include <umbra/error.hpp>

namespace umbra
{

namespace
{

mpz_class parse_integer(std::string_view s)
{
    std::string text(s);
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) {
        throw domain_error("malformed integer '" + text + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw domain_error("malformed integer '" + text + "'");
        }
    }
    if (text[0] == '+') {
        text.erase(0, 1);
    }
    return mpz_class(text, 10);
}

} // namespace

rational::rational(long num, long den)
{
    if (den == 0) {
        throw division_by_zero("rational with zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

rational::rational(mpq_class v) : m_value(std::move(v))
{
    m_value.canonicalize();
}

rational rational::from_strings(std::string_view num, std::string_view den)
{
    mpz_class n = parse_integer(num);
    mpz_class d = parse_integer(den);
    if (d == 0) {
        throw division_by_zero("rational with zero denominator");
    }
    return rational(mpq_class(n, d));
}

rational rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return rational(mpq_class(parse_integer(text)));
    }
    return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

rational rational::factorial(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return rational(mpq_class(r));
}

rational rational::binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return rational(mpq_class(r));
}

rational rational::falling(long v, unsigned long k)
{
    mpz_class r = 1;
    for (unsigned long i = 0; i < k; ++i) {
        r *= v - static_cast<long>(i);
    }
    return rational(mpq_class(r));
}

std::string rational::num_str() const
{
    return m_value.get_num().get_str();
}

std::string rational::den_str() const
{
    return m_value.get_den().get_str();
}

std::string rational::to_string() const
{
    return m_value.get_str();
}

rational rational::inverse() const
{
    if (is_zero()) {
        throw division_by_zero("inverse of zero");
    }
    return rational(mpq_class(1 / m_value));
}

rational rational::pow(long k) const
{
    if (k < 0) {
        return inverse().pow(-k);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), m_value.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(d.get_mpz_t(), m_value.get_den_mpz_t(), static_cast<unsigned long>(k));
    return rational(mpq_class(n, d));
}

rational &rational::operator/=(const rational &o)
{
    if (o.is_zero()) {
        throw division_by_zero("division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

} // namespace umbra
