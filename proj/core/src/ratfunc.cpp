#include <umbra/ratfunc.hpp>

#include <umbra/error.hpp>

namespace umbra
{

ratfunc ratfunc::normalize(const lambda_poly &num, const lambda_poly &den)
{
    if (den.is_zero()) {
        throw division_by_zero("division by zero polynomial");
    }
    if (num.is_zero()) {
        return ratfunc();
    }
    const lambda_poly g = gcd(num, den);
    lambda_poly n = g.is_one() ? num : exact_div(num, g);
    lambda_poly d = g.is_one() ? den : exact_div(den, g);
    const rational lead = d.leading();
    if (!lead.is_one()) {
        const rational inv = lead.inverse();
        n *= inv;
        d *= inv;
    }
    return ratfunc(std::move(n), std::move(d), canonical_tag{});
}

std::optional<rational> ratfunc::as_rational() const
{
    if (m_num.is_constant() && m_den.is_one()) {
        return m_num.coeff(0);
    }
    return std::nullopt;
}

ratfunc ratfunc::inverse() const
{
    if (is_zero()) {
        throw division_by_zero("division by zero");
    }
    const rational inv = m_num.leading().inverse();
    return ratfunc(m_den * inv, m_num * inv, canonical_tag{});
}

ratfunc &ratfunc::operator+=(const ratfunc &o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    if (m_den == o.m_den) {
        lambda_poly n = m_num + o.m_num;
        if (m_den.is_one()) {
            m_num = std::move(n);
            return *this;
        }
        return *this = normalize(n, m_den);
    }
    if (m_den.is_one()) {
        m_num = m_num * o.m_den + o.m_num;
        m_den = o.m_den;
        return *this;
    }
    if (o.m_den.is_one()) {
        m_num += o.m_num * m_den;
        return *this;
    }
    // a/b + c/d with g = gcd(b, d): only g can share factors with the new numerator.
    const lambda_poly g = gcd(m_den, o.m_den);
    if (g.is_one()) {
        m_num = m_num * o.m_den + o.m_num * m_den;
        m_den = m_den * o.m_den;
        return *this;
    }
    const lambda_poly b1 = exact_div(m_den, g);
    const lambda_poly d1 = exact_div(o.m_den, g);
    lambda_poly t = m_num * d1 + o.m_num * b1;
    if (t.is_zero()) {
        return *this = ratfunc();
    }
    const lambda_poly h = gcd(t, g);
    if (!h.is_one()) {
        t = exact_div(t, h);
        m_den = exact_div(m_den, h) * d1;
    } else {
        m_den = m_den * d1;
    }
    m_num = std::move(t);
    return *this;
}

ratfunc &ratfunc::operator*=(const ratfunc &o)
{
    if (is_zero() || o.is_zero()) {
        return *this = ratfunc();
    }
    if (m_den.is_one() && o.m_den.is_one()) {
        m_num = m_num * o.m_num;
        return *this;
    }
    // Cross-cancel: gcd(a, d) and gcd(c, b) for (a/b)(c/d).
    const lambda_poly g1 = gcd(m_num, o.m_den);
    const lambda_poly g2 = gcd(o.m_num, m_den);
    const lambda_poly a = g1.is_one() ? m_num : exact_div(m_num, g1);
    const lambda_poly d = g1.is_one() ? o.m_den : exact_div(o.m_den, g1);
    const lambda_poly c = g2.is_one() ? o.m_num : exact_div(o.m_num, g2);
    const lambda_poly b = g2.is_one() ? m_den : exact_div(m_den, g2);
    m_num = a * c;
    m_den = b * d;
    return *this;
}

ratfunc &ratfunc::operator*=(const rational &c)
{
    if (c.is_zero()) {
        return *this = ratfunc();
    }
    m_num *= c;
    return *this;
}

rational eval_at_lambda(const ratfunc &a, const rational &v)
{
    if (v.is_one()) {
        throw domain_error("lambda must differ from 1");
    }
    const rational d = a.den().eval(v);
    if (d.is_zero()) {
        throw division_by_zero("pole of rational function at lambda = " + v.to_string());
    }
    return a.num().eval(v) / d;
}

} // namespace umbra
