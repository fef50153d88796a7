#include <umbra/lambda_poly.hpp>

#include <algorithm>

#include <umbra/error.hpp>

namespace umbra
{

lambda_poly::lambda_poly(std::vector<rational> coeffs) : m_coeffs(std::move(coeffs))
{
    trim();
}

lambda_poly::lambda_poly(const rational &c)
{
    if (!c.is_zero()) {
        m_coeffs.push_back(c);
    }
}

lambda_poly lambda_poly::lambda()
{
    return monomial(rational(1), 1);
}

lambda_poly lambda_poly::monomial(const rational &c, std::size_t k)
{
    if (c.is_zero()) {
        return {};
    }
    std::vector<rational> v(k + 1);
    v[k] = c;
    return lambda_poly(std::move(v));
}

lambda_poly lambda_poly::linear_power(const rational &r, std::size_t k)
{
    // Binomial expansion of (lambda - r)^k.
    std::vector<rational> v(k + 1);
    const rational neg = -r;
    for (std::size_t j = 0; j <= k; ++j) {
        v[j] = rational::binomial(k, j) * neg.pow(static_cast<long>(k - j));
    }
    return lambda_poly(std::move(v));
}

void lambda_poly::trim()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

rational lambda_poly::eval(const rational &v) const
{
    rational acc;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

lambda_poly lambda_poly::monic() const
{
    if (is_zero() || leading().is_one()) {
        return *this;
    }
    return *this * leading().inverse();
}

lambda_poly lambda_poly::operator-() const
{
    lambda_poly r = *this;
    for (auto &c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

lambda_poly &lambda_poly::operator+=(const lambda_poly &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] += o.m_coeffs[i];
    }
    trim();
    return *this;
}

lambda_poly &lambda_poly::operator-=(const lambda_poly &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] -= o.m_coeffs[i];
    }
    trim();
    return *this;
}

lambda_poly &lambda_poly::operator*=(const rational &c)
{
    if (c.is_zero()) {
        m_coeffs.clear();
        return *this;
    }
    for (auto &x : m_coeffs) {
        x *= c;
    }
    return *this;
}

lambda_poly operator*(const lambda_poly &a, const lambda_poly &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<rational> out(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        if (a.m_coeffs[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
            out[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return lambda_poly(std::move(out));
}

std::size_t lambda_poly::root_multiplicity(const rational &r) const
{
    if (is_zero()) {
        return 0;
    }
    std::size_t mult = 0;
    std::vector<rational> cur = m_coeffs;
    while (cur.size() > 1) {
        // Synthetic division by (lambda - r).
        std::vector<rational> q(cur.size() - 1);
        rational carry;
        for (std::size_t i = cur.size(); i-- > 1;) {
            carry = carry * r + cur[i];
            q[i - 1] = carry;
        }
        const rational rem = carry * r + cur[0];
        if (!rem.is_zero()) {
            break;
        }
        ++mult;
        cur = std::move(q);
    }
    return mult;
}

lambda_poly lambda_poly::divide_linear_power(const rational &r, std::size_t k) const
{
    std::vector<rational> cur = m_coeffs;
    for (std::size_t step = 0; step < k; ++step) {
        if (cur.size() <= 1) {
            throw consistency_error("polynomial not divisible by linear power");
        }
        std::vector<rational> q(cur.size() - 1);
        rational carry;
        for (std::size_t i = cur.size(); i-- > 1;) {
            carry = carry * r + cur[i];
            q[i - 1] = carry;
        }
        if (!(carry * r + cur[0]).is_zero()) {
            throw consistency_error("polynomial not divisible by linear power");
        }
        cur = std::move(q);
    }
    return lambda_poly(std::move(cur));
}

std::optional<std::pair<rational, std::size_t>> lambda_poly::as_linear_power() const
{
    const int d = degree();
    if (d < 1) {
        return std::nullopt;
    }
    const auto k = static_cast<std::size_t>(d);
    // For c(lambda - r)^k the lambda^{k-1} coefficient is -c k r.
    const rational r = -m_coeffs[k - 1] / (m_coeffs[k] * rational(static_cast<long>(k)));
    if (k == 1 || root_multiplicity(r) == k) {
        return std::pair{r, k};
    }
    return std::nullopt;
}

std::pair<lambda_poly, lambda_poly> divmod(const lambda_poly &a, const lambda_poly &b)
{
    if (b.is_zero()) {
        throw division_by_zero("division by zero polynomial");
    }
    if (a.degree() < b.degree()) {
        return {lambda_poly(), a};
    }
    std::vector<rational> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<rational> q(rem.size() - db);
    const rational inv_lead = b.leading().inverse();
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) {
            continue;
        }
        const rational factor = rem[i] * inv_lead;
        q[i - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i - db + j] -= factor * b.coeffs()[j];
        }
    }
    rem.resize(db);
    return {lambda_poly(std::move(q)), lambda_poly(std::move(rem))};
}

lambda_poly exact_div(const lambda_poly &a, const lambda_poly &b)
{
    if (b.is_constant()) {
        if (b.is_zero()) {
            throw division_by_zero("division by zero polynomial");
        }
        return a * b.leading().inverse();
    }
    if (auto lp = b.as_linear_power()) {
        return a.divide_linear_power(lp->first, lp->second) * b.leading().inverse();
    }
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw consistency_error("inexact polynomial division");
    }
    return q;
}

lambda_poly gcd(const lambda_poly &a, const lambda_poly &b)
{
    if (a.is_zero()) {
        return b.monic();
    }
    if (b.is_zero()) {
        return a.monic();
    }
    if (a.is_constant() || b.is_constant()) {
        return lambda_poly(rational(1));
    }
    // Denominators in this engine are overwhelmingly powers of (lambda - 1);
    // their gcd with anything is a multiplicity count.
    for (const auto *p : {&b, &a}) {
        if (auto lp = p->as_linear_power()) {
            const lambda_poly &other = (p == &b) ? a : b;
            const std::size_t m = std::min(lp->second, other.root_multiplicity(lp->first));
            return lambda_poly::linear_power(lp->first, m);
        }
    }
    lambda_poly x = a.monic();
    lambda_poly y = b.monic();
    if (x.degree() < y.degree()) {
        std::swap(x, y);
    }
    while (!y.is_zero()) {
        auto r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

} // namespace umbra
