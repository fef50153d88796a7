#pragma once

#include <cstddef>
#include <vector>

#include <umbra/error.hpp>
#include <umbra/rational.hpp>
#include <umbra/ratfunc.hpp>
#include <umbra/scalar.hpp>

namespace umbra
{

/// Dense polynomial in x over a coefficient field; coeffs()[k] multiplies x^k.
/// No trailing zeros: the zero polynomial has no coefficients and degree -1.
template <coefficient_field K>
class poly
{
public:
    using field_type = K;

    poly() = default;
    explicit poly(std::vector<K> coeffs) : m_coeffs(std::move(coeffs))
    {
        trim();
    }

    static poly constant(const K &c)
    {
        return poly(std::vector<K>{c});
    }
    static poly x()
    {
        return monomial(K(1), 1);
    }
    static poly monomial(const K &c, std::size_t k)
    {
        std::vector<K> v(k + 1);
        v[k] = c;
        return poly(std::move(v));
    }

    int degree() const { return static_cast<int>(m_coeffs.size()) - 1; }
    bool is_zero() const { return m_coeffs.empty(); }
    const std::vector<K> &coeffs() const { return m_coeffs; }
    K coeff(std::size_t k) const { return k < m_coeffs.size() ? m_coeffs[k] : K(); }

    K eval(const K &v) const
    {
        K acc;
        for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
            acc = acc * v + *it;
        }
        return acc;
    }

    /// k-th derivative d^k/dx^k.
    poly derivative(std::size_t k = 1) const
    {
        if (k >= m_coeffs.size()) {
            return {};
        }
        std::vector<K> v(m_coeffs.size() - k);
        for (std::size_t j = k; j < m_coeffs.size(); ++j) {
            v[j - k] = m_coeffs[j] * rational::falling(static_cast<long>(j), k);
        }
        return poly(std::move(v));
    }

    /// p(x + y), by binomial expansion of each power.
    poly shift(const K &y) const
    {
        if (m_coeffs.empty() || y.is_zero()) {
            return *this;
        }
        const std::size_t n = m_coeffs.size();
        std::vector<K> ypow(n);
        ypow[0] = K(1);
        for (std::size_t i = 1; i < n; ++i) {
            ypow[i] = ypow[i - 1] * y;
        }
        std::vector<K> v(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (m_coeffs[j].is_zero()) {
                continue;
            }
            for (std::size_t i = 0; i <= j; ++i) {
                v[i] += m_coeffs[j] * ypow[j - i] * rational::binomial(j, i);
            }
        }
        return poly(std::move(v));
    }

    poly operator-() const
    {
        poly r = *this;
        for (auto &c : r.m_coeffs) {
            c = -c;
        }
        return r;
    }
    poly &operator+=(const poly &o)
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
    poly &operator-=(const poly &o) { return *this += -o; }

    friend poly operator+(poly a, const poly &b) { return a += b; }
    friend poly operator-(poly a, const poly &b) { return a -= b; }
    friend poly operator*(const poly &a, const poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<K> v(a.m_coeffs.size() + b.m_coeffs.size() - 1);
        for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
            if (a.m_coeffs[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
                v[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
            }
        }
        return poly(std::move(v));
    }
    friend poly operator*(const K &c, const poly &p)
    {
        std::vector<K> v = p.m_coeffs;
        for (auto &x : v) {
            x = c * x;
        }
        return poly(std::move(v));
    }
    friend poly operator*(const poly &p, const K &c) { return c * p; }

    friend bool operator==(const poly &, const poly &) = default;

private:
    void trim()
    {
        while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
            m_coeffs.pop_back();
        }
    }

    std::vector<K> m_coeffs;
};

template <class K>
poly<K> mul_by_x(const poly<K> &p)
{
    if (p.is_zero()) {
        return p;
    }
    std::vector<K> v;
    v.reserve(p.coeffs().size() + 1);
    v.emplace_back();
    v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
    return poly<K>(std::move(v));
}

/// x^{-1} p(x); requires p(0) = 0.
template <class K>
poly<K> div_by_x(const poly<K> &p)
{
    if (p.is_zero()) {
        return p;
    }
    if (!p.coeffs()[0].is_zero()) {
        throw domain_error("transfer formula requires p_n(0) = 0");
    }
    return poly<K>(std::vector<K>(p.coeffs().begin() + 1, p.coeffs().end()));
}

template <class To, class From>
poly<To> lift(const poly<From> &p)
{
    std::vector<To> v;
    v.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) {
        v.emplace_back(c);
    }
    return poly<To>(std::move(v));
}

/// Specializes every coefficient at lambda = v.
poly<rational> specialize(const poly<ratfunc> &p, const rational &v);

extern template class poly<rational>;
extern template class poly<ratfunc>;

} // namespace umbra
