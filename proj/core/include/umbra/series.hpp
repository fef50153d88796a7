#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <umbra/error.hpp>
#include <umbra/rational.hpp>
#include <umbra/ratfunc.hpp>
#include <umbra/scalar.hpp>

namespace umbra
{

enum class series_class { delta, invertible, other };

/// Working precision for a pipeline that needs coefficients up to max_degree:
/// 2 * max_degree + 4, unless an override is installed.
std::size_t working_precision(std::size_t max_degree);
/// Installs (or clears, with nullopt) a fixed working precision.
void set_precision_override(std::optional<std::size_t> precision);
std::optional<std::size_t> precision_override();

// Truncated formal power series sum_k a_k t^k / k!.
//
// The stored coefficients are the a_k of the exponential convention, so
// pairing against x^n is a plain lookup. precision() = N means a_0..a_{N-1}
// are known. Arithmetic converts to ordinary coefficients internally.
template <coefficient_field K>
class series
{
public:
    using field_type = K;

    explicit series(std::vector<K> coeffs) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw precision_error("series precision must be at least 1");
        }
    }

    static series zero(std::size_t precision)
    {
        return series(std::vector<K>(checked(precision)));
    }
    static series constant(const K &c, std::size_t precision)
    {
        std::vector<K> v(checked(precision));
        v[0] = c;
        return series(std::move(v));
    }
    static series one(std::size_t precision)
    {
        return constant(K(1), precision);
    }
    /// t^k.
    static series monomial(std::size_t k, std::size_t precision)
    {
        std::vector<K> v(checked(precision));
        if (k < v.size()) {
            v[k] = K(rational::factorial(k));
        }
        return series(std::move(v));
    }
    /// e^{yt}: a_k = y^k.
    static series exponential(const K &y, std::size_t precision)
    {
        std::vector<K> v(checked(precision));
        K p(1);
        for (auto &c : v) {
            c = p;
            p = p * y;
        }
        return series(std::move(v));
    }
    /// sum_k c_k t^k from ordinary coefficients.
    static series from_ordinary(std::vector<K> c)
    {
        rational fact(1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k > 0) {
                fact *= rational(static_cast<long>(k));
            }
            c[k] = c[k] * fact;
        }
        return series(std::move(c));
    }

    std::size_t precision() const { return m_coeffs.size(); }
    const std::vector<K> &coeffs() const { return m_coeffs; }
    const K &operator[](std::size_t k) const
    {
        if (k >= m_coeffs.size()) {
            throw precision_error("coefficient a_" + std::to_string(k) + " beyond precision " + std::to_string(m_coeffs.size()));
        }
        return m_coeffs[k];
    }
    /// Ordinary coefficient a_k / k!.
    K ordinary(std::size_t k) const { return (*this)[k] * rational::factorial(k).inverse(); }
    std::vector<K> ordinary_coeffs() const
    {
        std::vector<K> c = m_coeffs;
        rational inv(1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k > 0) {
                inv /= rational(static_cast<long>(k));
            }
            c[k] = c[k] * inv;
        }
        return c;
    }

    series truncated(std::size_t precision) const
    {
        if (precision > m_coeffs.size()) {
            throw precision_error("cannot extend a series from precision " + std::to_string(m_coeffs.size()) + " to " + std::to_string(precision));
        }
        return series(std::vector<K>(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(checked(precision))));
    }

    bool is_zero() const
    {
        return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](const K &c) { return c.is_zero(); });
    }

    friend bool operator==(const series &, const series &) = default;

private:
    static std::size_t checked(std::size_t precision)
    {
        if (precision == 0) {
            throw precision_error("series precision must be at least 1");
        }
        return precision;
    }

    std::vector<K> m_coeffs;
};

namespace detail
{

template <class K>
std::vector<K> ord_mul(const std::vector<K> &a, const std::vector<K> &b, std::size_t n)
{
    std::vector<K> out(n);
    for (std::size_t i = 0; i < std::min(n, a.size()); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
            if (b[j].is_zero()) {
                continue;
            }
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

template <class K>
std::vector<K> ord_inverse(const std::vector<K> &a, std::size_t n)
{
    if (a.empty() || a[0].is_zero()) {
        throw domain_error("not invertible: constant term is zero");
    }
    const K inv0 = a[0].inverse();
    std::vector<K> b(n);
    b[0] = inv0;
    for (std::size_t m = 1; m < n; ++m) {
        K acc;
        for (std::size_t k = 1; k <= m && k < a.size(); ++k) {
            if (!a[k].is_zero()) {
                acc += a[k] * b[m - k];
            }
        }
        b[m] = -(acc * inv0);
    }
    return b;
}

template <class K>
series<K> from_ord(std::vector<K> c)
{
    return series<K>::from_ordinary(std::move(c));
}

} // namespace detail

/// Smallest k with a_k != 0; throws precision_error for a zero truncation.
template <class K>
std::size_t order(const series<K> &s)
{
    for (std::size_t k = 0; k < s.precision(); ++k) {
        if (!s.coeffs()[k].is_zero()) {
            return k;
        }
    }
    throw precision_error("order undefined at this precision");
}

template <class K>
series_class classify(const series<K> &s)
{
    const std::size_t k = order(s);
    return k == 0 ? series_class::invertible : k == 1 ? series_class::delta : series_class::other;
}

template <class K>
series<K> operator+(const series<K> &a, const series<K> &b)
{
    const std::size_t n = std::min(a.precision(), b.precision());
    std::vector<K> v(n);
    for (std::size_t k = 0; k < n; ++k) {
        v[k] = a.coeffs()[k] + b.coeffs()[k];
    }
    return series<K>(std::move(v));
}

template <class K>
series<K> operator-(const series<K> &a)
{
    std::vector<K> v = a.coeffs();
    for (auto &c : v) {
        c = -c;
    }
    return series<K>(std::move(v));
}

template <class K>
series<K> operator-(const series<K> &a, const series<K> &b)
{
    return a + (-b);
}

template <class K>
series<K> operator*(const K &c, const series<K> &s)
{
    std::vector<K> v = s.coeffs();
    for (auto &x : v) {
        x = c * x;
    }
    return series<K>(std::move(v));
}

template <class K>
series<K> operator*(const series<K> &s, const K &c)
{
    return c * s;
}

// Exponential convolution c_n = sum_k C(n,k) a_k b_{n-k}, realized as an
// ordinary product of a_k/k! and b_k/k!.
template <class K>
series<K> operator*(const series<K> &a, const series<K> &b)
{
    const std::size_t n = std::min(a.precision(), b.precision());
    return detail::from_ord(detail::ord_mul(a.ordinary_coeffs(), b.ordinary_coeffs(), n));
}

template <class K>
series<K> inverse(const series<K> &s)
{
    if (s.coeffs()[0].is_zero()) {
        throw domain_error("not invertible: series has order >= 1");
    }
    return detail::from_ord(detail::ord_inverse(s.ordinary_coeffs(), s.precision()));
}

/// a / b where order(b) <= order(a); the result loses order(b) coefficients of precision.
template <class K>
series<K> operator/(const series<K> &a, const series<K> &b)
{
    const std::size_t kb = order(b);
    const std::size_t n = std::min(a.precision(), b.precision());
    if (kb >= n) {
        throw precision_error("quotient has no known coefficients at this precision");
    }
    if (!a.is_zero() && order(a) < kb) {
        throw domain_error("quotient not a power series: order(b) > order(a)");
    }
    if (a.is_zero()) {
        return series<K>::zero(n - kb);
    }
    auto ac = a.ordinary_coeffs();
    auto bc = b.ordinary_coeffs();
    std::vector<K> as(ac.begin() + static_cast<std::ptrdiff_t>(kb), ac.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<K> bs(bc.begin() + static_cast<std::ptrdiff_t>(kb), bc.begin() + static_cast<std::ptrdiff_t>(n));
    return detail::from_ord(detail::ord_mul(as, detail::ord_inverse(bs, n - kb), n - kb));
}

/// outer(inner(t)) by Horner's rule; O(N^3) field operations.
template <class K>
series<K> compose(const series<K> &outer, const series<K> &inner)
{
    if (!inner.coeffs()[0].is_zero()) {
        throw domain_error("composition requires delta inner series (zero constant term)");
    }
    const std::size_t n = std::min(outer.precision(), inner.precision());
    const auto oc = outer.ordinary_coeffs();
    const auto ic = inner.ordinary_coeffs();
    std::vector<K> acc{oc[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // k more factors of inner (order >= 1) follow, so only degrees < n - k matter.
        acc = detail::ord_mul(acc, ic, n - k);
        acc[0] += oc[k];
    }
    return detail::from_ord(std::move(acc));
}

/// Compositional inverse of a delta series by Lagrange inversion:
/// [t^n] fbar = (1/n) [t^{n-1}] (t/f)^n.
template <class K>
series<K> comp_inverse(const series<K> &f)
{
    if (f.precision() < 2 || !f.coeffs()[0].is_zero() || f.coeffs()[1].is_zero()) {
        throw domain_error("compositional inverse requires a delta series");
    }
    const std::size_t n = f.precision();
    const auto fc = f.ordinary_coeffs();
    std::vector<K> f_over_t(fc.begin() + 1, fc.end());
    const std::vector<K> h = detail::ord_inverse(f_over_t, n - 1);
    std::vector<K> out(n);
    std::vector<K> power = h;
    for (std::size_t m = 1; m < n; ++m) {
        out[m] = power[m - 1] * rational(1, static_cast<long>(m));
        if (m + 1 < n) {
            power = detail::ord_mul(power, h, n - 1);
        }
    }
    return detail::from_ord(std::move(out));
}

template <class K>
series<K> exp(const series<K> &s)
{
    if (!s.coeffs()[0].is_zero()) {
        throw domain_error("exp requires order >= 1 (zero constant term)");
    }
    const std::size_t n = s.precision();
    const auto c = s.ordinary_coeffs();
    std::vector<K> e(n);
    e[0] = K(1);
    for (std::size_t m = 1; m < n; ++m) {
        K acc;
        for (std::size_t k = 1; k <= m; ++k) {
            if (!c[k].is_zero()) {
                acc += c[k] * e[m - k] * rational(static_cast<long>(k));
            }
        }
        e[m] = acc * rational(1, static_cast<long>(m));
    }
    return detail::from_ord(std::move(e));
}

template <class K>
series<K> log(const series<K> &s)
{
    if (!s.coeffs()[0].is_one()) {
        throw domain_error("log requires constant term 1");
    }
    const std::size_t n = s.precision();
    const auto c = s.ordinary_coeffs();
    std::vector<K> l(n);
    for (std::size_t m = 1; m < n; ++m) {
        K acc;
        for (std::size_t k = 1; k < m; ++k) {
            if (!c[m - k].is_zero()) {
                acc += l[k] * c[m - k] * rational(static_cast<long>(k));
            }
        }
        l[m] = c[m] - acc * rational(1, static_cast<long>(m));
    }
    return detail::from_ord(std::move(l));
}

template <class K>
series<K> sqrt(const series<K> &s)
{
    if (!s.coeffs()[0].is_one()) {
        throw domain_error("sqrt requires constant term 1");
    }
    const std::size_t n = s.precision();
    const auto c = s.ordinary_coeffs();
    std::vector<K> r(n);
    r[0] = K(1);
    for (std::size_t m = 1; m < n; ++m) {
        K acc;
        for (std::size_t k = 1; k < m; ++k) {
            acc += r[k] * r[m - k];
        }
        r[m] = (c[m] - acc) * rational(1, 2);
    }
    return detail::from_ord(std::move(r));
}

/// s^k by repeated squaring; negative k requires an invertible series.
template <class K>
series<K> pow(const series<K> &s, long k)
{
    if (k < 0) {
        if (s.coeffs()[0].is_zero()) {
            throw domain_error("negative power of non-invertible series");
        }
        return pow(inverse(s), -k);
    }
    const std::size_t n = s.precision();
    std::vector<K> result(n);
    result[0] = K(1);
    std::vector<K> base = s.ordinary_coeffs();
    // Skip the trailing squaring once the exponent is consumed.
    while (k > 0) {
        if (k & 1) {
            result = detail::ord_mul(result, base, n);
        }
        k >>= 1;
        if (k > 0) {
            base = detail::ord_mul(base, base, n);
        }
    }
    return detail::from_ord(std::move(result));
}

/// d/dt; in the exponential convention a'_k = a_{k+1}. Loses one coefficient.
template <class K>
series<K> derivative(const series<K> &s)
{
    if (s.precision() < 2) {
        throw precision_error("derivative needs precision >= 2");
    }
    return series<K>(std::vector<K>(s.coeffs().begin() + 1, s.coeffs().end()));
}

/// Coefficient-wise map into another field (e.g. Q -> Q(lambda)).
template <class To, class From>
series<To> lift(const series<From> &s)
{
    std::vector<To> v;
    v.reserve(s.precision());
    for (const auto &c : s.coeffs()) {
        v.emplace_back(c);
    }
    return series<To>(std::move(v));
}

/// Specializes every coefficient at lambda = v.
series<rational> specialize(const series<ratfunc> &s, const rational &v);

extern template class series<rational>;
extern template class series<ratfunc>;

} // namespace umbra
