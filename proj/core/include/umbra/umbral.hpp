#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <umbra/error.hpp>
#include <umbra/poly.hpp>
#include <umbra/polyop.hpp>
#include <umbra/series.hpp>

namespace umbra
{

/// (g, f) with g invertible and f a delta series; determines the Sheffer
/// sequence s_n with <g f^k | s_n> = n! delta_{n,k}.
template <class K>
class sheffer_pair
{
public:
    sheffer_pair(series<K> g, series<K> f) : m_g(std::move(g)), m_f(std::move(f))
    {
        if (m_g.coeffs()[0].is_zero()) {
            throw domain_error("Sheffer pair needs an invertible g (order 0)");
        }
        if (m_f.precision() < 2 || !m_f.coeffs()[0].is_zero() || m_f.coeffs()[1].is_zero()) {
            throw domain_error("Sheffer pair needs a delta series f (order 1)");
        }
    }

    const series<K> &g() const { return m_g; }
    const series<K> &f() const { return m_f; }

private:
    series<K> m_g;
    series<K> m_f;
};

/// polys[n] has degree exactly n.
template <class K>
struct poly_sequence {
    std::vector<poly<K>> polys;
    std::optional<sheffer_pair<K>> origin;

    std::size_t size() const { return polys.size(); }
    const poly<K> &operator[](std::size_t n) const { return polys.at(n); }
};

/// <f(t) | p(x)> = sum_n p_n a_n.
template <class K>
K pairing(const series<K> &f, const poly<K> &p)
{
    if (p.is_zero()) {
        return K();
    }
    const auto deg = static_cast<std::size_t>(p.degree());
    if (f.precision() <= deg) {
        throw precision_error("pairing needs precision > " + std::to_string(deg) + ", series has " + std::to_string(f.precision()));
    }
    K acc;
    for (std::size_t n = 0; n <= deg; ++n) {
        if (!p.coeffs()[n].is_zero()) {
            acc += p.coeffs()[n] * f.coeffs()[n];
        }
    }
    return acc;
}

/// Polynomials s_0..s_{n_max} read off A(t) exp(x h(t)) = sum_n s_n(x) t^n/n!,
/// with h of order >= 1: s_n(x) = sum_k [t^n/n!](A h^k) x^k / k!.
template <class K>
std::vector<poly<K>> expand_exponential_gf(const series<K> &a, const series<K> &h, std::size_t n_max)
{
    const std::size_t n = n_max + 1;
    if (a.precision() < n || h.precision() < n) {
        throw precision_error("generating function needs precision >= " + std::to_string(n));
    }
    if (!h.coeffs()[0].is_zero()) {
        throw domain_error("exponent series must have zero constant term");
    }
    const series<K> ht = h.truncated(n);
    series<K> term = a.truncated(n);
    std::vector<std::vector<K>> cols(n, std::vector<K>(n));
    rational inv_fact(1);
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            inv_fact /= rational(static_cast<long>(k));
            term = term * ht;
        }
        for (std::size_t m = k; m < n; ++m) {
            cols[m][k] = term.coeffs()[m] * inv_fact;
        }
    }
    std::vector<poly<K>> out;
    out.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        cols[m].resize(m + 1);
        out.emplace_back(std::move(cols[m]));
    }
    return out;
}

/// Sheffer sequence of (g, f) from 1/g(fbar(t)) e^{x fbar(t)}.
template <class K>
poly_sequence<K> sheffer_sequence(const sheffer_pair<K> &pair, std::size_t n_max)
{
    const std::size_t n = n_max + 1;
    if (pair.g().precision() < n || pair.f().precision() < n) {
        throw precision_error("Sheffer pair needs precision >= " + std::to_string(n) + " for degree " + std::to_string(n_max));
    }
    if (n == 1) {
        return {{poly<K>::constant(pair.g().coeffs()[0].inverse())}, pair};
    }
    const series<K> fbar = comp_inverse(pair.f().truncated(n));
    const series<K> a = inverse(compose(pair.g().truncated(n), fbar));
    return {expand_exponential_gf(a, fbar, n_max), pair};
}

template <class K>
poly_sequence<K> associated_sequence(const series<K> &f, std::size_t n_max)
{
    return sheffer_sequence(sheffer_pair<K>(series<K>::one(f.precision()), f), n_max);
}

struct duality_result {
    bool holds = true;
    // First (n, k) where <g f^k | s_n> != n! delta_{n,k}.
    std::optional<std::pair<std::size_t, std::size_t>> first_failure;
};

template <class K>
duality_result duality_check(const sheffer_pair<K> &pair, const poly_sequence<K> &seq)
{
    const std::size_t n = seq.size();
    if (n == 0) {
        return {};
    }
    if (pair.g().precision() < n || pair.f().precision() < n) {
        throw precision_error("duality check needs precision >= sequence length");
    }
    const series<K> f = pair.f().truncated(n);
    series<K> gfk = pair.g().truncated(n);
    std::vector<series<K>> functionals;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            gfk = gfk * f;
        }
        functionals.push_back(gfk);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const K expected = (i == k) ? K(rational::factorial(i)) : K();
            if (!(pairing(functionals[k], seq[i]) == expected)) {
                return {false, std::pair{i, k}};
            }
        }
    }
    return {};
}

template <class K>
bool verify_duality(const sheffer_pair<K> &pair, const poly_sequence<K> &seq)
{
    return duality_check(pair, seq).holds;
}

/// q_n = x (f/g)^n x^{-1} p_n for p ~ (1, f); q ~ (1, g). q_0 = 1.
template <class K>
poly<K> transfer(const poly_sequence<K> &p_seq, const series<K> &f, const series<K> &g, std::size_t n)
{
    for (const auto *s : {&f, &g}) {
        if (s->precision() < 2 || !s->coeffs()[0].is_zero() || s->coeffs()[1].is_zero()) {
            throw domain_error("transfer formula requires delta series");
        }
    }
    if (n == 0) {
        return poly<K>::constant(K(1));
    }
    if (f.precision() < n + 1 || g.precision() < n + 1) {
        throw precision_error("transfer needs precision >= " + std::to_string(n + 1));
    }
    const series<K> ratio = pow(f.truncated(n + 1) / g.truncated(n + 1), static_cast<long>(n));
    return mul_by_x(apply_series(ratio, div_by_x(p_seq[n])));
}

/// Pincherle derivative g'(t): the t-derivative of the series.
template <class K>
series<K> pincherle(const series<K> &g)
{
    return derivative(g);
}

/// Checks g'(t) p = g(t)(x p) - x (g(t) p) exactly.
template <class K>
bool verify_pincherle(const series<K> &g, const poly<K> &p)
{
    const poly<K> lhs = apply_series(pincherle(g), p);
    const poly<K> rhs = apply_series(g, mul_by_x(p)) - mul_by_x(apply_series(g, p));
    return lhs == rhs;
}

/// p(x) = sum_k <t^k | p>/k! x^k.
template <class K>
poly<K> expand_by_functionals(const poly<K> &p)
{
    if (p.is_zero()) {
        return p;
    }
    const auto deg = static_cast<std::size_t>(p.degree());
    std::vector<K> out(deg + 1);
    for (std::size_t k = 0; k <= deg; ++k) {
        out[k] = pairing(series<K>::monomial(k, deg + 1), p) * rational::factorial(k).inverse();
    }
    return poly<K>(std::move(out));
}

/// <f_1 ... f_m | x^n> from the product series.
template <class K>
K pairing_of_product(const std::vector<series<K>> &fs, std::size_t n)
{
    if (fs.empty()) {
        return n == 0 ? K(1) : K();
    }
    series<K> prod = fs.front().truncated(n + 1);
    for (std::size_t i = 1; i < fs.size(); ++i) {
        prod = prod * fs[i].truncated(n + 1);
    }
    return pairing(prod, poly<K>::monomial(K(1), n));
}

namespace detail
{

template <class K>
void multinomial_recurse(const std::vector<series<K>> &fs, std::size_t idx, std::size_t remaining, const rational &weight, const K &prod, K &acc)
{
    if (idx + 1 == fs.size()) {
        // Last index takes the remainder; weight carries n!/prod(i_j!).
        acc += prod * fs[idx][remaining] * (weight * rational::factorial(remaining).inverse());
        return;
    }
    for (std::size_t i = 0; i <= remaining; ++i) {
        const K &c = fs[idx][i];
        if (c.is_zero()) {
            continue;
        }
        multinomial_recurse(fs, idx + 1, remaining - i, weight * rational::factorial(i).inverse(), prod * c, acc);
    }
}

} // namespace detail

/// sum over i_1 + ... + i_m = n of multinomial(n; i) prod_j <f_j | x^{i_j}>.
template <class K>
K multinomial_expansion(const std::vector<series<K>> &fs, std::size_t n)
{
    if (fs.empty()) {
        return n == 0 ? K(1) : K();
    }
    for (const auto &f : fs) {
        if (f.precision() <= n) {
            throw precision_error("multinomial pairing needs precision > " + std::to_string(n));
        }
    }
    K acc;
    detail::multinomial_recurse(fs, 0, n, rational::factorial(n), K(1), acc);
    return acc;
}

/// Both sides of the multinomial pairing rule; throws consistency_error if they differ.
template <class K>
K multinomial_pairing(const std::vector<series<K>> &fs, std::size_t n)
{
    const K direct = pairing_of_product(fs, n);
    const K expanded = multinomial_expansion(fs, n);
    if (!(direct == expanded)) {
        throw consistency_error("multinomial expansion disagrees with direct pairing at n = " + std::to_string(n));
    }
    return direct;
}

/// s_n(x + y) = sum_k C(n,k) p_k(y) s_{n-k}(x) with p_k = g(t) s_k.
template <class K>
bool binomial_convolution_check(const sheffer_pair<K> &pair, const poly_sequence<K> &seq, std::size_t n, const K &y)
{
    if (seq.size() <= n) {
        throw precision_error("sequence too short for convolution check at degree " + std::to_string(n));
    }
    poly<K> rhs;
    for (std::size_t k = 0; k <= n; ++k) {
        const K pk_y = apply_series(pair.g(), seq[k]).eval(y);
        rhs += (pk_y * rational::binomial(n, k)) * seq[n - k];
    }
    return seq[n].shift(y) == rhs;
}

template <class K>
bool binomial_convolution_check(const sheffer_pair<K> &pair, std::size_t n, const K &y)
{
    return binomial_convolution_check(pair, sheffer_sequence(pair, n), n, y);
}

} // namespace umbra
