#pragma once

// Reference computations for the tests, written against GMP directly so they
// share no code with the engine. Everything here is deliberately naive.

#include <cstddef>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace oracle
{

using q = mpq_class;

inline q factorial(std::size_t n)
{
    q r = 1;
    for (std::size_t k = 2; k <= n; ++k) {
        r *= static_cast<long>(k);
    }
    return r;
}

inline q binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    q r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= static_cast<long>(n - i);
        r /= static_cast<long>(i + 1);
    }
    return r;
}

// Bernoulli numbers from sum_{k<=n} C(n+1,k) B_k = 0, B_1 = -1/2.
inline std::vector<q> bernoulli_numbers(std::size_t n_max)
{
    std::vector<q> b(n_max + 1);
    b[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        q acc = 0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += binomial(n + 1, k) * b[k];
        }
        b[n] = -acc / static_cast<long>(n + 1);
    }
    return b;
}

// Counts set partitions of {1..l} into exactly k blocks via restricted growth strings.
inline long set_partitions(std::size_t l, std::size_t k)
{
    if (l == 0) {
        return k == 0 ? 1 : 0;
    }
    long count = 0;
    std::vector<std::size_t> rgs(l, 0);
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t pos, std::size_t blocks) {
        if (pos == l) {
            count += blocks == k ? 1 : 0;
            return;
        }
        for (std::size_t b = 0; b <= blocks && b < k; ++b) {
            rgs[pos] = b;
            walk(pos + 1, std::max(blocks, b + 1));
        }
    };
    rgs[0] = 0;
    walk(1, 1);
    return count;
}

// Ordinary power series sum c_k t^k over Q, truncated at a fixed length.
struct ps {
    std::vector<q> c;

    explicit ps(std::size_t n) : c(n) {}
    explicit ps(std::vector<q> v) : c(std::move(v)) {}

    std::size_t size() const { return c.size(); }

    static ps constant(const q &v, std::size_t n)
    {
        ps r(n);
        r.c[0] = v;
        return r;
    }
    static ps t(std::size_t n)
    {
        ps r(n);
        if (n > 1) {
            r.c[1] = 1;
        }
        return r;
    }
    // e^{y t}
    static ps expo(const q &y, std::size_t n)
    {
        ps r(n);
        q p = 1;
        for (std::size_t k = 0; k < n; ++k) {
            r.c[k] = p / factorial(k);
            p *= y;
        }
        return r;
    }

    friend ps operator+(const ps &a, const ps &b)
    {
        ps r(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            r.c[k] = a.c[k] + b.c[k];
        }
        return r;
    }
    friend ps operator-(const ps &a, const ps &b)
    {
        ps r(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            r.c[k] = a.c[k] - b.c[k];
        }
        return r;
    }
    friend ps operator*(const q &s, const ps &a)
    {
        ps r = a;
        for (auto &v : r.c) {
            v *= s;
        }
        return r;
    }
    friend ps operator*(const ps &a, const ps &b)
    {
        ps r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; i + j < a.size(); ++j) {
                r.c[i + j] += a.c[i] * b.c[j];
            }
        }
        return r;
    }
    // Long division, requires b.c[0] != 0.
    friend ps operator/(const ps &a, const ps &b)
    {
        ps r(a.size());
        ps rem = a;
        for (std::size_t k = 0; k < a.size(); ++k) {
            r.c[k] = rem.c[k] / b.c[0];
            for (std::size_t j = 0; k + j < a.size(); ++j) {
                rem.c[k + j] -= r.c[k] * b.c[j];
            }
        }
        return r;
    }
    // Shift down by one power of t; requires c[0] = 0. Keeps the length by
    // padding with a zero, which the caller must not trust.
    ps div_t() const
    {
        ps r(size());
        for (std::size_t k = 1; k < size(); ++k) {
            r.c[k - 1] = c[k];
        }
        return r;
    }
};

inline ps power(const ps &a, long k)
{
    if (k < 0) {
        return power(ps::constant(1, a.size()) / a, -k);
    }
    ps r = ps::constant(1, a.size());
    for (long i = 0; i < k; ++i) {
        r = r * a;
    }
    return r;
}

// Sum of a_k * inner^k; inner must have zero constant term.
inline ps compose(const ps &outer, const ps &inner)
{
    ps r(outer.size());
    ps p = ps::constant(1, outer.size());
    for (std::size_t k = 0; k < outer.size(); ++k) {
        r = r + outer.c[k] * p;
        p = p * inner;
    }
    return r;
}

// exp(a) for a with zero constant term, as the sum of a^k/k!.
inline ps exp(const ps &a)
{
    ps r(a.size());
    ps p = ps::constant(1, a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        r = r + (1 / factorial(k)) * p;
        p = p * a;
    }
    return r;
}

// Compositional inverse by the fixed point g = (t - (f(g) - c1 g)) / c1.
inline ps reversion(const ps &f)
{
    const std::size_t n = f.size();
    ps lin(n);
    if (n > 1) {
        lin.c[1] = f.c[1];
    }
    ps g = ps::t(n);
    for (std::size_t it = 0; it < n; ++it) {
        g = (1 / f.c[1]) * (ps::t(n) - (compose(f, g) - compose(lin, g)));
    }
    return g;
}

// The value s_n(x) read off a generating function: n! [t^n].
inline q egf_coeff(const ps &gf, std::size_t n)
{
    return gf.c[n] * factorial(n);
}

} // namespace oracle
