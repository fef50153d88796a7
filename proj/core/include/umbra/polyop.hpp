#pragma once

#include <cstddef>
#include <string>

#include <umbra/poly.hpp>
#include <umbra/series.hpp>

namespace umbra
{

/// The series f(t) = sum a_k t^k/k! acting on p(x) as sum_k a_k/k! p^{(k)}(x),
/// with t acting as d/dx.
///
/// Coefficient of x^m in the result: sum_k a_k C(m+k, k) p_{m+k}. Throws
/// precision_error when f does not reach degree(p), never truncating silently.
template <class K>
poly<K> apply_series(const series<K> &f, const poly<K> &p)
{
    if (p.is_zero()) {
        return p;
    }
    const auto deg = static_cast<std::size_t>(p.degree());
    if (f.precision() <= deg) {
        throw precision_error("operator needs precision > " + std::to_string(deg) + ", series has " + std::to_string(f.precision()));
    }
    const auto &a = f.coeffs();
    const auto &c = p.coeffs();
    std::vector<K> out(deg + 1);
    for (std::size_t j = 0; j <= deg; ++j) {
        if (c[j].is_zero()) {
            continue;
        }
        for (std::size_t k = 0; k <= j; ++k) {
            if (a[k].is_zero()) {
                continue;
            }
            out[j - k] += a[k] * c[j] * rational::binomial(j, k);
        }
    }
    return poly<K>(std::move(out));
}

/// (x)_n = x(x-1)...(x-n+1).
poly<rational> falling_factorial(std::size_t n);

/// Signed Stirling number of the first kind: coefficient of x^l in (x)_n.
rational stirling1(std::size_t n, std::size_t l);

/// Stirling number of the second kind S2(l, n), read off (e^t - 1)^n = n! sum_l S2(l, n) t^l / l!.
rational stirling2(std::size_t l, std::size_t n);

} // namespace umbra
