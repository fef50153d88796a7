#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <umbra/poly.hpp>
#include <umbra/ratfunc.hpp>
#include <umbra/series.hpp>
#include <umbra/umbral.hpp>

namespace umbra
{

// Building blocks over Q(lambda), each returned at exactly the requested precision.
namespace gf
{

using qseries = series<ratfunc>;

qseries t(std::size_t precision);
/// e^{yt}.
qseries exp(const ratfunc &y, std::size_t precision);
/// (1 - lambda) / (e^t - lambda).
qseries frobenius_kernel(std::size_t precision);
/// t / (e^t - 1).
qseries bernoulli_kernel(std::size_t precision);
/// (e^t - 1) / t.
qseries bernoulli_kernel_inverse(std::size_t precision);
/// (e^t - 1) / (e^t + 1).
qseries mittag_leffler_delta(std::size_t precision);
/// (e^t - 1) / (e^t - lambda).
qseries lambda_mittag_leffler_delta(std::size_t precision);
/// 2t / (1 + t^2).
qseries tstar_delta(std::size_t precision);

} // namespace gf

enum class family_kind {
    bernoulli,
    frobenius_euler,
    daehee,
    changhee,
    mittag_leffler,
    mittag_leffler_lambda,
    daehee_second_kind,
    assoc_s,
    assoc_t,
    remark_s44,
};

/// A named family; order is alpha for Bernoulli / Frobenius-Euler and a for Changhee.
struct family_id {
    family_kind kind;
    long order = 1;

    friend bool operator==(const family_id &, const family_id &) = default;
};

/// Stable command-line identifier, e.g. "daehee", "frobenius-euler".
std::string_view family_name(family_kind kind);
std::optional<family_kind> family_from_name(std::string_view name);
bool family_has_order(family_kind kind);

enum class family_route {
    // Direct expansion of the closed generating function in t.
    generating_function,
    // Sheffer-pair machinery: 1/g(fbar) e^{x fbar}.
    sheffer,
};

bool has_generating_function(family_kind kind);

/// The Sheffer pair (g, f) of a family, at the given precision.
sheffer_pair<ratfunc> family_pair(const family_id &id, std::size_t precision);

/// Polynomials 0..n_max. Defaults to the generating-function route where one
/// exists and to the Sheffer route otherwise.
poly_sequence<ratfunc> family_sequence(const family_id &id, std::size_t n_max, std::optional<family_route> route = std::nullopt);

/// Constant terms s_n(0), n = 0..n_max.
std::vector<ratfunc> family_numbers(const family_id &id, std::size_t n_max);

/// The explicit formula for s_n, evaluated term by term.
///
/// Available for bernoulli, frobenius-euler (binomial expansion in the
/// numbers), mittag-leffler (falling factorials), daehee (falling
/// factorials), mittag-leffler-lambda (shifted Bernoulli sum, n >= 1), assoc-s (n >= 0,
/// with x x^{-1} = 1 at n = 0) and assoc-t (n >= 1). Throws domain_error
/// otherwise.
poly<ratfunc> closed_form(const family_id &id, std::size_t n);

} // namespace umbra
