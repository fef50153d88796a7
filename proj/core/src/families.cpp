#include <umbra/families.hpp>

#include <array>
#include <utility>

#include <umbra/error.hpp>
#include <umbra/polyop.hpp>

namespace umbra
{

namespace gf
{

namespace
{

const ratfunc &lam()
{
    static const ratfunc l = ratfunc::lambda();
    return l;
}

const ratfunc &one_minus_lambda()
{
    static const ratfunc v = ratfunc(1) - ratfunc::lambda();
    return v;
}

} // namespace

qseries t(std::size_t precision)
{
    return qseries::monomial(1, precision);
}

qseries exp(const ratfunc &y, std::size_t precision)
{
    return qseries::exponential(y, precision);
}

qseries frobenius_kernel(std::size_t precision)
{
    const auto e = exp(1, precision) - qseries::constant(lam(), precision);
    return one_minus_lambda() * inverse(e);
}

qseries bernoulli_kernel(std::size_t precision)
{
    const auto e = exp(1, precision + 1) - qseries::one(precision + 1);
    return t(precision + 1) / e;
}

qseries bernoulli_kernel_inverse(std::size_t precision)
{
    const auto e = exp(1, precision + 1) - qseries::one(precision + 1);
    return e / t(precision + 1);
}

qseries mittag_leffler_delta(std::size_t precision)
{
    const auto e = exp(1, precision);
    const auto one = qseries::one(precision);
    return (e - one) * inverse(e + one);
}

qseries lambda_mittag_leffler_delta(std::size_t precision)
{
    const auto e = exp(1, precision);
    return (e - qseries::one(precision)) * inverse(e - qseries::constant(lam(), precision));
}

qseries tstar_delta(std::size_t precision)
{
    std::vector<ratfunc> den(precision);
    den[0] = 1;
    if (precision > 2) {
        den[2] = 1;
    }
    return ratfunc(2) * t(precision) * inverse(qseries::from_ordinary(std::move(den)));
}

} // namespace gf

namespace
{

using gf::qseries;

struct family_entry {
    family_kind kind;
    std::string_view name;
    bool has_order;
    bool has_gf;
};

constexpr std::array<family_entry, 10> k_families{{
    {family_kind::bernoulli, "bernoulli", true, true},
    {family_kind::frobenius_euler, "frobenius-euler", true, true},
    {family_kind::daehee, "daehee", false, true},
    {family_kind::changhee, "changhee", true, true},
    {family_kind::mittag_leffler, "mittag-leffler", false, true},
    {family_kind::mittag_leffler_lambda, "mittag-leffler-lambda", false, true},
    {family_kind::daehee_second_kind, "daehee2", false, true},
    {family_kind::assoc_s, "assoc-s", false, false},
    {family_kind::assoc_t, "assoc-t", false, true},
    {family_kind::remark_s44, "remark-s44", false, false},
}};

const family_entry &entry(family_kind kind)
{
    for (const auto &e : k_families) {
        if (e.kind == kind) {
            return e;
        }
    }
    throw domain_error("unknown family");
}

const ratfunc &lam()
{
    static const ratfunc l = ratfunc::lambda();
    return l;
}

const ratfunc &one_minus_lambda()
{
    static const ratfunc v = ratfunc(1) - ratfunc::lambda();
    return v;
}

void check_order(const family_id &id)
{
    if (id.kind == family_kind::changhee && id.order == 0) {
        throw domain_error("Changhee polynomials need a nonzero order a");
    }
}

// log((1 + t) / (1 - t)).
qseries log_ratio_daehee(std::size_t n)
{
    std::vector<ratfunc> p(n), m(n);
    p[0] = m[0] = 1;
    if (n > 1) {
        p[1] = 1;
        m[1] = -1;
    }
    return log(qseries::from_ordinary(p)) - log(qseries::from_ordinary(m));
}

// log((1 - lambda t) / (1 - t)).
qseries log_ratio_lambda(std::size_t n)
{
    std::vector<ratfunc> p(n), m(n);
    p[0] = m[0] = 1;
    if (n > 1) {
        p[1] = -lam();
        m[1] = -1;
    }
    return log(qseries::from_ordinary(p)) - log(qseries::from_ordinary(m));
}

// Prefactor A(t) and exponent h(t) of A(t) e^{x h(t)}.
std::pair<qseries, qseries> generating_function(const family_id &id, std::size_t n)
{
    switch (id.kind) {
        case family_kind::bernoulli:
            return {pow(gf::bernoulli_kernel(n), id.order), gf::t(n)};
        case family_kind::frobenius_euler:
            return {pow(gf::frobenius_kernel(n), id.order), gf::t(n)};
        case family_kind::daehee: {
            std::vector<ratfunc> num(n);
            num[0] = one_minus_lambda();
            if (n > 1) {
                num[1] = ratfunc(1) + lam();
            }
            std::vector<ratfunc> den(n);
            den[0] = one_minus_lambda();
            if (n > 1) {
                den[1] = -one_minus_lambda();
            }
            return {qseries::from_ordinary(num) * inverse(qseries::from_ordinary(den)), log_ratio_daehee(n)};
        }
        case family_kind::changhee: {
            std::vector<ratfunc> base(n);
            base[0] = 1;
            if (n > 1) {
                base[1] = one_minus_lambda().inverse();
            }
            std::vector<ratfunc> lp(n);
            lp[0] = 1;
            if (n > 1) {
                lp[1] = 1;
            }
            return {pow(qseries::from_ordinary(base), id.order), log(qseries::from_ordinary(lp))};
        }
        case family_kind::mittag_leffler:
            return {qseries::one(n), log_ratio_daehee(n)};
        case family_kind::mittag_leffler_lambda:
            return {qseries::one(n), log_ratio_lambda(n)};
        case family_kind::daehee_second_kind: {
            std::vector<ratfunc> den(n);
            den[0] = 1;
            if (n > 1) {
                den[1] = -1;
            }
            return {inverse(qseries::from_ordinary(den)), log_ratio_lambda(n)};
        }
        case family_kind::assoc_t: {
            // (1 - sqrt(1 - t^2)) / t, computed at n + 1 before the division by t.
            std::vector<ratfunc> u(n + 1);
            u[0] = 1;
            if (n + 1 > 2) {
                u[2] = -1;
            }
            const auto root = sqrt(qseries::from_ordinary(std::move(u)));
            return {qseries::one(n), (qseries::one(n + 1) - root) / gf::t(n + 1)};
        }
        case family_kind::assoc_s:
        case family_kind::remark_s44:
            break;
    }
    throw domain_error("family '" + std::string(family_name(id.kind)) + "' has no closed generating function");
}

poly<ratfunc> x_poly()
{
    return poly<ratfunc>::x();
}

poly<ratfunc> x_plus(long j, std::size_t power)
{
    // (x + j)^power
    poly<ratfunc> base(std::vector<ratfunc>{ratfunc(j), ratfunc(1)});
    auto acc = poly<ratfunc>::constant(1);
    for (std::size_t i = 0; i < power; ++i) {
        acc = acc * base;
    }
    return acc;
}

} // namespace

std::string_view family_name(family_kind kind)
{
    return entry(kind).name;
}

std::optional<family_kind> family_from_name(std::string_view name)
{
    for (const auto &e : k_families) {
        if (e.name == name) {
            return e.kind;
        }
    }
    return std::nullopt;
}

bool family_has_order(family_kind kind)
{
    return entry(kind).has_order;
}

bool has_generating_function(family_kind kind)
{
    return entry(kind).has_gf;
}

sheffer_pair<ratfunc> family_pair(const family_id &id, std::size_t n)
{
    check_order(id);
    switch (id.kind) {
        case family_kind::bernoulli:
            return {pow(gf::bernoulli_kernel_inverse(n), id.order), gf::t(n)};
        case family_kind::frobenius_euler:
            return {pow(gf::frobenius_kernel(n), -id.order), gf::t(n)};
        case family_kind::daehee:
            return {gf::frobenius_kernel(n), gf::mittag_leffler_delta(n)};
        case family_kind::changhee:
            return {pow(gf::frobenius_kernel(n), id.order), gf::exp(1, n) - qseries::one(n)};
        case family_kind::mittag_leffler:
            return {qseries::one(n), gf::mittag_leffler_delta(n)};
        case family_kind::mittag_leffler_lambda:
            return {qseries::one(n), gf::lambda_mittag_leffler_delta(n)};
        case family_kind::daehee_second_kind:
            return {gf::frobenius_kernel(n), gf::lambda_mittag_leffler_delta(n)};
        case family_kind::assoc_s:
            return {qseries::one(n), gf::t(n) * gf::frobenius_kernel(n)};
        case family_kind::assoc_t:
            return {qseries::one(n), gf::tstar_delta(n)};
        case family_kind::remark_s44:
            return {gf::frobenius_kernel(n), gf::t(n) * gf::frobenius_kernel(n)};
    }
    throw domain_error("unknown family");
}

poly_sequence<ratfunc> family_sequence(const family_id &id, std::size_t n_max, std::optional<family_route> route)
{
    check_order(id);
    const family_route r = route.value_or(has_generating_function(id.kind) ? family_route::generating_function : family_route::sheffer);
    const std::size_t precision = std::max(working_precision(n_max), n_max + 1);
    if (r == family_route::sheffer) {
        return sheffer_sequence(family_pair(id, precision), n_max);
    }
    auto [a, h] = generating_function(id, precision);
    return {expand_exponential_gf(a, h, n_max), std::nullopt};
}

std::vector<ratfunc> family_numbers(const family_id &id, std::size_t n_max)
{
    const auto seq = family_sequence(id, n_max);
    std::vector<ratfunc> out;
    out.reserve(seq.size());
    for (const auto &p : seq.polys) {
        out.push_back(p.coeff(0));
    }
    return out;
}

poly<ratfunc> closed_form(const family_id &id, std::size_t n)
{
    check_order(id);
    const auto x = x_poly();
    switch (id.kind) {
        case family_kind::bernoulli:
        case family_kind::frobenius_euler: {
            // s_n(x) = sum_k C(n,k) s_{n-k}(0) x^k.
            const auto numbers = family_numbers(id, n);
            poly<ratfunc> out;
            for (std::size_t k = 0; k <= n; ++k) {
                out += poly<ratfunc>::monomial(numbers[n - k] * rational::binomial(n, k), k);
            }
            return out;
        }
        case family_kind::mittag_leffler: {
            poly<ratfunc> out;
            for (std::size_t k = 0; k <= n; ++k) {
                const rational c = rational::binomial(n, k) * rational::falling(static_cast<long>(n) - 1, n - k) * rational(2).pow(static_cast<long>(k));
                out += ratfunc(c) * lift<ratfunc>(falling_factorial(k));
            }
            return out;
        }
        case family_kind::daehee: {
            poly<ratfunc> out;
            for (std::size_t k = 0; k <= n; ++k) {
                const rational c = rational::binomial(n, k) * rational::falling(static_cast<long>(n) - 1, n - k) * rational(2).pow(static_cast<long>(k));
                const auto ff = lift<ratfunc>(falling_factorial(k));
                out += ratfunc(c) * (ff.shift(1) - lam() * ff);
            }
            return one_minus_lambda().inverse() * out;
        }
        case family_kind::assoc_s: {
            if (n == 0) {
                return poly<ratfunc>::constant(1);
            }
            poly<ratfunc> sum;
            for (std::size_t l = 0; l <= n; ++l) {
                ratfunc coeff = ratfunc(rational::binomial(n, l));
                for (std::size_t i = 0; i < n - l; ++i) {
                    coeff *= -lam();
                }
                sum += coeff * x_plus(static_cast<long>(l), n - 1);
            }
            ratfunc scale(1);
            for (std::size_t i = 0; i < n; ++i) {
                scale /= one_minus_lambda();
            }
            return scale * mul_by_x(sum);
        }
        case family_kind::assoc_t: {
            if (n == 0) {
                throw domain_error("assoc-t closed form starts at n = 1");
            }
            poly<ratfunc> out;
            for (std::size_t l = 0; 2 * l <= n - 1; ++l) {
                const rational c = rational::binomial(n, l) * rational::factorial(n - 1) / rational::factorial(n - 2 * l - 1);
                out += poly<ratfunc>::monomial(ratfunc(c), n - 2 * l);
            }
            return ratfunc(rational(1, 2).pow(static_cast<long>(n))) * out;
        }
        case family_kind::mittag_leffler_lambda: {
            if (n == 0) {
                throw domain_error("mittag-leffler-lambda closed form starts at n = 1");
            }
            const auto b = family_sequence({family_kind::bernoulli, static_cast<long>(n)}, n - 1);
            poly<ratfunc> out;
            for (std::size_t l = 0; l <= n; ++l) {
                ratfunc coeff = ratfunc(rational::binomial(n, l));
                for (std::size_t i = 0; i < n - l; ++i) {
                    coeff *= -lam();
                }
                out += coeff * (x * b[n - 1].shift(static_cast<long>(l)));
            }
            return out;
        }
        case family_kind::changhee:
        case family_kind::daehee_second_kind:
        case family_kind::remark_s44:
            break;
    }
    throw domain_error("family '" + std::string(family_name(id.kind)) + "' has no registered closed form");
}

} // namespace umbra
