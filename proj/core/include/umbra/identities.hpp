#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <umbra/poly.hpp>
#include <umbra/ratfunc.hpp>

namespace umbra
{

// Registry order is the report order of verify_all.
enum class identity_id {
    thm1,
    eq18,
    eq20,
    eq21_24_chain,
    thm2_eq26,
    eq28,
    eq29,
    eq30,
    eq31,
    thm3_eq36,
    thm4_eq38,
    eq39,
    eq40_41,
    thm5,
    remark45,
    thm6_eq49,
    eq50,
    eq51,
    eq53_tstar,
    eq13_conv,
    eq9_multi,
};

/// Upper-case external name, e.g. "THM1", "EQ21_24_CHAIN".
std::string_view identity_name(identity_id id);
std::optional<identity_id> identity_from_name(std::string_view name);
const std::vector<identity_id> &all_identities();
/// One-line summary of what the identity asserts.
std::string_view identity_summary(identity_id id);
/// Smallest degree the identity is stated for.
std::size_t identity_min_degree(identity_id id);
/// Order parameters the identity takes ("a", "b") with their defaults.
std::map<std::string, long> identity_default_params(identity_id id);

struct mismatch_info {
    // Route (or variant) that disagreed, and the route it was compared with.
    std::string step;
    std::string reference;
    // Lowest power of x whose coefficients differ.
    std::size_t x_power = 0;
    ratfunc lhs;
    ratfunc rhs;
    // Whether the two polynomials still agree after substituting lambda = v.
    // Agreement at every point despite an exact mismatch points at a bug in
    // rational-function normalization rather than in the identity.
    std::vector<std::pair<rational, bool>> spot_checks;

    friend bool operator==(const mismatch_info &, const mismatch_info &) = default;
};

struct degree_verdict {
    std::size_t n = 0;
    bool pass = true;
    std::optional<mismatch_info> first_mismatch;
    // Registered variants that equal the reference at this degree.
    std::vector<std::string> matched_variants;
    // False when every registered variant is the same polynomial here (low
    // degrees often collapse them), so the degree cannot adjudicate.
    bool variants_distinguished = true;

    friend bool operator==(const degree_verdict &, const degree_verdict &) = default;
};

struct variant_report {
    std::string name;
    std::string description;
    std::vector<degree_verdict> per_degree;

    friend bool operator==(const variant_report &, const variant_report &) = default;
};

struct identity_report {
    identity_id id{};
    std::map<std::string, long> params;
    std::vector<degree_verdict> per_degree;
    std::vector<variant_report> variants;
    std::optional<std::string> variant_note;

    bool all_pass() const;
    friend bool operator==(const identity_report &, const identity_report &) = default;
};

/// Test hook: adds delta to one coefficient of one route before comparison.
struct perturbation {
    std::size_t n = 0;
    std::size_t chain = 0;
    std::size_t route = 0;
    std::size_t x_power = 0;
    ratfunc delta = 1;
};

struct verify_options {
    // lambda values for the numeric spot check attached to mismatches.
    std::vector<rational> spot_lambdas{rational(-1), rational(2)};
    std::optional<perturbation> perturb;
};

/// Checks one identity for degrees identity_min_degree(id)..n_max.
///
/// params overrides the defaults of identity_default_params; unknown keys
/// and out-of-range values throw domain_error, as does n_max below the
/// identity's first degree.
identity_report verify(identity_id id, std::size_t n_max, const std::map<std::string, long> &params = {}, const verify_options &options = {});

/// Every registered identity with default parameters, in registry order.
std::vector<identity_report> verify_all(std::size_t n_max, const verify_options &options = {});

} // namespace umbra
