#pragma once

#include <nlohmann/json.hpp>

#include <umbra/identities.hpp>
#include <umbra/poly.hpp>
#include <umbra/ratfunc.hpp>
#include <umbra/rational.hpp>
#include <umbra/series.hpp>

// JSON shapes:
//   rational  {"num": "-3", "den": "2"}          (decimal strings, any size)
//   ratfunc   {"num": [rational...], "den": [rational...]}, coefficients by ascending power of lambda
//   poly      {"var": "x", "coeffs": [...]}      ascending powers of x
//   series    {"convention": "exponential", "precision": N, "coeffs": [...]}
//   report    {"id", "params", "per_degree", "variants"?, "variant_note"?}

namespace umbra
{

void to_json(nlohmann::json &j, const rational &r);
void from_json(const nlohmann::json &j, rational &r);
void to_json(nlohmann::json &j, const lambda_poly &p);
void from_json(const nlohmann::json &j, lambda_poly &p);
void to_json(nlohmann::json &j, const ratfunc &r);
void from_json(const nlohmann::json &j, ratfunc &r);

template <class K>
void to_json(nlohmann::json &j, const poly<K> &p)
{
    j = nlohmann::json{{"var", "x"}, {"coeffs", p.coeffs()}};
}

template <class K>
void from_json(const nlohmann::json &j, poly<K> &p)
{
    if (j.at("var").get<std::string>() != "x") {
        throw nlohmann::json::other_error::create(501, "polynomial variable must be x", &j);
    }
    p = poly<K>(j.at("coeffs").get<std::vector<K>>());
}

void to_json(nlohmann::json &j, const mismatch_info &m);
void from_json(const nlohmann::json &j, mismatch_info &m);
void to_json(nlohmann::json &j, const identity_report &r);
void from_json(const nlohmann::json &j, identity_report &r);

} // namespace umbra

namespace nlohmann
{

template <class K>
struct adl_serializer<umbra::series<K>> {
    static void to_json(json &j, const umbra::series<K> &s)
    {
        j = json{{"convention", "exponential"}, {"precision", s.precision()}, {"coeffs", s.coeffs()}};
    }
    static umbra::series<K> from_json(const json &j)
    {
        if (j.at("convention").get<std::string>() != "exponential") {
            throw json::other_error::create(501, "only the exponential convention is supported", &j);
        }
        auto coeffs = j.at("coeffs").get<std::vector<K>>();
        if (coeffs.size() != j.at("precision").get<std::size_t>()) {
            throw json::other_error::create(501, "precision does not match the coefficient count", &j);
        }
        return umbra::series<K>(std::move(coeffs));
    }
};

} // namespace nlohmann
