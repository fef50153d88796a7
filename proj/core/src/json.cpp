#include <umbra/json.hpp>

#include <umbra/error.hpp>

namespace umbra
{

using nlohmann::json;

void to_json(json &j, const rational &r)
{
    j = json{{"num", r.num_str()}, {"den", r.den_str()}};
}

void from_json(const json &j, rational &r)
{
    r = rational::from_strings(j.at("num").get<std::string>(), j.at("den").get<std::string>());
}

void to_json(json &j, const lambda_poly &p)
{
    j = p.coeffs();
}

void from_json(const json &j, lambda_poly &p)
{
    p = lambda_poly(j.get<std::vector<rational>>());
}

void to_json(json &j, const ratfunc &r)
{
    j = json{{"num", r.num()}, {"den", r.den()}};
}

void from_json(const json &j, ratfunc &r)
{
    r = ratfunc::normalize(j.at("num").get<lambda_poly>(), j.at("den").get<lambda_poly>());
}

void to_json(json &j, const mismatch_info &m)
{
    j = json{{"x_power", m.x_power}, {"lhs", m.lhs}, {"rhs", m.rhs}, {"step", m.step}, {"reference", m.reference}};
    json spots = json::array();
    for (const auto &[v, agrees] : m.spot_checks) {
        spots.push_back({{"lambda", v}, {"agrees", agrees}});
    }
    j["spot_checks"] = std::move(spots);
}

void from_json(const json &j, mismatch_info &m)
{
    m.x_power = j.at("x_power").get<std::size_t>();
    m.lhs = j.at("lhs").get<ratfunc>();
    m.rhs = j.at("rhs").get<ratfunc>();
    m.step = j.value("step", std::string());
    m.reference = j.value("reference", std::string());
    m.spot_checks.clear();
    if (j.contains("spot_checks")) {
        for (const auto &s : j.at("spot_checks")) {
            m.spot_checks.emplace_back(s.at("lambda").get<rational>(), s.at("agrees").get<bool>());
        }
    }
}

namespace
{

json degree_to_json(const degree_verdict &d, bool with_variants)
{
    json j{{"n", d.n}, {"verdict", d.pass ? "pass" : "fail"}};
    if (d.first_mismatch) {
        j["first_mismatch"] = *d.first_mismatch;
    }
    if (with_variants) {
        j["matched_variants"] = d.matched_variants;
        j["variants_distinguished"] = d.variants_distinguished;
    }
    return j;
}

degree_verdict degree_from_json(const json &j)
{
    degree_verdict d;
    d.n = j.at("n").get<std::size_t>();
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail") {
        throw domain_error("verdict must be pass or fail");
    }
    d.pass = verdict == "pass";
    if (j.contains("first_mismatch")) {
        d.first_mismatch = j.at("first_mismatch").get<mismatch_info>();
    }
    d.matched_variants = j.value("matched_variants", std::vector<std::string>{});
    d.variants_distinguished = j.value("variants_distinguished", true);
    return d;
}

} // namespace

void to_json(json &j, const identity_report &r)
{
    const bool with_variants = !r.variants.empty();
    j = json{{"id", std::string(identity_name(r.id))}, {"params", r.params}};
    json degrees = json::array();
    for (const auto &d : r.per_degree) {
        degrees.push_back(degree_to_json(d, with_variants));
    }
    j["per_degree"] = std::move(degrees);
    if (with_variants) {
        json vs = json::array();
        for (const auto &v : r.variants) {
            json vd = json::array();
            for (const auto &d : v.per_degree) {
                vd.push_back(degree_to_json(d, false));
            }
            vs.push_back({{"name", v.name}, {"description", v.description}, {"per_degree", std::move(vd)}});
        }
        j["variants"] = std::move(vs);
    }
    if (r.variant_note) {
        j["variant_note"] = *r.variant_note;
    }
}

void from_json(const json &j, identity_report &r)
{
    const auto name = j.at("id").get<std::string>();
    const auto id = identity_from_name(name);
    if (!id) {
        throw domain_error("unknown identity id '" + name + "'");
    }
    r.id = *id;
    r.params = j.at("params").get<std::map<std::string, long>>();
    r.per_degree.clear();
    for (const auto &d : j.at("per_degree")) {
        r.per_degree.push_back(degree_from_json(d));
    }
    r.variants.clear();
    if (j.contains("variants")) {
        for (const auto &v : j.at("variants")) {
            variant_report vr{v.at("name").get<std::string>(), v.at("description").get<std::string>(), {}};
            for (const auto &d : v.at("per_degree")) {
                vr.per_degree.push_back(degree_from_json(d));
            }
            r.variants.push_back(std::move(vr));
        }
    }
    r.variant_note.reset();
    if (j.contains("variant_note")) {
        r.variant_note = j.at("variant_note").get<std::string>();
    }
}

} // namespace umbra
