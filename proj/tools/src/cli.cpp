#include <umbra/cli.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <umbra/error.hpp>
#include <umbra/families.hpp>
#include <umbra/identities.hpp>
#include <umbra/json.hpp>
#include <umbra/polyop.hpp>
#include <umbra/render.hpp>

namespace umbra::cli
{

namespace
{

using nlohmann::json;

struct job {
    std::string command;
    std::string family;
    std::string id;
    std::optional<long> n;
    std::optional<long> n_max;
    std::optional<long> order;
    std::optional<long> a;
    std::optional<long> b;
    std::string format = "plain";
    std::optional<std::string> lambda;
};

// Thrown for anything that should end in exit_usage.
struct usage_error {
    std::string message;
};

const std::vector<std::string> k_commands{"expand", "series", "verify", "verify-all", "pair"};
const std::vector<std::string> k_formats{"plain", "json", "latex"};

bool contains(const std::vector<std::string> &xs, const std::string &x)
{
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

// Checked view of a job.
struct plan {
    job spec;
    std::optional<family_id> family;
    std::optional<identity_id> identity;
    std::size_t n = 0;
    std::optional<rational> lambda;
    std::map<std::string, long> params;
};

plan validate(const job &j)
{
    plan p{j, std::nullopt, std::nullopt, 0, std::nullopt, {}};
    if (!contains(k_commands, j.command)) {
        throw usage_error{"unknown command '" + j.command + "'"};
    }
    if (!contains(k_formats, j.format)) {
        throw usage_error{"format must be plain, json or latex"};
    }
    if (j.lambda) {
        try {
            p.lambda = rational::parse(*j.lambda);
        } catch (const std::exception &) {
            throw usage_error{"--lambda expects an integer or p/q, got '" + *j.lambda + "'"};
        }
        if (p.lambda->is_one()) {
            throw usage_error{"--lambda must differ from 1"};
        }
    }
    const bool family_command = j.command == "expand" || j.command == "series" || j.command == "pair";
    if (family_command) {
        if (j.family.empty()) {
            throw usage_error{j.command + " needs --family"};
        }
        const auto kind = family_from_name(j.family);
        if (!kind) {
            throw usage_error{"unknown family '" + j.family + "'"};
        }
        if (j.order && j.a && *j.order != *j.a) {
            throw usage_error{"--order and --a disagree"};
        }
        const std::optional<long> order = j.order ? j.order : j.a;
        if (order && !family_has_order(*kind)) {
            throw usage_error{"family '" + j.family + "' takes no order"};
        }
        if (j.b || !j.id.empty() || j.n_max) {
            throw usage_error{j.command + " takes --family, --n, --order/--a, --lambda and --format"};
        }
        p.family = family_id{*kind, order.value_or(1)};
        if (*kind == family_kind::changhee && p.family->order == 0) {
            throw usage_error{"changhee needs a nonzero order"};
        }
        if (j.command == "expand" && !j.n) {
            throw usage_error{"expand needs --n"};
        }
        const long n = j.n.value_or(8);
        if (n < 0) {
            throw usage_error{"--n must be nonnegative"};
        }
        p.n = static_cast<std::size_t>(n);
        return p;
    }
    if (!j.family.empty() || j.order || j.n) {
        throw usage_error{j.command + " takes --n-max, --a, --b, --lambda and --format"};
    }
    const long n_max = j.n_max.value_or(8);
    if (n_max < 0) {
        throw usage_error{"--n-max must be nonnegative"};
    }
    p.n = static_cast<std::size_t>(n_max);
    if (j.command == "verify-all") {
        if (!j.id.empty() || j.a || j.b) {
            throw usage_error{"verify-all runs every identity with default parameters"};
        }
        return p;
    }
    if (j.id.empty()) {
        throw usage_error{"verify needs --id"};
    }
    p.identity = identity_from_name(j.id);
    if (!p.identity) {
        throw usage_error{"unknown identity id '" + j.id + "'"};
    }
    const auto defaults = identity_default_params(*p.identity);
    for (const auto &[key, value] : {std::pair{"a", j.a}, std::pair{"b", j.b}}) {
        if (!value) {
            continue;
        }
        if (!defaults.contains(key)) {
            throw usage_error{j.id + " takes no parameter --" + std::string(key)};
        }
        p.params[key] = *value;
    }
    if (p.n < identity_min_degree(*p.identity)) {
        throw usage_error{j.id + " starts at n = " + std::to_string(identity_min_degree(*p.identity))};
    }
    return p;
}

template <class P>
std::string render_poly(const P &p, const std::string &format)
{
    return format == "latex" ? to_latex(p) : to_plain(p);
}

std::string render_value(const ratfunc &c, const std::string &format)
{
    return format == "latex" ? to_latex(c) : to_plain(c);
}

int do_expand(const plan &p, std::ostream &out)
{
    const auto seq = family_sequence(*p.family, p.n);
    const auto &s = seq[p.n];
    if (p.spec.format == "json") {
        out << (p.lambda ? json(specialize(s, *p.lambda)) : json(s)).dump(2) << "\n";
    } else if (p.lambda) {
        out << render_poly(specialize(s, *p.lambda), p.spec.format) << "\n";
    } else {
        out << render_poly(s, p.spec.format) << "\n";
    }
    return exit_ok;
}

int do_series(const plan &p, std::ostream &out)
{
    const auto seq = family_sequence(*p.family, p.n);
    const bool latex = p.spec.format == "latex";
    if (p.spec.format == "json") {
        json coeffs = json::array();
        for (const auto &s : seq.polys) {
            coeffs.push_back(p.lambda ? json(specialize(s, *p.lambda)) : json(s));
        }
        out << json{{"convention", "exponential"}, {"precision", seq.size()}, {"coeffs", std::move(coeffs)}}.dump(2) << "\n";
        return exit_ok;
    }
    std::string text;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const std::string body = p.lambda ? render_poly(specialize(seq[k], *p.lambda), p.spec.format) : render_poly(seq[k], p.spec.format);
        if (body == "0") {
            continue;
        }
        const bool sum = body.find(" + ") != std::string::npos || body.find(" - ") != std::string::npos;
        std::string term = body;
        if (k > 0 && body == "1") {
            term.clear();
        } else if (k > 0 || sum) {
            term = latex ? "\\left(" + body + "\\right)" : "(" + body + ")";
        }
        if (k >= 1) {
            const std::string tk = k == 1 ? "t" : (latex ? "t^{" + std::to_string(k) + "}" : "t^" + std::to_string(k));
            const std::string scaled = k >= 2 ? (latex ? "\\frac{" + tk + "}{" + std::to_string(k) + "!}" : tk + "/" + std::to_string(k) + "!") : tk;
            term = term.empty() ? scaled : term + (latex ? " " : "*") + scaled;
        }
        text += (text.empty() ? "" : " + ") + term;
    }
    const std::string big_o = latex ? "O(t^{" + std::to_string(seq.size()) + "})" : "O(t^" + std::to_string(seq.size()) + ")";
    out << (text.empty() ? "" : text + " + ") << big_o << "\n";
    return exit_ok;
}

int do_pair(const plan &p, std::ostream &out)
{
    const std::size_t precision = p.n + 1;
    const auto pair = family_pair(*p.family, precision);
    const auto fbar = comp_inverse(pair.f());
    const std::vector<std::pair<std::string, series<ratfunc>>> parts{{"g", pair.g()}, {"f", pair.f()}, {"fbar", fbar}};
    if (p.spec.format == "json") {
        json j;
        for (const auto &[name, s] : parts) {
            j[name] = p.lambda ? json(specialize(s, *p.lambda)) : json(s);
        }
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    for (const auto &[name, s] : parts) {
        const series<ratfunc> shown = p.lambda ? lift<ratfunc>(specialize(s, *p.lambda)) : s;
        out << name << " = " << (p.spec.format == "latex" ? to_latex(shown) : to_plain(shown)) << "\n";
    }
    return exit_ok;
}

void print_report(const identity_report &r, const plan &p, std::ostream &out)
{
    out << identity_name(r.id);
    for (const auto &[k, v] : r.params) {
        out << " " << k << "=" << v;
    }
    out << ": " << (r.all_pass() ? "pass" : "FAIL") << "\n";
    for (const auto &d : r.per_degree) {
        out << "  n=" << d.n << " " << (d.pass ? "pass" : "fail");
        if (!d.matched_variants.empty()) {
            out << " [matched: ";
            for (std::size_t i = 0; i < d.matched_variants.size(); ++i) {
                out << (i ? ", " : "") << d.matched_variants[i];
            }
            out << "]";
        }
        out << "\n";
        if (d.first_mismatch) {
            const auto &m = *d.first_mismatch;
            out << "    first mismatch at x^" << m.x_power << ": '" << m.step << "' vs '" << m.reference << "'\n";
            out << "      lhs = " << render_value(m.lhs, p.spec.format) << "\n";
            out << "      rhs = " << render_value(m.rhs, p.spec.format) << "\n";
            for (const auto &[v, agrees] : m.spot_checks) {
                out << "      lambda = " << v << ": " << (agrees ? "numerically equal" : "numerically different") << "\n";
            }
        }
    }
    if (r.variant_note) {
        out << "  variant note: " << *r.variant_note << "\n";
    }
}

verify_options options_for(const plan &p)
{
    verify_options opts;
    if (p.lambda && std::find(opts.spot_lambdas.begin(), opts.spot_lambdas.end(), *p.lambda) == opts.spot_lambdas.end()) {
        opts.spot_lambdas.push_back(*p.lambda);
    }
    return opts;
}

int do_verify(const plan &p, std::ostream &out)
{
    const auto r = verify(*p.identity, p.n, p.params, options_for(p));
    if (p.spec.format == "json") {
        out << json(r).dump(2) << "\n";
    } else {
        print_report(r, p, out);
    }
    return r.all_pass() ? exit_ok : exit_verdict_failed;
}

int do_verify_all(const plan &p, std::ostream &out)
{
    const auto reports = verify_all(p.n, options_for(p));
    std::size_t passed = 0;
    for (const auto &r : reports) {
        passed += r.all_pass() ? 1 : 0;
    }
    if (p.spec.format == "json") {
        out << json(reports).dump(2) << "\n";
    } else {
        for (const auto &r : reports) {
            print_report(r, p, out);
        }
        out << passed << "/" << reports.size() << " identities pass\n";
    }
    return passed == reports.size() ? exit_ok : exit_verdict_failed;
}

int execute(const plan &p, std::ostream &out)
{
    const auto &c = p.spec.command;
    if (c == "expand") {
        return do_expand(p, out);
    }
    if (c == "series") {
        return do_series(p, out);
    }
    if (c == "pair") {
        return do_pair(p, out);
    }
    if (c == "verify") {
        return do_verify(p, out);
    }
    return do_verify_all(p, out);
}

// Validates and runs; engine errors are input errors.
int execute_checked(const job &j, std::ostream &out, std::ostream &err)
{
    try {
        return execute(validate(j), out);
    } catch (const usage_error &e) {
        err << "error: " << e.message << "\n";
    } catch (const error &e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_usage;
}

// ---------------------------------------------------------------------------
// Batch.

template <class T>
std::optional<T> field(const json &obj, const char *key)
{
    if (!obj.contains(key)) {
        return std::nullopt;
    }
    const auto &v = obj.at(key);
    if constexpr (std::is_same_v<T, long>) {
        if (!v.is_number_integer()) {
            throw usage_error{std::string("'") + key + "' must be an integer"};
        }
    } else {
        if (!v.is_string()) {
            throw usage_error{std::string("'") + key + "' must be a string"};
        }
    }
    return v.get<T>();
}

job job_from_json(const json &obj)
{
    if (!obj.is_object()) {
        throw usage_error{"record must be a JSON object"};
    }
    static const std::vector<std::string> keys{"command", "family", "id", "n", "n_max", "order", "a", "b", "format", "lambda"};
    for (const auto &[k, v] : obj.items()) {
        if (!contains(keys, k)) {
            throw usage_error{"unknown key '" + k + "'"};
        }
    }
    job j;
    const auto command = field<std::string>(obj, "command");
    if (!command) {
        throw usage_error{"record needs a 'command'"};
    }
    j.command = *command;
    j.family = field<std::string>(obj, "family").value_or("");
    j.id = field<std::string>(obj, "id").value_or("");
    j.n = field<long>(obj, "n");
    j.n_max = field<long>(obj, "n_max");
    j.order = field<long>(obj, "order");
    j.a = field<long>(obj, "a");
    j.b = field<long>(obj, "b");
    j.format = field<std::string>(obj, "format").value_or("json");
    if (obj.contains("lambda") && obj.at("lambda").is_number_integer()) {
        j.lambda = std::to_string(obj.at("lambda").get<long>());
    } else {
        j.lambda = field<std::string>(obj, "lambda");
    }
    return j;
}

} // namespace

int run_batch(std::istream &in, std::ostream &out, std::ostream &err)
{
    std::vector<std::pair<std::size_t, plan>> plans;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        try {
            plans.emplace_back(number, validate(job_from_json(json::parse(line))));
        } catch (const json::exception &e) {
            err << "error: line " << number << ": malformed JSON (" << e.what() << ")\n";
            return exit_usage;
        } catch (const usage_error &e) {
            err << "error: line " << number << ": " << e.message << "\n";
            return exit_usage;
        }
    }
    if (in.bad()) {
        err << "error: could not read the batch file\n";
        return exit_usage;
    }
    int worst = exit_ok;
    for (const auto &[line_no, p] : plans) {
        std::ostringstream job_out;
        std::ostringstream job_err;
        int code = exit_usage;
        try {
            code = execute(p, job_out);
        } catch (const error &e) {
            job_err << e.what();
        }
        json record{{"line", line_no}, {"command", p.spec.command}, {"exit", code}};
        if (code == exit_usage) {
            record["error"] = job_err.str();
        } else if (p.spec.format == "json") {
            record["output"] = json::parse(job_out.str());
        } else {
            record["output"] = job_out.str();
        }
        out << record.dump() << "\n";
        worst = std::max(worst, code);
    }
    return worst;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact umbral-calculus computations over Q(lambda): polynomial families, series and identity checks.", "umbra"};
    app.require_subcommand(0, 1);

    std::string batch;
    app.add_option("--batch", batch, "Run JSON-lines jobs from a file");

    job j;
    const auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", j.format, "plain, json or latex")->check(CLI::IsMember(k_formats));
        sub->add_option("--lambda", j.lambda, "Substitute a value for lambda (p/q, not 1); for verify, an extra spot-check point");
    };
    const auto add_family = [&](CLI::App *sub, const std::string &n_help) {
        sub->add_option("--family", j.family, "Family name")->required();
        sub->add_option("--n", j.n, n_help);
        sub->add_option("--order", j.order, "Order alpha (bernoulli, frobenius-euler) or a (changhee)");
        sub->add_option("--a", j.a, "Same as --order");
        add_format(sub);
    };

    auto *expand = app.add_subcommand("expand", "Print one polynomial of a family");
    add_family(expand, "Degree");
    auto *ser = app.add_subcommand("series", "Print the exponential generating function of a family up to t^n");
    add_family(ser, "Highest power of t (default 8)");
    auto *pair = app.add_subcommand("pair", "Print the Sheffer pair (g, f) and the compositional inverse of f");
    add_family(pair, "Highest power of t (default 8)");
    auto *ver = app.add_subcommand("verify", "Check one identity for degrees up to --n-max");
    ver->add_option("--id", j.id, "Identity id, e.g. THM1")->required();
    ver->add_option("--n-max", j.n_max, "Highest degree (default 8)");
    ver->add_option("--a", j.a, "Order parameter a");
    ver->add_option("--b", j.b, "Order parameter b");
    add_format(ver);
    auto *all = app.add_subcommand("verify-all", "Check every registered identity");
    all->add_option("--n-max", j.n_max, "Highest degree (default 8)");
    add_format(all);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    const auto subs = app.get_subcommands();
    if (!batch.empty()) {
        if (!subs.empty()) {
            err << "error: --batch cannot be combined with a command\n";
            return exit_usage;
        }
        std::ifstream file(batch);
        if (!file) {
            err << "error: cannot open batch file '" << batch << "'\n";
            return exit_usage;
        }
        return run_batch(file, out, err);
    }
    if (subs.empty()) {
        err << "error: a command is required\n" << app.help();
        return exit_usage;
    }
    j.command = subs.front()->get_name();
    return execute_checked(j, out, err);
}

} // namespace umbra::cli
