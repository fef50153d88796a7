#include <umbra/render.hpp>

#include <cctype>
#include <utility>
#include <vector>

#include <umbra/error.hpp>

namespace umbra
{

namespace
{

enum class style { plain, latex };

// A summand: sign and unsigned text.
struct term {
    bool negative;
    std::string body;
};

std::string join_terms(const std::vector<term> &terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out = terms.front().negative ? "-" + terms.front().body : terms.front().body;
    for (std::size_t i = 1; i < terms.size(); ++i) {
        out += terms[i].negative ? " - " : " + ";
        out += terms[i].body;
    }
    return out;
}

std::string abs_rational(const rational &r, style s)
{
    const rational a = r.sign() < 0 ? -r : r;
    if (a.is_integer()) {
        return a.num_str();
    }
    if (s == style::latex) {
        return "\\frac{" + a.num_str() + "}{" + a.den_str() + "}";
    }
    return a.num_str() + "/" + a.den_str();
}

std::string power(std::string_view base, std::size_t k, style s)
{
    std::string out(base);
    if (k == 1) {
        return out;
    }
    if (s == style::latex) {
        return out + "^{" + std::to_string(k) + "}";
    }
    return out + "^" + std::to_string(k);
}

// c * var^k with c a nonzero rational.
term monomial_term(const rational &c, std::string_view var, std::size_t k, style s)
{
    const bool neg = c.sign() < 0;
    if (k == 0) {
        return {neg, abs_rational(c, s)};
    }
    const std::string v = power(var, k, s);
    const rational a = neg ? -c : c;
    if (a.is_one()) {
        return {neg, v};
    }
    return {neg, abs_rational(a, s) + (s == style::latex ? " " : "*") + v};
}

std::vector<term> lambda_terms(const lambda_poly &p, style s)
{
    const std::string_view var = s == style::latex ? "\\lambda" : "lambda";
    std::vector<term> out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        if (!p.coeffs()[k].is_zero()) {
            out.push_back(monomial_term(p.coeffs()[k], var, k, s));
        }
    }
    return out;
}

std::string paren(const std::string &x, style s)
{
    return s == style::latex ? "\\left(" + x + "\\right)" : "(" + x + ")";
}

// A ratfunc as a single signed factor when possible.
//
// single is true when body is one product (no top-level sum), so it can be
// used as a coefficient without parentheses.
struct factor {
    bool negative;
    std::string body;
    bool single;
};

factor ratfunc_factor(const ratfunc &r, style s)
{
    if (r.is_zero()) {
        return {false, "0", true};
    }
    lambda_poly num = r.num();
    std::string den;
    if (!r.den().is_one()) {
        const auto lp = r.den().as_linear_power();
        if (lp && lp->first.is_one()) {
            // (lambda - 1)^k = (-1)^k (1 - lambda)^k.
            if (lp->second % 2 == 1) {
                num = num * rational(-1);
            }
            if (s == style::latex) {
                den = lp->second == 1 ? "1-\\lambda" : power("(1-\\lambda)", lp->second, s);
            } else {
                den = power("(1-lambda)", lp->second, s);
            }
        } else {
            const auto dt = lambda_terms(r.den(), s);
            den = dt.size() == 1 ? dt.front().body : (s == style::latex ? join_terms(dt) : "(" + join_terms(dt) + ")");
        }
    }
    auto nt = lambda_terms(num, s);
    const bool neg_lead = nt.front().negative;
    if (neg_lead) {
        for (auto &t : nt) {
            t.negative = !t.negative;
        }
    }
    const bool single_num = nt.size() == 1;
    const std::string num_body = join_terms(nt);
    if (den.empty()) {
        return {neg_lead, num_body, single_num};
    }
    if (s == style::latex) {
        return {neg_lead, "\\frac{" + num_body + "}{" + den + "}", true};
    }
    return {neg_lead, (single_num ? num_body : "(" + num_body + ")") + "/" + den, true};
}

std::string ratfunc_string(const ratfunc &r, style s)
{
    const factor f = ratfunc_factor(r, s);
    if (!f.single) {
        return join_terms(lambda_terms(r.num(), s));
    }
    return f.negative ? "-" + f.body : f.body;
}

template <class K>
std::string poly_string(const poly<K> &p, style s)
{
    const auto &c = p.coeffs();
    std::vector<term> out;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k].is_zero()) {
            continue;
        }
        if constexpr (std::is_same_v<K, rational>) {
            out.push_back(monomial_term(c[k], "x", k, s));
        } else {
            if (const auto q = c[k].as_rational()) {
                out.push_back(monomial_term(*q, "x", k, s));
                continue;
            }
            factor f = ratfunc_factor(c[k], s);
            if (k == 0) {
                out.push_back({f.negative, f.single ? f.body : paren(f.body, s)});
                continue;
            }
            const std::string xk = power("x", k, s);
            out.push_back({f.negative, paren(f.body, s) + (s == style::latex ? " " : "*") + xk});
        }
    }
    return join_terms(out);
}

std::string series_string(const series<ratfunc> &ser, style s)
{
    std::vector<term> out;
    for (std::size_t k = 0; k < ser.precision(); ++k) {
        const ratfunc &c = ser.coeffs()[k];
        if (c.is_zero()) {
            continue;
        }
        if (k == 0) {
            const factor f = ratfunc_factor(c, s);
            out.push_back({f.negative, f.single ? f.body : paren(f.body, s)});
            continue;
        }
        std::string tk = power("t", k, s);
        if (k >= 2) {
            tk = s == style::latex ? "\\frac{" + tk + "}{" + std::to_string(k) + "!}" : tk + "/" + std::to_string(k) + "!";
        }
        if (c.is_one()) {
            out.push_back({false, tk});
            continue;
        }
        if (const auto q = c.as_rational(); q && (-*q).is_one()) {
            out.push_back({true, tk});
            continue;
        }
        const factor f = ratfunc_factor(c, s);
        const bool bare = c.as_rational().has_value();
        out.push_back({f.negative, (bare ? f.body : paren(f.body, s)) + (s == style::latex ? " " : "*") + tk});
    }
    const std::string big_o = s == style::latex ? "O(t^{" + std::to_string(ser.precision()) + "})" : "O(t^" + std::to_string(ser.precision()) + ")";
    out.push_back({false, big_o});
    return join_terms(out);
}

// ---------------------------------------------------------------------------
// Parser.

class parser
{
public:
    explicit parser(std::string_view text) : m_text(text) {}

    poly<ratfunc> parse_all()
    {
        auto v = expr();
        skip_ws();
        if (m_pos != m_text.size()) {
            fail("unexpected '" + std::string(1, m_text[m_pos]) + "'");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw domain_error("cannot parse polynomial at offset " + std::to_string(m_pos) + ": " + what);
    }

    void skip_ws()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (m_pos < m_text.size() && m_text[m_pos] == c) {
            ++m_pos;
            return true;
        }
        return false;
    }

    poly<ratfunc> expr()
    {
        auto v = product();
        while (true) {
            if (accept('+')) {
                v += product();
            } else if (accept('-')) {
                v -= product();
            } else {
                return v;
            }
        }
    }

    poly<ratfunc> product()
    {
        auto v = unary();
        while (true) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                const auto d = unary();
                if (d.degree() > 0) {
                    fail("division by a term containing x");
                }
                if (d.is_zero()) {
                    fail("division by zero");
                }
                v = d.coeffs()[0].inverse() * v;
            } else {
                return v;
            }
        }
    }

    poly<ratfunc> unary()
    {
        if (accept('-')) {
            return -unary();
        }
        return powered();
    }

    poly<ratfunc> powered()
    {
        auto base = atom();
        if (!accept('^')) {
            return base;
        }
        skip_ws();
        const std::size_t start = m_pos;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
        if (start == m_pos) {
            fail("expected a nonnegative integer exponent");
        }
        const unsigned long k = std::stoul(std::string(m_text.substr(start, m_pos - start)));
        auto acc = poly<ratfunc>::constant(1);
        for (unsigned long i = 0; i < k; ++i) {
            acc = acc * base;
        }
        return acc;
    }

    poly<ratfunc> atom()
    {
        skip_ws();
        if (m_pos >= m_text.size()) {
            fail("unexpected end of input");
        }
        if (accept('(')) {
            auto v = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return v;
        }
        const char c = m_text[m_pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = m_pos;
            while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
                ++m_pos;
            }
            return poly<ratfunc>::constant(ratfunc(rational::from_strings(m_text.substr(start, m_pos - start), "1")));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = m_pos;
            while (m_pos < m_text.size() && std::isalpha(static_cast<unsigned char>(m_text[m_pos]))) {
                ++m_pos;
            }
            const auto word = m_text.substr(start, m_pos - start);
            if (word == "x") {
                return poly<ratfunc>::x();
            }
            if (word == "lambda") {
                return poly<ratfunc>::constant(ratfunc::lambda());
            }
            m_pos = start;
            fail("unknown symbol '" + std::string(word) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

} // namespace

std::string to_plain(const rational &r)
{
    return r.to_string();
}

std::string to_plain(const lambda_poly &p)
{
    return join_terms(lambda_terms(p, style::plain));
}

std::string to_plain(const ratfunc &r)
{
    return ratfunc_string(r, style::plain);
}

std::string to_plain(const poly<rational> &p)
{
    return poly_string(p, style::plain);
}

std::string to_plain(const poly<ratfunc> &p)
{
    return poly_string(p, style::plain);
}

std::string to_plain(const series<ratfunc> &s)
{
    return series_string(s, style::plain);
}

std::string to_latex(const rational &r)
{
    return (r.sign() < 0 ? "-" : "") + abs_rational(r, style::latex);
}

std::string to_latex(const lambda_poly &p)
{
    return join_terms(lambda_terms(p, style::latex));
}

std::string to_latex(const ratfunc &r)
{
    return ratfunc_string(r, style::latex);
}

std::string to_latex(const poly<rational> &p)
{
    return poly_string(p, style::latex);
}

std::string to_latex(const poly<ratfunc> &p)
{
    return poly_string(p, style::latex);
}

std::string to_latex(const series<ratfunc> &s)
{
    return series_string(s, style::latex);
}

poly<ratfunc> parse_poly(std::string_view text)
{
    return parser(text).parse_all();
}

ratfunc parse_ratfunc(std::string_view text)
{
    const auto p = parse_poly(text);
    if (p.degree() > 0) {
        throw domain_error("expected an expression in lambda only");
    }
    return p.coeff(0);
}

} // namespace umbra
