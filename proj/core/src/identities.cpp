#include <umbra/identities.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <tuple>
#include <utility>

#include <umbra/error.hpp>
#include <umbra/families.hpp>
#include <umbra/polyop.hpp>
#include <umbra/umbral.hpp>

namespace umbra
{

namespace
{

using qs = series<ratfunc>;
using rp = poly<ratfunc>;

struct named_poly {
    std::string name;
    rp value;
};

struct chain {
    std::string name;
    std::vector<named_poly> routes;
};

// Everything computed for one degree.
struct degree_case {
    std::vector<chain> chains;
    std::vector<named_poly> variants;
};

const ratfunc &lam()
{
    static const ratfunc l = ratfunc::lambda();
    return l;
}

const ratfunc &oml()
{
    static const ratfunc v = ratfunc(1) - ratfunc::lambda();
    return v;
}

ratfunc rf_pow(const ratfunc &base, long e)
{
    ratfunc b = e < 0 ? base.inverse() : base;
    ratfunc acc(1);
    for (long i = 0; i < (e < 0 ? -e : e); ++i) {
        acc *= b;
    }
    return acc;
}

ratfunc q(const rational &r)
{
    return ratfunc(r);
}

ratfunc binom(std::size_t n, std::size_t k)
{
    return ratfunc(rational::binomial(n, k));
}

ratfunc fact(std::size_t n)
{
    return ratfunc(rational::factorial(n));
}

rp xp()
{
    return rp::x();
}

rp xpow(std::size_t k)
{
    return rp::monomial(1, k);
}

rp xplus_pow(long j, std::size_t k)
{
    return xpow(k).shift(ratfunc(j));
}

rp constant(const ratfunc &c)
{
    return rp::constant(c);
}

// Lazily computed sequences and series shared by all degrees of one verify call.
class context
{
public:
    context(std::size_t n_max, const std::map<std::string, long> &params)
        : m_n_max(n_max), m_params(params), m_precision(std::max(working_precision(n_max), n_max + 2)),
          t(gf::t(m_precision)), one(qs::one(m_precision)), e(gf::exp(1, m_precision)), G(gf::frobenius_kernel(m_precision)),
          G_inv((e - qs::constant(lam(), m_precision)) * oml().inverse()), bk(gf::bernoulli_kernel(m_precision)),
          bk_inv(gf::bernoulli_kernel_inverse(m_precision)), ml(gf::mittag_leffler_delta(m_precision)),
          ml_lambda(gf::lambda_mittag_leffler_delta(m_precision))
    {
    }

    std::size_t n_max() const { return m_n_max; }
    std::size_t precision() const { return m_precision; }
    long param(const std::string &k) const { return m_params.at(k); }

    const rp &fam(family_kind kind, long order, std::size_t n, std::optional<family_route> route = std::nullopt)
    {
        const auto key = std::make_tuple(static_cast<int>(kind), order, route ? static_cast<int>(*route) : -1);
        auto it = m_seqs.find(key);
        if (it == m_seqs.end()) {
            it = m_seqs.emplace(key, family_sequence({kind, order}, m_n_max, route)).first;
        }
        return it->second[n];
    }

    // Bernoulli polynomial B_n^{(order)}(x).
    const rp &bernoulli(long order, std::size_t n) { return fam(family_kind::bernoulli, order, n); }
    // Frobenius-Euler polynomial H_n^{(order)}(x|lambda).
    const rp &frobenius_euler(long order, std::size_t n) { return fam(family_kind::frobenius_euler, order, n); }

    // Associated sequence of f via the Sheffer route, cached under key.
    const rp &assoc(const std::string &key, const std::function<qs()> &make_f, std::size_t n)
    {
        auto it = m_assoc.find(key);
        if (it == m_assoc.end()) {
            it = m_assoc.emplace(key, associated_sequence(make_f(), m_n_max)).first;
        }
        return it->second[n];
    }

private:
    std::size_t m_n_max;
    std::map<std::string, long> m_params;
    std::size_t m_precision;

public:
    const qs t, one, e, G, G_inv, bk, bk_inv, ml, ml_lambda;

private:
    std::map<std::tuple<int, long, int>, poly_sequence<ratfunc>> m_seqs;
    std::map<std::string, poly_sequence<ratfunc>> m_assoc;
};

// x (f/g)^n x^{-1} p where the operator is given directly.
rp x_op_xinv(const qs &op, const rp &p)
{
    return mul_by_x(apply_series(op, div_by_x(p)));
}

// ---------------------------------------------------------------------------
// Degree builders.

degree_case build_thm1(context &c, std::size_t n)
{
    const rp &s = c.assoc("tG", [&] { return c.t * c.G; }, n);
    return {{{"associated sequence", {{"associated sequence of (1-lambda)t/(e^t-lambda)", s}, {"closed form x/(1-lambda)^n sum_l C(n,l) (-lambda)^(n-l) (x+l)^(n-1)", closed_form({family_kind::assoc_s}, n)}}}}, {}};
}

degree_case build_eq18(context &c, std::size_t n)
{
    const rp &d = c.fam(family_kind::daehee, 1, n);
    const rp &m = c.assoc("ml", [&] { return c.ml; }, n);
    return {{{"Mittag-Leffler from Daehee",
              {{"(1-lambda)/(e^t-lambda) applied to D_n from its generating function", apply_series(c.G, d)},
               {"associated sequence of (e^t-1)/(e^t+1)", m},
               {"falling-factorial sum over C(n,k) (n-1)_(n-k) 2^k (x)_k", closed_form({family_kind::mittag_leffler}, n)}}}},
            {}};
}

degree_case build_eq20(context &c, std::size_t n)
{
    poly_sequence<ratfunc> monomials;
    for (std::size_t k = 0; k <= n; ++k) {
        monomials.polys.push_back(xpow(k));
    }
    const qs tg = c.t * c.G;
    const rp transferred = transfer(monomials, c.t, tg, n);
    const qs shifted = pow(c.e - qs::constant(lam(), c.precision()), static_cast<long>(n));
    const rp op_form = rf_pow(oml(), -static_cast<long>(n)) * mul_by_x(apply_series(shifted, xpow(n - 1)));
    rp sum;
    for (std::size_t l = 0; l <= n; ++l) {
        sum += (binom(n, l) * rf_pow(-lam(), static_cast<long>(n - l))) * xplus_pow(static_cast<long>(l), n - 1);
    }
    const rp binomial_form = rf_pow(oml(), -static_cast<long>(n)) * mul_by_x(sum);
    return {{{"transfer from x^n",
              {{"transfer formula from x^n to (1-lambda)t/(e^t-lambda)", transferred},
               {"(1-lambda)^(-n) x (e^t-lambda)^n x^(n-1)", op_form},
               {"binomial sum of shifts (x+l)^(n-1)", binomial_form},
               {"associated sequence of (1-lambda)t/(e^t-lambda)", c.assoc("tG", [&] { return c.t * c.G; }, n)}}}},
            {}};
}

// sum_l sum_j C(n,l) C(n,j) (1-lambda)^{-n} (-lambda)^{n-j} weight(l, j), as a helper for the chain.
template <class F>
rp double_sum(std::size_t n, std::size_t l_from, F &&term)
{
    rp out;
    const ratfunc scale = rf_pow(oml(), -static_cast<long>(n));
    for (std::size_t l = l_from; l <= n; ++l) {
        for (std::size_t j = 0; j <= n; ++j) {
            const ratfunc coeff = binom(n, l) * binom(n, j) * scale * rf_pow(-lam(), static_cast<long>(n - j));
            out += coeff * term(l, j);
        }
    }
    return out;
}

degree_case build_eq21_24(context &c, std::size_t n)
{
    const std::size_t p = c.precision();
    const long ln = static_cast<long>(n);
    const rp &m = c.assoc("ml", [&] { return c.ml; }, n);
    poly_sequence<ratfunc> s_seq;
    for (std::size_t k = 0; k <= n; ++k) {
        s_seq.polys.push_back(c.assoc("tG", [&] { return c.t * c.G; }, k));
    }
    const rp &s = s_seq.polys[n];
    const rp s_div = div_by_x(s);
    const qs g_n = pow(c.G, ln);
    const qs two_bk = ratfunc(2) * c.bk;

    std::vector<named_poly> steps;
    steps.push_back({"associated sequence of (e^t-1)/(e^t+1)", m});
    steps.push_back({"transfer formula from S_n(x|lambda)", transfer(s_seq, c.t * c.G, c.ml, n)});
    steps.push_back({"operator rearrangement: G^n (t(e^t+1)/(e^t-1))^n", x_op_xinv(g_n * pow((c.e + c.one) * c.bk, ln), s)});
    steps.push_back({"operator rearrangement: G^n (t + 2t/(e^t-1))^n", x_op_xinv(g_n * pow(c.t + two_bk, ln), s)});

    // t^{n-l} (2t/(e^t-1))^l for each l.
    std::vector<qs> parts;
    for (std::size_t l = 0; l <= n; ++l) {
        parts.push_back(qs::monomial(n - l, p) * pow(two_bk, static_cast<long>(l)));
    }
    rp by_l;
    for (std::size_t l = 0; l <= n; ++l) {
        by_l += binom(n, l) * apply_series(parts[l], s_div);
    }
    steps.push_back({"binomial expansion over l", mul_by_x(apply_series(g_n, by_l))});

    const rp subst = double_sum(n, 0, [&](std::size_t l, std::size_t j) { return apply_series(parts[l], xplus_pow(static_cast<long>(j), n - 1)); });
    steps.push_back({"closed form of S_n substituted", mul_by_x(apply_series(g_n, subst))});

    const rp bern = double_sum(n, 0, [&](std::size_t l, std::size_t j) {
        const rp b = c.bernoulli(static_cast<long>(l), n - 1).shift(ratfunc(static_cast<long>(j)));
        return q(rational(2).pow(static_cast<long>(l))) * b.derivative(n - l);
    });
    steps.push_back({"Bernoulli substitution 2^l t^(n-l) B_(n-1)^(l)(x+j)", mul_by_x(apply_series(g_n, bern))});

    const rp reduced = double_sum(n, 1, [&](std::size_t l, std::size_t j) {
        const rp b = c.bernoulli(static_cast<long>(l), l - 1).shift(ratfunc(static_cast<long>(j)));
        return q(rational(2).pow(static_cast<long>(l)) * rational::falling(ln - 1, n - l)) * b;
    });
    steps.push_back({"degree reduction (n-1)_(n-l) B_(l-1)^(l)(x+j), l >= 1", mul_by_x(apply_series(g_n, reduced))});

    const auto bernoulli_expanded = [&](std::size_t l, std::size_t j, const std::function<rp(std::size_t, std::size_t)> &power) {
        rp inner;
        for (std::size_t mm = 0; mm + 1 <= l; ++mm) {
            const ratfunc number = c.bernoulli(static_cast<long>(l), l - 1 - mm).coeff(0);
            inner += (number * binom(l - 1, mm)) * power(j, mm);
        }
        return q(rational(2).pow(static_cast<long>(l)) * rational::factorial(n - 1) / rational::factorial(l - 1)) * inner;
    };
    const rp expanded = double_sum(n, 1, [&](std::size_t l, std::size_t j) {
        return bernoulli_expanded(l, j, [&](std::size_t jj, std::size_t mm) { return apply_series(g_n, xplus_pow(static_cast<long>(jj), mm)); });
    });
    steps.push_back({"Bernoulli polynomial expanded in its numbers", mul_by_x(expanded)});

    const rp fe = double_sum(n, 1, [&](std::size_t l, std::size_t j) {
        return bernoulli_expanded(l, j, [&](std::size_t jj, std::size_t mm) { return c.frobenius_euler(ln, mm).shift(ratfunc(static_cast<long>(jj))); });
    });
    steps.push_back({"Frobenius-Euler substitution H_m^(n)(x+j|lambda)", mul_by_x(fe)});

    return {{{"derivation chain", std::move(steps)}}, {}};
}

// Triple sum over l, j, m with the coefficient shared by the Daehee formulas;
// body(j, m) supplies the polynomial factor.
template <class F>
rp daehee_triple_sum(context &c, std::size_t n, F &&body)
{
    rp out;
    for (std::size_t l = 1; l <= n; ++l) {
        for (std::size_t j = 0; j <= n; ++j) {
            for (std::size_t m = 0; m + 1 <= l; ++m) {
                const rational r = rational::binomial(n, l) * rational::binomial(n, j) * rational::binomial(l - 1, m) * rational(2).pow(static_cast<long>(l)) / rational::factorial(l - 1);
                const ratfunc coeff = q(r) * rf_pow(-lam(), static_cast<long>(n - j)) * c.bernoulli(static_cast<long>(l), l - 1 - m).coeff(0);
                out += coeff * body(j, m);
            }
        }
    }
    return (fact(n - 1) * rf_pow(oml(), -static_cast<long>(n))) * out;
}

degree_case build_thm2(context &c, std::size_t n)
{
    const long ln = static_cast<long>(n);
    const rp &d = c.fam(family_kind::daehee, 1, n);
    const rp &m = c.assoc("ml", [&] { return c.ml; }, n);
    const auto brace = [&](std::size_t j, std::size_t mm) {
        const long lj = static_cast<long>(j);
        return xp() * c.frobenius_euler(ln - 1, mm).shift(ratfunc(lj)) + oml().inverse() * c.frobenius_euler(ln, mm).shift(ratfunc(lj + 1));
    };
    const rp eq26 = daehee_triple_sum(c, n, brace);
    const rp thm2 = daehee_triple_sum(c, n, [&](std::size_t j, std::size_t mm) { return xp() * brace(j, mm); });
    return {{{"Daehee",
              {{"D_n from its generating function", d},
               {"D_n Sheffer sequence of ((1-lambda)/(e^t-lambda), (e^t-1)/(e^t+1))", c.fam(family_kind::daehee, 1, n, family_route::sheffer)},
               {"(e^t-lambda)/(1-lambda) applied to M_n", apply_series(c.G_inv, m)}}}},
            {{"triple-sum", eq26}, {"triple-sum-extra-x", thm2}}};
}

degree_case build_eq28(context &c, std::size_t n)
{
    const qs f = c.t * inverse(c.e + c.one);
    poly_sequence<ratfunc> monomials;
    for (std::size_t k = 0; k <= n; ++k) {
        monomials.polys.push_back(xpow(k));
    }
    rp sum;
    for (std::size_t j = 0; j <= n; ++j) {
        sum += binom(n, j) * xplus_pow(static_cast<long>(j), n - 1);
    }
    return {{{"associated sequence of t/(e^t+1)",
              {{"associated sequence of t/(e^t+1)", c.assoc("t/(e+1)", [&] { return f; }, n)},
               {"transfer formula from x^n", transfer(monomials, c.t, f, n)},
               {"x (e^t+1)^n x^(n-1)", mul_by_x(apply_series(pow(c.e + c.one, static_cast<long>(n)), xpow(n - 1)))},
               {"x sum_j C(n,j) (x+j)^(n-1)", mul_by_x(sum)}}}},
            {}};
}

// sum_j C(n,j) x B_{n-1}^{(n)}(x+j+shift).
rp ml_bernoulli_sum(context &c, std::size_t n, long shift, bool unshifted_prefactor = false)
{
    rp out;
    const rp &b = c.bernoulli(static_cast<long>(n), n - 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const rp pre = unshifted_prefactor ? xp() : xp().shift(ratfunc(shift));
        out += binom(n, j) * (pre * b.shift(ratfunc(static_cast<long>(j) + shift)));
    }
    return out;
}

degree_case build_eq29(context &c, std::size_t n)
{
    const qs f = c.t * inverse(c.e + c.one);
    poly_sequence<ratfunc> s_seq;
    for (std::size_t k = 0; k <= n; ++k) {
        s_seq.polys.push_back(c.assoc("t/(e+1)", [&] { return f; }, k));
    }
    return {{{"Mittag-Leffler from t/(e^t+1)",
              {{"associated sequence of (e^t-1)/(e^t+1)", c.assoc("ml", [&] { return c.ml; }, n)},
               {"transfer formula from the associated sequence of t/(e^t+1)", transfer(s_seq, f, c.ml, n)},
               {"x (t/(e^t-1))^n x^(-1) S_n(x)", x_op_xinv(pow(c.bk, static_cast<long>(n)), s_seq.polys[n])},
               {"sum_j C(n,j) x B_(n-1)^(n)(x+j)", ml_bernoulli_sum(c, n, 0)}}}},
            {}};
}

degree_case build_eq30(context &c, std::size_t n)
{
    const rp base = ml_bernoulli_sum(c, n, 0);
    const ratfunc neg_part = lam() / (lam() - ratfunc(1));
    const rp shifted = oml().inverse() * ml_bernoulli_sum(c, n, 1) + neg_part * base;
    const rp unshifted = oml().inverse() * ml_bernoulli_sum(c, n, 1, true) + neg_part * base;
    return {{{"Daehee from Mittag-Leffler",
              {{"D_n from its generating function", c.fam(family_kind::daehee, 1, n)},
               {"(e^t-lambda)/(1-lambda) applied to sum_j C(n,j) x B_(n-1)^(n)(x+j)", apply_series(c.G_inv, base)}}}},
            {{"shifted-prefactor", shifted}, {"unshifted-prefactor", unshifted}}};
}

degree_case build_eq31(context &c, std::size_t n)
{
    return {{{"Daehee",
              {{"D_n from its generating function", c.fam(family_kind::daehee, 1, n)},
               {"D_n Sheffer sequence of ((1-lambda)/(e^t-lambda), (e^t-1)/(e^t+1))", c.fam(family_kind::daehee, 1, n, family_route::sheffer)},
               {"falling-factorial expression (1/(1-lambda)) sum C(n,k)(n-1)_(n-k) 2^k {(x+1)_k - lambda (x)_k}", closed_form({family_kind::daehee}, n)}}}},
            {}};
}

// sum_l C(n-1,l) B_l^{(n)} { x H_{n-1-l}^{(a)}(x) - a/(1-lambda) H_{n-1-l}^{(a+1)}(x+1) }.
rp changhee_sum(context &c, std::size_t n, long a)
{
    const long ln = static_cast<long>(n);
    const ratfunc scale = ratfunc(a) / oml();
    rp out;
    for (std::size_t l = 0; l + 1 <= n; ++l) {
        const std::size_t m = n - 1 - l;
        const rp brace = xp() * c.frobenius_euler(a, m) - scale * c.frobenius_euler(a + 1, m).shift(1);
        out += (c.bernoulli(ln, l).coeff(0) * binom(n - 1, l)) * brace;
    }
    return out;
}

degree_case build_thm3(context &c, std::size_t n)
{
    const long a = c.param("a");
    const long ln = static_cast<long>(n);
    const rp xb = xp() * c.bernoulli(ln, n - 1);
    return {{{"Changhee",
              {{"C_n^(a) from its generating function", c.fam(family_kind::changhee, a, n)},
               {"C_n^(a) Sheffer sequence of (((1-lambda)/(e^t-lambda))^a, e^t-1)", c.fam(family_kind::changhee, a, n, family_route::sheffer)},
               {"((e^t-lambda)/(1-lambda))^a applied to x B_(n-1)^(n)(x)", apply_series(pow(c.G, -a), xb)},
               {"((e^t-lambda)/(1-lambda))^a applied to the associated sequence of e^t-1", apply_series(pow(c.G, -a), c.assoc("e-1", [&] { return c.e - c.one; }, n))}}}},
            {{"order-a", changhee_sum(c, n, a)}, {"order-minus-a", changhee_sum(c, n, -a)}}};
}

degree_case build_thm4(context &c, std::size_t n)
{
    const long a = c.param("a");
    const long an = a * static_cast<long>(n);
    const rp lhs = xp() * c.frobenius_euler(an, n - 1);
    const std::string ka = std::to_string(a);
    return {{{"x H_(n-1)^(an)",
              {{"x H_(n-1)^(an)(x|lambda)", lhs},
               {"x ((1-lambda)/(e^t-lambda))^(an) x^(n-1)", mul_by_x(apply_series(pow(c.G, an), xpow(n - 1)))}}}},
            {{"pair-t((e^t-lambda)/(1-lambda))^a", c.assoc("tG^-" + ka, [&] { return c.t * pow(c.G, -a); }, n)},
             {"pair-t((1-lambda)/(e^t-lambda))^a", c.assoc("tG^" + ka, [&] { return c.t * pow(c.G, a); }, n)}}};
}

qs eq39_delta(context &c, long b)
{
    return c.t * pow(c.bk_inv, b);
}

degree_case build_eq39(context &c, std::size_t n)
{
    const long b = c.param("b");
    const long bn = b * static_cast<long>(n);
    return {{{"x B_(n-1)^(bn)",
              {{"associated sequence of t((e^t-1)/t)^b", c.assoc("tB^" + std::to_string(b), [&] { return eq39_delta(c, b); }, n)},
               {"x B_(n-1)^(bn)(x)", xp() * c.bernoulli(bn, n - 1)},
               {"x (t/(e^t-1))^(bn) x^(n-1)", mul_by_x(apply_series(pow(c.bk, bn), xpow(n - 1)))}}}},
            {}};
}

degree_case build_eq40_41(context &c, std::size_t n)
{
    const long a = c.param("a");
    const long b = c.param("b");
    const long ln = static_cast<long>(n);
    const long an = a * ln;
    const long bn = b * ln;
    poly_sequence<ratfunc> p_seq;
    for (std::size_t k = 0; k <= n; ++k) {
        p_seq.polys.push_back(xp() * c.bernoulli(b * static_cast<long>(k), k == 0 ? 0 : k - 1));
    }
    p_seq.polys[0] = constant(1);
    const rp &h = c.frobenius_euler(an, n - 1);
    const qs op = pow(c.G, an) * pow(c.bk_inv, bn);
    return {{{"transfer between the two associated sequences",
              {{"x H_(n-1)^(an)(x|lambda)", xp() * h},
               {"transfer formula from x B_(n-1)^(bn) to t((e^t-lambda)/(1-lambda))^a", transfer(p_seq, eq39_delta(c, b), c.t * pow(c.G, -a), n)}}},
             {"both sides reduce to x^(n-1)",
              {{"((e^t-lambda)/(1-lambda))^(an) H_(n-1)^(an)(x|lambda)", apply_series(pow(c.G, -an), h)},
               {"((e^t-1)/t)^(bn) B_(n-1)^(bn)(x)", apply_series(pow(c.bk_inv, bn), c.bernoulli(bn, n - 1))},
               {"x^(n-1)", xpow(n - 1)}}}},
            {{"superscript-bn", mul_by_x(apply_series(op, c.bernoulli(bn, n - 1)))}, {"superscript-an", mul_by_x(apply_series(op, c.bernoulli(an, n - 1)))}}};
}

degree_case build_thm5(context &c, std::size_t n)
{
    const long a = c.param("a");
    const long b = c.param("b");
    const long ln = static_cast<long>(n);
    const std::size_t an = static_cast<std::size_t>(a * ln);
    const std::size_t bn = static_cast<std::size_t>(b * ln);
    const rp &h = c.frobenius_euler(static_cast<long>(an), n - 1);
    const ratfunc scale = rf_pow(oml(), static_cast<long>(an));

    rp lhs;
    for (std::size_t j = 0; j <= an; ++j) {
        lhs += (binom(an, j) * rf_pow(-lam(), static_cast<long>(an - j))) * h.shift(ratfunc(static_cast<long>(j)));
    }
    rp rhs;
    for (std::size_t j = 0; j + 1 <= n; ++j) {
        const rational r = rational::factorial(bn) / (rational::factorial(j + bn) * rational::factorial(n - j - 1)) * stirling2(j + bn, bn);
        rhs += q(r) * c.bernoulli(static_cast<long>(bn), n - 1 - j);
    }
    rhs = (scale * fact(n - 1)) * rhs;
    return {{{"shifted Frobenius-Euler sum against Bernoulli sum",
              {{"sum_j C(an,j) (-lambda)^(an-j) H_(n-1)^(an)(x+j|lambda)", lhs},
               {"(1-lambda)^(an) (n-1)! sum_j (bn)! S2(j+bn,bn) / ((j+bn)! (n-j-1)!) B_(n-1-j)^(bn)(x)", rhs},
               {"(1-lambda)^(an) ((e^t-lambda)/(1-lambda))^(an) applied to H_(n-1)^(an)", scale * apply_series(pow(c.G, -static_cast<long>(an)), h)},
               {"(1-lambda)^(an) ((e^t-1)/t)^(bn) applied to B_(n-1)^(bn)", scale * apply_series(pow(c.bk_inv, static_cast<long>(bn)), c.bernoulli(static_cast<long>(bn), n - 1))}}}},
            {}};
}

degree_case build_remark45(context &c, std::size_t n)
{
    const long ln = static_cast<long>(n);
    const auto form = [&](long order) {
        const rp &h = c.frobenius_euler(order, n - 1);
        return oml().inverse() * (xp().shift(1) * h.shift(1) - lam() * (xp() * h));
    };
    return {{{"Sheffer sequence of (G, tG)",
              {{"Sheffer sequence of ((1-lambda)/(e^t-lambda), t(1-lambda)/(e^t-lambda))", c.fam(family_kind::remark_s44, 1, n)},
               {"(e^t-lambda)/(1-lambda) applied to the associated sequence of t(1-lambda)/(e^t-lambda)", apply_series(c.G_inv, c.assoc("tG", [&] { return c.t * c.G; }, n))}}}},
            {{"superscript-n", form(ln)}, {"superscript-minus-n", form(-ln)}}};
}

// x sum_l C(n,l) (-lambda)^{n-l} B_{n-1}^{(n)}(x+l).
rp mstar_bernoulli_sum(context &c, std::size_t n)
{
    rp out;
    const rp &b = c.bernoulli(static_cast<long>(n), n - 1);
    for (std::size_t l = 0; l <= n; ++l) {
        out += (binom(n, l) * rf_pow(-lam(), static_cast<long>(n - l))) * b.shift(ratfunc(static_cast<long>(l)));
    }
    return mul_by_x(out);
}

degree_case build_thm6(context &c, std::size_t n)
{
    const long ln = static_cast<long>(n);
    // t (e^t - lambda)/(e^t - 1) = (e^t - lambda) * t/(e^t - 1).
    const qs op = pow((c.e - qs::constant(lam(), c.precision())) * c.bk, ln);
    return {{{"lambda Mittag-Leffler",
              {{"associated sequence of (e^t-1)/(e^t-lambda)", c.assoc("ml-lambda", [&] { return c.ml_lambda; }, n)},
               {"M*_n from the generating function ((1-lambda t)/(1-t))^x", c.fam(family_kind::mittag_leffler_lambda, 1, n)},
               {"x (t(e^t-lambda)/(e^t-1))^n x^(n-1)", mul_by_x(apply_series(op, xpow(n - 1)))},
               {"x sum_l C(n,l) (-lambda)^(n-l) B_(n-1)^(n)(x+l)", mstar_bernoulli_sum(c, n)},
               {"closed form", closed_form({family_kind::mittag_leffler_lambda}, n)}}}},
            {}};
}

degree_case build_eq50(context &c, std::size_t n)
{
    const long ln = static_cast<long>(n);
    rp out;
    for (std::size_t l = 0; l <= n; ++l) {
        for (std::size_t j = 0; j + 1 <= n; ++j) {
            const ratfunc coeff = binom(n, l) * binom(n - 1, j) * rf_pow(-lam(), static_cast<long>(n - l)) * c.bernoulli(ln, n - 1 - j).coeff(0);
            out += coeff * xplus_pow(static_cast<long>(l), j);
        }
    }
    return {{{"lambda Mittag-Leffler",
              {{"associated sequence of (e^t-1)/(e^t-lambda)", c.assoc("ml-lambda", [&] { return c.ml_lambda; }, n)},
               {"double sum over Bernoulli numbers and (x+l)^j", mul_by_x(out)}}}},
            {}};
}

degree_case build_eq51(context &c, std::size_t n)
{
    const long ln = static_cast<long>(n);
    const rp &mstar = c.assoc("ml-lambda", [&] { return c.ml_lambda; }, n);
    const auto form = [&](bool index_n_minus_j) {
        rp out;
        for (std::size_t j = 0; j <= n; ++j) {
            const long lj = static_cast<long>(j);
            const rp &b1 = c.bernoulli(ln, index_n_minus_j ? n - j : n - 1);
            const rp brace = xp().shift(1) * b1.shift(ratfunc(lj + 1)) - lam() * (xp() * c.bernoulli(ln, n - 1).shift(ratfunc(lj)));
            out += (binom(n, j) * rf_pow(-lam(), static_cast<long>(n - j))) * brace;
        }
        return oml().inverse() * out;
    };
    return {{{"Daehee of the second kind",
              {{"D*_n from its generating function", c.fam(family_kind::daehee_second_kind, 1, n)},
               {"D*_n Sheffer sequence of ((1-lambda)/(e^t-lambda), (e^t-1)/(e^t-lambda))", c.fam(family_kind::daehee_second_kind, 1, n, family_route::sheffer)},
               {"(e^t-lambda)/(1-lambda) applied to M*_n", apply_series(c.G_inv, mstar)}}}},
            {{"index-n-j", form(true)}, {"index-n-1", form(false)}}};
}

degree_case build_eq53(context &c, std::size_t n)
{
    std::vector<named_poly> routes;
    routes.push_back({"T*_n from exp(x (1 - sqrt(1-t^2))/t)", c.fam(family_kind::assoc_t, 1, n)});
    routes.push_back({"associated sequence of 2t/(1+t^2)", c.fam(family_kind::assoc_t, 1, n, family_route::sheffer)});
    if (n >= 1) {
        std::vector<ratfunc> half(c.precision());
        half[0] = q(rational(1, 2));
        if (half.size() > 2) {
            half[2] = q(rational(1, 2));
        }
        const qs op = pow(qs::from_ordinary(std::move(half)), static_cast<long>(n));
        routes.push_back({"x ((1+t^2)/2)^n x^(n-1)", mul_by_x(apply_series(op, xpow(n - 1)))});
        routes.push_back({"(1/2)^n sum_l C(n,l) (n-1)!/(n-2l-1)! x^(n-2l)", closed_form({family_kind::assoc_t}, n)});
    }
    return {{{"T*", std::move(routes)}}, {}};
}

degree_case build_eq13(context &c, std::size_t n)
{
    const long a = c.param("a");
    const std::array<rational, 4> ys{rational(0), rational(1), rational(-1), rational(1, 2)};
    degree_case out;
    struct pair_def {
        std::string label;
        family_id id;
        std::string assoc_key;
        qs f;
    };
    const std::vector<pair_def> pairs{
        {"Daehee", {family_kind::daehee}, "ml", c.ml},
        {"Changhee order " + std::to_string(a), {family_kind::changhee, a}, "e-1", c.e - c.one},
    };
    for (const auto &pd : pairs) {
        for (const auto &y : ys) {
            const ratfunc yy(y);
            rp left_form;
            rp right_form;
            for (std::size_t k = 0; k <= n; ++k) {
                const rp &pk = c.assoc(pd.assoc_key, [&] { return pd.f; }, k);
                const rp &s_rest = c.fam(pd.id.kind, pd.id.order, n - k);
                left_form += (binom(n, k) * pk.eval(yy)) * s_rest;
                right_form += (binom(n, k) * s_rest.eval(yy)) * pk;
            }
            out.chains.push_back({pd.label + ", y = " + y.to_string(),
                                  {{"s_n(x+y)", c.fam(pd.id.kind, pd.id.order, n).shift(yy)},
                                   {"sum_k C(n,k) p_k(y) s_(n-k)(x)", left_form},
                                   {"sum_k C(n,k) s_(n-k)(y) p_k(x)", right_form}}});
        }
    }
    return out;
}

degree_case build_eq9(context &c, std::size_t n)
{
    const std::vector<qs> all{c.G, c.ml, c.bk};
    degree_case out;
    for (std::size_t m = 1; m <= all.size(); ++m) {
        const std::vector<qs> fs(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
        out.chains.push_back({"m = " + std::to_string(m),
                              {{"pairing of the product series with x^n", constant(pairing_of_product(fs, n))}, {"multinomial sum over compositions of n", constant(multinomial_expansion(fs, n))}}});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Registry.

struct variant_def {
    std::string name;
    std::string description;
};

enum class range { any, nonnegative, nonzero };

struct param_def {
    std::string key;
    long fallback;
    range allowed;
};

struct identity_entry {
    identity_id id;
    std::string_view name;
    std::string_view summary;
    std::size_t min_degree;
    std::vector<param_def> params;
    std::vector<variant_def> variants;
    std::function<degree_case(context &, std::size_t)> build;
};

const std::vector<identity_entry> &registry()
{
    static const std::vector<identity_entry> entries{
        {identity_id::thm1, "THM1", "closed form of the associated sequence of (1-lambda)t/(e^t-lambda); at n = 0 the x x^(-1) convention gives 1", 0, {}, {}, build_thm1},
        {identity_id::eq18, "EQ18", "(1-lambda)/(e^t-lambda) maps the Daehee polynomials onto the Mittag-Leffler sequence", 0, {}, {}, build_eq18},
        {identity_id::eq20, "EQ20", "transfer-formula derivation of the associated sequence of (1-lambda)t/(e^t-lambda)", 1, {}, {}, build_eq20},
        {identity_id::eq21_24_chain, "EQ21_24_CHAIN", "step-by-step derivation of M_n from S_n(x|lambda) down to Frobenius-Euler polynomials", 1, {}, {}, build_eq21_24},
        {identity_id::thm2_eq26,
         "THM2_EQ26",
         "Daehee polynomials as a triple sum of Bernoulli numbers and Frobenius-Euler polynomials",
         1,
         {},
         {{"triple-sum", "(n-1)!/(1-lambda)^n sum B_(l-1-m)^(l) {x H_m^(n-1)(x+j|lambda) + H_m^(n)(x+j+1|lambda)/(1-lambda)}"},
          {"triple-sum-extra-x", "the same sum with an additional factor x in front of the braces"}},
         build_thm2},
        {identity_id::eq28, "EQ28", "associated sequence of t/(e^t+1) by the transfer formula", 1, {}, {}, build_eq28},
        {identity_id::eq29, "EQ29", "Mittag-Leffler sequence transferred from the associated sequence of t/(e^t+1)", 1, {}, {}, build_eq29},
        {identity_id::eq30,
         "EQ30",
         "Daehee polynomials as two shifted sums of x B_(n-1)^(n)",
         1,
         {},
         {{"shifted-prefactor", "1/(1-lambda) sum_j C(n,j) (x+1) B_(n-1)^(n)(x+j+1) + lambda/(lambda-1) sum_j C(n,j) x B_(n-1)^(n)(x+j)"},
          {"unshifted-prefactor", "as above with the first sum using x B_(n-1)^(n)(x+j+1), i.e. e^t acting on the Bernoulli factor only"}},
         build_eq30},
        {identity_id::eq31, "EQ31", "falling-factorial expression of the Daehee polynomials", 0, {}, {}, build_eq31},
        {identity_id::thm3_eq36,
         "THM3_EQ36",
         "Changhee polynomials of order a through Bernoulli numbers and Frobenius-Euler polynomials; the operator relating C_n^(a) to x B_(n-1)^(n) is ((e^t-lambda)/(1-lambda))^a",
         1,
         {{"a", 2, range::nonzero}},
         {{"order-a", "sum_l C(n-1,l) B_l^(n) {x H_(n-1-l)^(a)(x|lambda) - a/(1-lambda) H_(n-1-l)^(a+1)(x+1|lambda)}"},
          {"order-minus-a", "the same sum with a replaced by -a throughout"}},
         build_thm3},
        {identity_id::thm4_eq38,
         "THM4_EQ38",
         "x H_(n-1)^(an)(x|lambda) as an associated sequence; two reciprocal candidate delta series",
         1,
         {{"a", 2, range::nonnegative}},
         {{"pair-t((e^t-lambda)/(1-lambda))^a", "associated sequence of t((e^t-lambda)/(1-lambda))^a"},
          {"pair-t((1-lambda)/(e^t-lambda))^a", "associated sequence of t((1-lambda)/(e^t-lambda))^a"}},
         build_thm4},
        {identity_id::eq39, "EQ39", "x B_(n-1)^(bn)(x) is the associated sequence of t((e^t-1)/t)^b", 1, {{"b", 2, range::nonnegative}}, {}, build_eq39},
        {identity_id::eq40_41,
         "EQ40_41",
         "transfer from x B_(n-1)^(bn) to x H_(n-1)^(an) and the operator identity reducing both to x^(n-1)",
         1,
         {{"a", 1, range::nonnegative}, {"b", 2, range::nonnegative}},
         {{"superscript-bn", "x ((1-lambda)/(e^t-lambda))^(an) ((e^t-1)/t)^(bn) B_(n-1)^(bn)(x)"}, {"superscript-an", "the same operator applied to B_(n-1)^(an)(x)"}},
         build_eq40_41},
        {identity_id::thm5,
         "THM5",
         "Frobenius-Euler shift sum against a Stirling-weighted Bernoulli sum; the shift sum is the operator side of the operator identity and the Stirling sum its Bernoulli side",
         1,
         {{"a", 1, range::nonnegative}, {"b", 2, range::nonnegative}},
         {},
         build_thm5},
        {identity_id::remark45,
         "REMARK45",
         "Sheffer sequence of ((1-lambda)/(e^t-lambda), t(1-lambda)/(e^t-lambda)) by shifts of Frobenius-Euler polynomials",
         1,
         {},
         {{"superscript-n", "1/(1-lambda) {(x+1) H_(n-1)^(n)(x+1|lambda) - lambda x H_(n-1)^(n)(x|lambda)}"}, {"superscript-minus-n", "the same with H_(n-1)^(-n)"}},
         build_remark45},
        {identity_id::thm6_eq49, "THM6_EQ49", "associated sequence of (e^t-1)/(e^t-lambda) as shifted Bernoulli polynomials", 1, {}, {}, build_thm6},
        {identity_id::eq50, "EQ50", "associated sequence of (e^t-1)/(e^t-lambda) expanded through Bernoulli numbers", 1, {}, {}, build_eq50},
        {identity_id::eq51,
         "EQ51",
         "Daehee polynomials of the second kind from the lambda Mittag-Leffler sequence",
         1,
         {},
         {{"index-n-j", "1/(1-lambda) sum_j C(n,j) {(x+1) B_(n-j)^(n)(x+1+j) - lambda x B_(n-1)^(n)(x+j)} (-lambda)^(n-j)"},
          {"index-n-1", "the same with B_(n-1)^(n)(x+1+j) in the first term"}},
         build_eq51},
        {identity_id::eq53_tstar, "EQ53_TSTAR", "associated sequence of 2t/(1+t^2): generating function, transfer formula and closed sum", 0, {}, {}, build_eq53},
        {identity_id::eq13_conv, "EQ13_CONV", "binomial convolution s_n(x+y) for the Daehee and Changhee pairs, y in {0, 1, -1, 1/2}", 0, {{"a", 2, range::nonzero}}, {}, build_eq13},
        {identity_id::eq9_multi, "EQ9_MULTI", "pairing of a product of series against x^n as a multinomial sum, m = 1..3", 0, {}, {}, build_eq9},
    };
    return entries;
}

const identity_entry &entry(identity_id id)
{
    for (const auto &e : registry()) {
        if (e.id == id) {
            return e;
        }
    }
    throw domain_error("unknown identity id");
}

std::optional<std::size_t> first_difference(const rp &a, const rp &b)
{
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    for (std::size_t k = 0; k < n; ++k) {
        if (!(a.coeff(k) == b.coeff(k))) {
            return k;
        }
    }
    return std::nullopt;
}

std::optional<mismatch_info> compare(const named_poly &lhs, const named_poly &rhs, const verify_options &options)
{
    const auto k = first_difference(lhs.value, rhs.value);
    if (!k) {
        return std::nullopt;
    }
    mismatch_info info{rhs.name, lhs.name, *k, lhs.value.coeff(*k), rhs.value.coeff(*k), {}};
    for (const auto &v : options.spot_lambdas) {
        try {
            info.spot_checks.emplace_back(v, specialize(lhs.value, v) == specialize(rhs.value, v));
        } catch (const error &) {
            // A pole at this lambda: no information.
        }
    }
    return info;
}

std::string join(const std::vector<std::string> &xs)
{
    std::string out;
    for (const auto &x : xs) {
        out += (out.empty() ? "" : ", ") + x;
    }
    return out;
}

std::optional<std::string> build_variant_note(const identity_entry &e, const identity_report &r)
{
    if (e.variants.empty()) {
        return std::nullopt;
    }
    std::optional<std::vector<std::string>> common;
    bool stable = true;
    std::vector<std::size_t> collapsed;
    for (const auto &d : r.per_degree) {
        if (!d.variants_distinguished) {
            collapsed.push_back(d.n);
            continue;
        }
        if (!common) {
            common = d.matched_variants;
        } else if (*common != d.matched_variants) {
            stable = false;
        }
    }
    std::string tail;
    if (!collapsed.empty()) {
        std::vector<std::string> ns;
        for (auto n : collapsed) {
            ns.push_back(std::to_string(n));
        }
        tail = "; variants coincide at n = " + join(ns);
    }
    if (!common) {
        return "no tested degree separates the variants" + tail;
    }
    if (!stable) {
        std::string out = "matched variants differ across degrees:";
        for (const auto &d : r.per_degree) {
            if (d.variants_distinguished) {
                out += " n=" + std::to_string(d.n) + " {" + join(d.matched_variants) + "}";
            }
        }
        return out + tail;
    }
    std::vector<std::string> others;
    for (const auto &v : e.variants) {
        if (std::find(common->begin(), common->end(), v.name) == common->end()) {
            others.push_back(v.name);
        }
    }
    if (common->empty()) {
        return "no registered variant matches at any separating degree; failing: " + join(others) + tail;
    }
    std::string out = join(*common) + (common->size() == 1 ? " matches" : " match") + " at every separating degree";
    if (!others.empty()) {
        out += "; failing: " + join(others);
    }
    return out + tail;
}

std::map<std::string, long> resolve_params(const identity_entry &e, const std::map<std::string, long> &given)
{
    std::map<std::string, long> out;
    for (const auto &p : e.params) {
        out[p.key] = p.fallback;
    }
    for (const auto &[k, v] : given) {
        const auto it = std::find_if(e.params.begin(), e.params.end(), [&](const param_def &p) { return p.key == k; });
        if (it == e.params.end()) {
            throw domain_error("parameter out of range: " + std::string(e.name) + " takes no parameter '" + k + "'");
        }
        if ((it->allowed == range::nonnegative && v < 0) || (it->allowed == range::nonzero && v == 0)) {
            throw domain_error("parameter out of range: " + k + " = " + std::to_string(v) + " for " + std::string(e.name));
        }
        out[k] = v;
    }
    return out;
}

} // namespace

std::string_view identity_name(identity_id id)
{
    return entry(id).name;
}

std::optional<identity_id> identity_from_name(std::string_view name)
{
    for (const auto &e : registry()) {
        if (e.name == name) {
            return e.id;
        }
    }
    return std::nullopt;
}

const std::vector<identity_id> &all_identities()
{
    static const std::vector<identity_id> ids = [] {
        std::vector<identity_id> out;
        for (const auto &e : registry()) {
            out.push_back(e.id);
        }
        return out;
    }();
    return ids;
}

std::string_view identity_summary(identity_id id)
{
    return entry(id).summary;
}

std::size_t identity_min_degree(identity_id id)
{
    return entry(id).min_degree;
}

std::map<std::string, long> identity_default_params(identity_id id)
{
    return resolve_params(entry(id), {});
}

bool identity_report::all_pass() const
{
    return std::all_of(per_degree.begin(), per_degree.end(), [](const degree_verdict &d) { return d.pass; });
}

identity_report verify(identity_id id, std::size_t n_max, const std::map<std::string, long> &params, const verify_options &options)
{
    const identity_entry &e = entry(id);
    if (n_max < e.min_degree) {
        throw domain_error("parameter out of range: " + std::string(e.name) + " starts at n = " + std::to_string(e.min_degree));
    }
    identity_report report;
    report.id = id;
    report.params = resolve_params(e, params);
    for (const auto &v : e.variants) {
        report.variants.push_back({v.name, v.description, {}});
    }

    context ctx(n_max, report.params);
    for (std::size_t n = e.min_degree; n <= n_max; ++n) {
        degree_case dc = e.build(ctx, n);
        if (options.perturb && options.perturb->n == n) {
            const auto &p = *options.perturb;
            if (p.chain >= dc.chains.size() || p.route >= dc.chains[p.chain].routes.size()) {
                throw domain_error("perturbation targets a route that does not exist");
            }
            dc.chains[p.chain].routes[p.route].value += rp::monomial(p.delta, p.x_power);
        }

        degree_verdict verdict;
        verdict.n = n;
        for (const auto &ch : dc.chains) {
            for (std::size_t i = 1; i < ch.routes.size() && verdict.pass; ++i) {
                if (auto mm = compare(ch.routes[i - 1], ch.routes[i], options)) {
                    verdict.pass = false;
                    verdict.first_mismatch = std::move(mm);
                }
            }
            if (!verdict.pass) {
                break;
            }
        }

        const named_poly &reference = dc.chains.front().routes.front();
        std::optional<mismatch_info> first_variant_miss;
        for (std::size_t i = 0; i < dc.variants.size(); ++i) {
            degree_verdict vv;
            vv.n = n;
            dc.variants[i].name = e.variants[i].name;
            if (auto mm = compare(reference, dc.variants[i], options)) {
                vv.pass = false;
                vv.first_mismatch = mm;
                if (!first_variant_miss) {
                    first_variant_miss = std::move(mm);
                }
            } else {
                verdict.matched_variants.push_back(e.variants[i].name);
            }
            report.variants[i].per_degree.push_back(std::move(vv));
        }
        for (std::size_t i = 1; i < dc.variants.size(); ++i) {
            if (!(dc.variants[i].value == dc.variants[0].value)) {
                break;
            }
            if (i + 1 == dc.variants.size()) {
                verdict.variants_distinguished = false;
            }
        }
        if (verdict.pass && !dc.variants.empty() && verdict.matched_variants.empty()) {
            verdict.pass = false;
            verdict.first_mismatch = std::move(first_variant_miss);
        }
        report.per_degree.push_back(std::move(verdict));
    }
    report.variant_note = build_variant_note(e, report);
    return report;
}

std::vector<identity_report> verify_all(std::size_t n_max, const verify_options &options)
{
    std::vector<identity_report> out;
    for (const auto &e : registry()) {
        if (n_max < e.min_degree) {
            // Nothing to check yet; an empty report keeps the list aligned with the registry.
            out.push_back({e.id, resolve_params(e, {}), {}, {}, std::nullopt});
            for (const auto &v : e.variants) {
                out.back().variants.push_back({v.name, v.description, {}});
            }
            continue;
        }
        out.push_back(verify(e.id, n_max, {}, options));
    }
    return out;
}

} // namespace umbra
