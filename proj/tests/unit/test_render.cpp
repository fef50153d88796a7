#include <gtest/gtest.h>

#include <random>

#include <umbra/error.hpp>
#include <umbra/families.hpp>
#include <umbra/json.hpp>
#include <umbra/render.hpp>

#include "support.hpp"

using namespace umbra;
using testing_support::lam;
using testing_support::one_minus_lambda;

TEST(Render, PlainRationalsAndLambda)
{
    EXPECT_EQ(to_plain(rational(-3, 4)), "-3/4");
    EXPECT_EQ(to_plain(ratfunc(2) / one_minus_lambda()), "2/(1-lambda)");
    EXPECT_EQ(to_plain(lam() * lam() - ratfunc(1)), "lambda^2 - 1");
    EXPECT_EQ(to_plain(ratfunc()), "0");
}

TEST(Render, PlainFamilies)
{
    EXPECT_EQ(to_plain(family_sequence({family_kind::daehee}, 1)[1]), "2*x + 2/(1-lambda)");
    EXPECT_EQ(to_plain(closed_form({family_kind::assoc_s}, 2)), "x^2 + (2/(1-lambda))*x");
    EXPECT_EQ(to_plain(family_sequence({family_kind::frobenius_euler, 1}, 2)[2]), "x^2 - (2/(1-lambda))*x + (lambda + 1)/(1-lambda)^2");
    EXPECT_EQ(to_plain(family_sequence({family_kind::bernoulli, 1}, 2)[2]), "x^2 - x + 1/6");
    EXPECT_EQ(to_plain(poly<rational>()), "0");
    EXPECT_EQ(to_plain(poly<rational>::constant(1)), "1");
}

TEST(Render, Latex)
{
    EXPECT_EQ(to_latex(rational(-3, 4)), "-\\frac{3}{4}");
    const auto s2 = family_sequence({family_kind::assoc_s}, 3);
    EXPECT_EQ(to_latex(family_sequence({family_kind::daehee}, 2)[2]), "4 x^{2} + \\left(\\frac{8}{1-\\lambda}\\right) x + \\frac{4}{1-\\lambda}");
    EXPECT_NE(to_latex(s2[3]).find("(1-\\lambda)^{2}"), std::string::npos);
}

TEST(Render, Series)
{
    EXPECT_EQ(to_plain(gf::exp(1, 3)), "1 + t + t^2/2! + O(t^3)");
    EXPECT_EQ(to_plain(gf::mittag_leffler_delta(4)), "1/2*t - 1/4*t^3/3! + O(t^4)");
}

TEST(Parse, Examples)
{
    EXPECT_EQ(parse_poly("x^2 + 2*x/(1-lambda)"), closed_form({family_kind::assoc_s}, 2));
    EXPECT_EQ(parse_poly("(x+1)^2"), parse_poly("x^2 + 2*x + 1"));
    EXPECT_EQ(parse_poly("-x"), poly<ratfunc>::monomial(-1, 1));
    EXPECT_EQ(parse_ratfunc("(lambda^2-1)/(lambda-1)"), lam() + ratfunc(1));
    EXPECT_EQ(parse_ratfunc(" 3 / 6 "), ratfunc(rational(1, 2)));
}

TEST(Parse, Errors)
{
    for (const char *bad : {"", "x +", "1/x", "(x", "y", "x^", "2**x", "x^-1", "1/0", "x)"}) {
        EXPECT_THROW(parse_poly(bad), error) << "'" << bad << "'";
    }
    EXPECT_THROW(parse_ratfunc("x + 1"), domain_error);
}

TEST(Parse, RoundTripsEveryFamily)
{
    for (family_kind k : {family_kind::bernoulli, family_kind::frobenius_euler, family_kind::daehee, family_kind::changhee, family_kind::mittag_leffler,
                          family_kind::mittag_leffler_lambda, family_kind::daehee_second_kind, family_kind::assoc_s, family_kind::assoc_t,
                          family_kind::remark_s44}) {
        const auto seq = family_sequence({k, 2}, 7);
        for (std::size_t n = 0; n <= 7; ++n) {
            EXPECT_EQ(parse_poly(to_plain(seq[n])), seq[n]) << family_name(k) << " n=" << n << ": " << to_plain(seq[n]);
        }
    }
}

TEST(Parse, RoundTripsRandomRatfuncs)
{
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<rational> num(3), den(3);
        for (auto &c : num) {
            c = rational(coef(rng), 1 + (coef(rng) + 4) % 3);
        }
        for (auto &c : den) {
            c = coef(rng);
        }
        if (lambda_poly(den).is_zero()) {
            den[0] = 1;
        }
        const ratfunc r = ratfunc::normalize(lambda_poly(num), lambda_poly(den));
        EXPECT_EQ(parse_ratfunc(to_plain(r)), r) << to_plain(r);
        const poly<ratfunc> p({r, -r, ratfunc(3), r * lam()});
        EXPECT_EQ(parse_poly(to_plain(p)), p) << to_plain(p);
    }
}

TEST(Json, ScalarAndPolyRoundTrip)
{
    const ratfunc r = (lam() + ratfunc(rational(1, 3))) / (one_minus_lambda() * one_minus_lambda());
    const nlohmann::json jr = r;
    EXPECT_EQ(jr.get<ratfunc>(), r);
    EXPECT_EQ(nlohmann::json(rational(-7, 3)).dump(), R"({"den":"3","num":"-7"})");
    const auto p = family_sequence({family_kind::daehee}, 4)[4];
    EXPECT_EQ(nlohmann::json(p).get<poly<ratfunc>>(), p);
    EXPECT_EQ(nlohmann::json(p).at("var"), "x");
    const rational huge = rational::factorial(40);
    EXPECT_EQ(nlohmann::json(huge).get<rational>(), huge);
}

TEST(Json, SeriesRoundTrip)
{
    const auto s = gf::frobenius_kernel(6);
    const nlohmann::json j = s;
    EXPECT_EQ(j.at("convention"), "exponential");
    EXPECT_EQ(j.at("precision"), 6);
    EXPECT_EQ(j.get<series<ratfunc>>(), s);
    nlohmann::json bad = j;
    bad["precision"] = 5;
    EXPECT_THROW(bad.get<series<ratfunc>>(), nlohmann::json::exception);
    bad = j;
    bad["convention"] = "ordinary";
    EXPECT_THROW(bad.get<series<ratfunc>>(), nlohmann::json::exception);
}

TEST(Json, RejectsMalformedValues)
{
    EXPECT_THROW(nlohmann::json::parse(R"({"num":"1","den":"0"})").get<rational>(), division_by_zero);
    EXPECT_THROW(nlohmann::json::parse(R"({"num":"a","den":"1"})").get<rational>(), domain_error);
    EXPECT_THROW(nlohmann::json::parse(R"({"var":"y","coeffs":[]})").get<poly<rational>>(), nlohmann::json::exception);
}
