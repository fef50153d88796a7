#include <gtest/gtest.h>

#include <random>

#include <umbra/error.hpp>
#include <umbra/lambda_poly.hpp>
#include <umbra/ratfunc.hpp>
#include <umbra/rational.hpp>
#include <umbra/scalar.hpp>

#include "support.hpp"

using namespace umbra;
using testing_support::lam;
using testing_support::one_minus_lambda;

TEST(Rational, LowestTermsAndSign)
{
    EXPECT_EQ(rational(6, -4), rational(-3, 2));
    EXPECT_EQ(rational(6, -4).num_str(), "-3");
    EXPECT_EQ(rational(6, -4).den_str(), "2");
    EXPECT_EQ(rational(0, 5).den_str(), "1");
    EXPECT_THROW(rational(1, 0), division_by_zero);
}

TEST(Rational, Parse)
{
    EXPECT_EQ(rational::parse("-3/4"), rational(-3, 4));
    EXPECT_EQ(rational::parse("+7"), rational(7));
    EXPECT_EQ(rational::parse("10/4"), rational(5, 2));
    EXPECT_THROW(rational::parse("3/"), domain_error);
    EXPECT_THROW(rational::parse("x"), domain_error);
    EXPECT_THROW(rational::parse("1/0"), division_by_zero);
}

TEST(Rational, Combinatorics)
{
    EXPECT_EQ(rational::factorial(0), rational(1));
    EXPECT_EQ(rational::factorial(20).to_string(), "2432902008176640000");
    EXPECT_EQ(rational::binomial(10, 3), rational(120));
    EXPECT_EQ(rational::binomial(3, 5), rational(0));
    EXPECT_EQ(rational::falling(5, 2), rational(20));
    EXPECT_EQ(rational::falling(-1, 3), rational(-6));
    EXPECT_EQ(rational::falling(4, 0), rational(1));
}

TEST(Rational, Arithmetic)
{
    EXPECT_EQ(rational(1, 2) + rational(1, 3), rational(5, 6));
    EXPECT_EQ(rational(2, 3).pow(-2), rational(9, 4));
    EXPECT_THROW(rational(0).inverse(), division_by_zero);
    EXPECT_THROW(rational(1) / rational(0), division_by_zero);
    EXPECT_LT(rational(-1, 2), rational(1, 3));
}

TEST(Rational, BeyondMachineWords)
{
    const rational big = rational::factorial(30) / rational::factorial(28);
    EXPECT_EQ(big, rational(870));
    EXPECT_EQ((rational::factorial(25) + rational(1)) - rational::factorial(25), rational(1));
}

TEST(LambdaPoly, TrimAndDegree)
{
    const lambda_poly p(std::vector<rational>{1, 2, 0, 0});
    EXPECT_EQ(p.degree(), 1);
    EXPECT_TRUE(lambda_poly().is_zero());
    EXPECT_EQ(lambda_poly().degree(), -1);
}

TEST(LambdaPoly, DivmodReconstructs)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<rational> a(6), b(3);
        for (auto &c : a) {
            c = coef(rng);
        }
        for (auto &c : b) {
            c = coef(rng);
        }
        b[2] = coef(rng) == 0 ? 1 : 3;
        const lambda_poly pa(a), pb(b);
        const auto [quot, rem] = divmod(pa, pb);
        EXPECT_EQ(quot * pb + rem, pa);
        EXPECT_LT(rem.degree(), pb.degree());
    }
    EXPECT_THROW(divmod(lambda_poly(1), lambda_poly()), division_by_zero);
}

TEST(LambdaPoly, Gcd)
{
    const lambda_poly l = lambda_poly::lambda();
    const lambda_poly a = (l - lambda_poly(1)) * (l + lambda_poly(2));
    const lambda_poly b = (l - lambda_poly(1)) * (l - lambda_poly(3)) * rational(4);
    EXPECT_EQ(gcd(a, b), l - lambda_poly(1));
    EXPECT_EQ(gcd(lambda_poly(), lambda_poly()), lambda_poly());
    EXPECT_EQ(gcd(a, lambda_poly()), a.monic());
    EXPECT_THROW(exact_div(a, l), consistency_error);
}

TEST(LambdaPoly, LinearPowers)
{
    const lambda_poly p = lambda_poly::linear_power(1, 3) * rational(-2);
    EXPECT_EQ(p.root_multiplicity(1), 3u);
    const auto lp = p.as_linear_power();
    ASSERT_TRUE(lp.has_value());
    EXPECT_EQ(lp->first, rational(1));
    EXPECT_EQ(lp->second, 3u);
    EXPECT_EQ(p.divide_linear_power(1, 2), lambda_poly::linear_power(1, 1) * rational(-2));
    EXPECT_FALSE((lambda_poly::lambda() * lambda_poly::lambda() + lambda_poly(1)).as_linear_power());
}

TEST(Ratfunc, NormalizeExamples)
{
    const lambda_poly l = lambda_poly::lambda();
    // (lambda^2 - 1)/(lambda - 1) = lambda + 1
    EXPECT_EQ(ratfunc::normalize(l * l - lambda_poly(1), l - lambda_poly(1)), ratfunc(l + lambda_poly(1)));
    const ratfunc z = ratfunc::normalize(lambda_poly(), l + lambda_poly(2));
    EXPECT_TRUE(z.is_zero());
    EXPECT_TRUE(z.den().is_one());
    const ratfunc half = ratfunc::normalize(l * rational(2), lambda_poly(4));
    EXPECT_EQ(half, ratfunc(l * rational(1, 2)));
    try {
        ratfunc::normalize(l, lambda_poly());
        FAIL() << "expected division_by_zero";
    } catch (const division_by_zero &e) {
        EXPECT_STREQ(e.what(), "division by zero polynomial");
    }
}

TEST(Ratfunc, CanonicalDenominatorIsMonic)
{
    const ratfunc r = ratfunc(2) / one_minus_lambda();
    EXPECT_EQ(r.den(), lambda_poly::lambda() - lambda_poly(1));
    EXPECT_EQ(r.num(), lambda_poly(-2));
}

TEST(Ratfunc, FieldIdentities)
{
    EXPECT_TRUE((one_minus_lambda().inverse() * one_minus_lambda()).is_one());
    const ratfunc lm1 = lam() - ratfunc(1);
    EXPECT_EQ(lam() / lm1 - ratfunc(1) / lm1, ratfunc(1));
    EXPECT_THROW(ratfunc().inverse(), division_by_zero);
    EXPECT_EQ((ratfunc(1) / lam()).as_rational(), std::nullopt);
    EXPECT_EQ((lam() / lam()).as_rational(), std::optional<rational>(1));
}

TEST(Ratfunc, RandomFieldAxioms)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-3, 3);
    auto random_poly = [&](std::size_t deg) {
        std::vector<rational> c(deg + 1);
        for (auto &v : c) {
            v = coef(rng);
        }
        return lambda_poly(c);
    };
    auto random_rf = [&] {
        lambda_poly d = random_poly(2);
        if (d.is_zero()) {
            d = lambda_poly(1);
        }
        return ratfunc::normalize(random_poly(2), d);
    };
    for (int trial = 0; trial < 30; ++trial) {
        const ratfunc a = random_rf(), b = random_rf(), c = random_rf();
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
        // Canonical form: a structurally equal to a rebuilt copy.
        EXPECT_EQ(ratfunc::normalize(a.num() * rational(3), a.den() * rational(3)), a);
    }
}

TEST(Ratfunc, EvalAtLambda)
{
    EXPECT_EQ(eval_at_lambda(ratfunc(2) / one_minus_lambda(), -1), rational(1));
    EXPECT_EQ(eval_at_lambda(lam(), rational(3, 2)), rational(3, 2));
    EXPECT_THROW(eval_at_lambda(lam(), 1), domain_error);
    EXPECT_THROW(eval_at_lambda(ratfunc(1) / (lam() + ratfunc(2)), -2), division_by_zero);
}

TEST(Scalar, SameVariantArithmetic)
{
    const scalar a = rational(1, 2), b = rational(1, 3);
    EXPECT_EQ(std::get<rational>(scalar_arith(a, b, arith_op::add)), rational(5, 6));
    EXPECT_EQ(std::get<rational>(scalar_arith(a, b, arith_op::div)), rational(3, 2));
    const scalar r = one_minus_lambda().inverse();
    EXPECT_EQ(std::get<ratfunc>(scalar_arith(r, scalar(one_minus_lambda()), arith_op::mul)), ratfunc(1));
}

TEST(Scalar, Errors)
{
    EXPECT_THROW(scalar_arith(scalar(rational(1)), scalar(ratfunc(1)), arith_op::add), variant_mismatch);
    EXPECT_THROW(scalar_arith(scalar(rational(1)), scalar(rational(0)), arith_op::div), division_by_zero);
    EXPECT_THROW(scalar_arith(scalar(lam()), scalar(ratfunc()), arith_op::div), division_by_zero);
}
