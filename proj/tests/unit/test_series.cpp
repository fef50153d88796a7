#include <gtest/gtest.h>

#include <random>

#include <umbra/families.hpp>
#include <umbra/series.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace umbra;
using testing_support::lam;
using qs = series<rational>;

namespace
{

qs from_oracle(const oracle::ps &p)
{
    std::vector<rational> c;
    for (const auto &v : p.c) {
        c.emplace_back(v);
    }
    return qs::from_ordinary(c);
}

oracle::ps to_oracle(const qs &s)
{
    oracle::ps p(s.precision());
    const auto c = s.ordinary_coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        p.c[k] = c[k].get();
    }
    return p;
}

qs exp_minus_one(std::size_t n)
{
    return qs::exponential(1, n) - qs::one(n);
}

qs random_delta(std::mt19937 &rng, std::size_t n)
{
    std::uniform_int_distribution<long> coef(-3, 3);
    std::vector<rational> c(n);
    for (std::size_t k = 1; k < n; ++k) {
        c[k] = coef(rng);
    }
    if (c[1].is_zero()) {
        c[1] = 1;
    }
    return qs::from_ordinary(c);
}

} // namespace

TEST(Series, ConventionIsExponential)
{
    const qs e = qs::exponential(1, 6);
    for (std::size_t k = 0; k < 6; ++k) {
        EXPECT_EQ(e[k], rational(1));
        EXPECT_EQ(e.ordinary(k), rational::factorial(k).inverse());
    }
    EXPECT_EQ(qs::monomial(3, 5)[3], rational(6));
    EXPECT_THROW(e[6], precision_error);
    EXPECT_THROW(qs::zero(0), precision_error);
}

TEST(Series, ProductMatchesOracle)
{
    // (e^t - 1)(e^t + 1) = e^{2t} - 1: a_k = 2^k for k >= 1.
    const std::size_t n = 10;
    const qs p = exp_minus_one(n) * (qs::exponential(1, n) + qs::one(n));
    EXPECT_EQ(p[0], rational(0));
    for (std::size_t k = 1; k < n; ++k) {
        EXPECT_EQ(p[k], rational(2).pow(static_cast<long>(k)));
    }
    std::mt19937 rng(3);
    const qs a = random_delta(rng, n) + qs::one(n), b = random_delta(rng, n);
    EXPECT_EQ(a * b, from_oracle(to_oracle(a) * to_oracle(b)));
}

TEST(Series, Inverse)
{
    const std::size_t n = 9;
    const qs inv = inverse(qs::one(n) - qs::monomial(1, n));
    for (std::size_t k = 0; k < n; ++k) {
        EXPECT_EQ(inv[k], rational::factorial(k));
    }
    const qs einv = inverse(qs::exponential(1, n));
    for (std::size_t k = 0; k < n; ++k) {
        EXPECT_EQ(einv[k], rational(k % 2 == 0 ? 1 : -1));
    }
    EXPECT_THROW(inverse(qs::monomial(1, n)), domain_error);
}

TEST(Series, BernoulliKernelAgainstRecurrence)
{
    const std::size_t n = 14;
    const qs bk = qs::monomial(1, n + 1) / exp_minus_one(n + 1);
    EXPECT_EQ(bk.precision(), n);
    const auto b = oracle::bernoulli_numbers(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        EXPECT_EQ(bk[k].get(), b[k]) << "k = " << k;
    }
}

TEST(Series, Quotient)
{
    const std::size_t n = 8;
    const qs tanh_half = exp_minus_one(n) / (qs::exponential(1, n) + qs::one(n));
    EXPECT_EQ(tanh_half[1], rational(1, 2));
    EXPECT_EQ(tanh_half[2], rational(0));
    EXPECT_EQ(tanh_half[3], rational(-1, 4));
    try {
        (void)(qs::monomial(1, n) / qs::monomial(2, n));
        FAIL() << "expected domain_error";
    } catch (const domain_error &e) {
        EXPECT_NE(std::string(e.what()).find("quotient not a power series"), std::string::npos);
    }
    EXPECT_THROW((void)(qs::one(n) / qs::zero(n)), precision_error);
}

TEST(Series, ComposeMatchesOracle)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 9;
        const qs outer = random_delta(rng, n) + qs::constant(2, n);
        const qs inner = random_delta(rng, n);
        EXPECT_EQ(compose(outer, inner), from_oracle(oracle::compose(to_oracle(outer), to_oracle(inner))));
    }
    try {
        compose(qs::exponential(1, 4), qs::one(4));
        FAIL() << "expected domain_error";
    } catch (const domain_error &e) {
        EXPECT_NE(std::string(e.what()).find("composition requires delta inner series"), std::string::npos);
    }
}

TEST(Series, ExpLogSqrt)
{
    const std::size_t n = 10;
    const qs log1p = log(qs::one(n) + qs::monomial(1, n));
    EXPECT_EQ(exp(log1p), qs::one(n) + qs::monomial(1, n));
    EXPECT_EQ(exp(qs::monomial(1, n)), qs::exponential(1, n));
    EXPECT_EQ(exp(qs::monomial(1, n)), from_oracle(oracle::exp(oracle::ps::t(n))));
    // sqrt(1 - t^2) = 1 - t^2/2 - t^4/8 - t^6/16 - ...
    const qs root = sqrt(qs::one(n) - qs::monomial(2, n));
    EXPECT_EQ(root.ordinary(2), rational(-1, 2));
    EXPECT_EQ(root.ordinary(4), rational(-1, 8));
    EXPECT_EQ(root.ordinary(6), rational(-1, 16));
    EXPECT_EQ(root * root, qs::one(n) - qs::monomial(2, n));
    EXPECT_THROW(log(qs::exponential(2, n) * qs::constant(2, n)), domain_error);
    EXPECT_THROW(exp(qs::one(n)), domain_error);
}

TEST(Series, CompInverse)
{
    const std::size_t n = 10;
    const qs lbar = comp_inverse(exp_minus_one(n));
    for (std::size_t k = 1; k < n; ++k) {
        const rational sign = (k % 2 == 1) ? rational(1) : rational(-1);
        EXPECT_EQ(lbar[k], sign * rational::factorial(k - 1));
    }
    // Inverse of (e^t - 1)/(e^t + 1) is log((1+t)/(1-t)) = 2(t + t^3/3 + ...).
    const qs ml = exp_minus_one(n) / (qs::exponential(1, n) + qs::one(n));
    const qs mlbar = comp_inverse(ml);
    for (std::size_t k = 1; k < mlbar.precision(); ++k) {
        EXPECT_EQ(mlbar.ordinary(k), k % 2 == 1 ? rational(2, static_cast<long>(k)) : rational(0));
    }
    EXPECT_THROW(comp_inverse(qs::exponential(1, n)), domain_error);
    EXPECT_THROW(comp_inverse(qs::monomial(2, n)), domain_error);
}

TEST(Series, CompInverseAgainstFixedPointOracle)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const qs f = random_delta(rng, 9);
        EXPECT_EQ(comp_inverse(f), from_oracle(oracle::reversion(to_oracle(f))));
    }
}

TEST(Series, Powers)
{
    const std::size_t n = 8;
    const qs base = qs::exponential(1, n) + qs::one(n);
    EXPECT_EQ(pow(base, 3), base * base * base);
    EXPECT_EQ(pow(base, -2) * pow(base, 2), qs::one(n));
    EXPECT_EQ(pow(base, 0), qs::one(n));
    EXPECT_THROW(pow(qs::monomial(1, n), -1), domain_error);
}

TEST(Series, LambdaSquare)
{
    // (e^t - lambda)^2: a_0 = (1 - lambda)^2, a_n = 2^n - 2 lambda.
    using ls = series<ratfunc>;
    const std::size_t n = 7;
    const ls base = ls::exponential(1, n) - ls::constant(lam(), n);
    const ls sq = base * base;
    EXPECT_EQ(sq[0], testing_support::one_minus_lambda() * testing_support::one_minus_lambda());
    for (std::size_t k = 1; k < n; ++k) {
        EXPECT_EQ(sq[k], ratfunc(rational(2).pow(static_cast<long>(k))) - ratfunc(2) * lam());
    }
}

TEST(Series, OrderAndClassify)
{
    EXPECT_EQ(order(qs::monomial(3, 6)), 3u);
    EXPECT_EQ(classify(qs::exponential(1, 4)), series_class::invertible);
    EXPECT_EQ(classify(exp_minus_one(4)), series_class::delta);
    EXPECT_EQ(classify(qs::monomial(2, 4)), series_class::other);
    try {
        order(qs::zero(5));
        FAIL() << "expected precision_error";
    } catch (const precision_error &e) {
        EXPECT_STREQ(e.what(), "order undefined at this precision");
    }
}

TEST(Series, DerivativeAndTruncation)
{
    const qs s = qs::from_ordinary({1, 2, 3, 4});
    const qs d = derivative(s);
    EXPECT_EQ(d.precision(), 3u);
    EXPECT_EQ(d, qs::from_ordinary({2, 6, 12}));
    EXPECT_EQ(s.truncated(2), qs::from_ordinary({1, 2}));
    EXPECT_THROW(s.truncated(5), precision_error);
    EXPECT_THROW(derivative(qs::one(1)), precision_error);
}

TEST(Series, Specialize)
{
    const auto fk = gf::frobenius_kernel(6);
    const qs at_minus_one = specialize(fk, -1);
    // lambda = -1: 2/(e^t + 1).
    EXPECT_EQ(at_minus_one, qs::constant(2, 6) / (qs::exponential(1, 6) + qs::one(6)));
}

TEST(Series, WorkingPrecision)
{
    EXPECT_EQ(working_precision(6), 16u);
    set_precision_override(30);
    EXPECT_EQ(working_precision(6), 30u);
    set_precision_override(std::nullopt);
    EXPECT_EQ(working_precision(0), 4u);
}
