#pragma once

#include <gmpxx.h>

#include <umbra/poly.hpp>
#include <umbra/ratfunc.hpp>
#include <umbra/rational.hpp>
#include <umbra/render.hpp>

namespace testing_support
{

inline umbra::ratfunc lam()
{
    return umbra::ratfunc::lambda();
}

inline umbra::ratfunc one_minus_lambda()
{
    return umbra::ratfunc(1) - lam();
}

// Shorthand for writing expected polynomials in the plain syntax.
inline umbra::poly<umbra::ratfunc> P(const char *text)
{
    return umbra::parse_poly(text);
}

inline umbra::ratfunc R(const char *text)
{
    return umbra::parse_ratfunc(text);
}

// p(x) at lambda = v, as a plain GMP rational.
inline mpq_class value_at(const umbra::poly<umbra::ratfunc> &p, const mpq_class &v, const mpq_class &x)
{
    const auto s = umbra::specialize(p, umbra::rational(v));
    return s.eval(umbra::rational(x)).get();
}

} // namespace testing_support
