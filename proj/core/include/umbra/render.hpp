#pragma once

#include <string>
#include <string_view>

#include <umbra/lambda_poly.hpp>
#include <umbra/poly.hpp>
#include <umbra/ratfunc.hpp>
#include <umbra/rational.hpp>
#include <umbra/series.hpp>

namespace umbra
{

// Plain syntax: descending powers, explicit '*', "lambda", rationals as p/q.
// Denominators that are powers of (lambda - 1) print as (1-lambda)^k.
std::string to_plain(const rational &r);
std::string to_plain(const lambda_poly &p);
std::string to_plain(const ratfunc &r);
std::string to_plain(const poly<rational> &p);
std::string to_plain(const poly<ratfunc> &p);
/// a_0 + a_1*t + a_2*t^2/2! + ... + O(t^N).
std::string to_plain(const series<ratfunc> &s);

std::string to_latex(const rational &r);
std::string to_latex(const lambda_poly &p);
std::string to_latex(const ratfunc &r);
std::string to_latex(const poly<rational> &p);
std::string to_latex(const poly<ratfunc> &p);
std::string to_latex(const series<ratfunc> &s);

/// Reads the plain syntax back (any expression in x and lambda built from
/// integers, + - * / ^ and parentheses, dividing only by x-free terms).
/// Throws domain_error on malformed input.
poly<ratfunc> parse_poly(std::string_view text);
ratfunc parse_ratfunc(std::string_view text);

} // namespace umbra
