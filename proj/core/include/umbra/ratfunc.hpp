#pragma once

#include <optional>
#include <ostream>

#include <umbra/lambda_poly.hpp>
#include <umbra/rational.hpp>

namespace umbra
{

/// Element of the field Q(lambda) in canonical form.
///
/// The numerator and denominator are coprime and the denominator is monic,
/// so two equal field elements always compare structurally equal. Zero is 0/1.
class ratfunc
{
public:
    ratfunc() : m_den(rational(1)) {}
    ratfunc(long c) : ratfunc(rational(c)) {}
    ratfunc(const rational &c) : m_num(c), m_den(rational(1)) {}
    ratfunc(lambda_poly p) : m_num(std::move(p)), m_den(rational(1)) {}

    /// Reduces num/den to canonical form; throws division_by_zero for den = 0.
    static ratfunc normalize(const lambda_poly &num, const lambda_poly &den);
    static ratfunc lambda() { return ratfunc(lambda_poly::lambda()); }

    const lambda_poly &num() const { return m_num; }
    const lambda_poly &den() const { return m_den; }

    bool is_zero() const { return m_num.is_zero(); }
    bool is_one() const { return m_num.is_one() && m_den.is_one(); }
    bool is_polynomial() const { return m_den.is_one(); }
    /// The value as a rational, if it does not depend on lambda.
    std::optional<rational> as_rational() const;

    ratfunc inverse() const;

    ratfunc operator-() const { return ratfunc(-m_num, m_den, canonical_tag{}); }
    ratfunc &operator+=(const ratfunc &o);
    ratfunc &operator-=(const ratfunc &o) { return *this += -o; }
    ratfunc &operator*=(const ratfunc &o);
    ratfunc &operator*=(const rational &c);
    ratfunc &operator/=(const ratfunc &o) { return *this *= o.inverse(); }

    friend ratfunc operator+(ratfunc a, const ratfunc &b) { return a += b; }
    friend ratfunc operator-(ratfunc a, const ratfunc &b) { return a -= b; }
    friend ratfunc operator*(ratfunc a, const ratfunc &b) { return a *= b; }
    friend ratfunc operator*(ratfunc a, const rational &c) { return a *= c; }
    friend ratfunc operator*(const rational &c, ratfunc a) { return a *= c; }
    friend ratfunc operator/(ratfunc a, const ratfunc &b) { return a /= b; }

    friend bool operator==(const ratfunc &, const ratfunc &) = default;

private:
    struct canonical_tag {
    };
    ratfunc(lambda_poly num, lambda_poly den, canonical_tag) : m_num(std::move(num)), m_den(std::move(den)) {}

    lambda_poly m_num;
    lambda_poly m_den;
};

/// Substitutes lambda = v. Throws domain_error for v = 1 and division_by_zero at a pole.
rational eval_at_lambda(const ratfunc &a, const rational &v);

} // namespace umbra
