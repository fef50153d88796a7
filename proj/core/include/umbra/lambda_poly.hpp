#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <umbra/rational.hpp>

namespace umbra
{

/// Dense univariate polynomial in the formal parameter lambda over Q.
///
/// coeffs()[k] is the coefficient of lambda^k; there are no trailing zeros,
/// so the zero polynomial has an empty coefficient list.
class lambda_poly
{
public:
    lambda_poly() = default;
    explicit lambda_poly(std::vector<rational> coeffs);
    lambda_poly(const rational &c);
    lambda_poly(long c) : lambda_poly(rational(c)) {}

    static lambda_poly lambda();
    static lambda_poly monomial(const rational &c, std::size_t k);
    /// (lambda - r)^k.
    static lambda_poly linear_power(const rational &r, std::size_t k);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(m_coeffs.size()) - 1; }
    bool is_zero() const { return m_coeffs.empty(); }
    bool is_constant() const { return m_coeffs.size() <= 1; }
    bool is_one() const { return m_coeffs.size() == 1 && m_coeffs[0].is_one(); }
    const std::vector<rational> &coeffs() const { return m_coeffs; }
    rational coeff(std::size_t k) const { return k < m_coeffs.size() ? m_coeffs[k] : rational(); }
    const rational &leading() const { return m_coeffs.back(); }

    rational eval(const rational &v) const;
    lambda_poly monic() const;

    lambda_poly operator-() const;
    lambda_poly &operator+=(const lambda_poly &o);
    lambda_poly &operator-=(const lambda_poly &o);
    lambda_poly &operator*=(const rational &c);

    friend lambda_poly operator+(lambda_poly a, const lambda_poly &b) { return a += b; }
    friend lambda_poly operator-(lambda_poly a, const lambda_poly &b) { return a -= b; }
    friend lambda_poly operator*(const lambda_poly &a, const lambda_poly &b);
    friend lambda_poly operator*(lambda_poly a, const rational &c) { return a *= c; }

    friend bool operator==(const lambda_poly &, const lambda_poly &) = default;

    /// Multiplicity of r as a root; 0 for the zero polynomial is not meaningful and returns 0.
    std::size_t root_multiplicity(const rational &r) const;
    /// Exact quotient by (lambda - r)^k; the caller guarantees divisibility.
    lambda_poly divide_linear_power(const rational &r, std::size_t k) const;
    /// If this polynomial equals c * (lambda - r)^k with k >= 1, returns {r, k}.
    std::optional<std::pair<rational, std::size_t>> as_linear_power() const;

private:
    void trim();

    std::vector<rational> m_coeffs;
};

/// Quotient and remainder; throws division_by_zero for a zero divisor.
std::pair<lambda_poly, lambda_poly> divmod(const lambda_poly &a, const lambda_poly &b);
/// Exact quotient a / b; throws consistency_error if the remainder is nonzero.
lambda_poly exact_div(const lambda_poly &a, const lambda_poly &b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
lambda_poly gcd(const lambda_poly &a, const lambda_poly &b);

} // namespace umbra
