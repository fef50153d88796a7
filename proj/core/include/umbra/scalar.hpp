#pragma once

#include <concepts>
#include <variant>

#include <umbra/rational.hpp>
#include <umbra/ratfunc.hpp>

namespace umbra
{

// Coefficient field selector. Series and polynomials are templates over the
// field type, so mixing variants inside one object is impossible by
// construction; the runtime scalar below is used where the field is only
// known at run time (serialization, the command line).
template <class K>
concept coefficient_field = std::same_as<K, rational> || std::same_as<K, ratfunc>;

using scalar = std::variant<rational, ratfunc>;

enum class arith_op { add, sub, mul, div };

/// Exact field arithmetic on runtime scalars of the same variant.
///
/// Throws variant_mismatch when the operands live in different fields and
/// division_by_zero for a zero divisor.
scalar scalar_arith(const scalar &a, const scalar &b, arith_op op);

inline bool is_zero(const rational &r)
{
    return r.is_zero();
}

inline bool is_zero(const ratfunc &r)
{
    return r.is_zero();
}

} // namespace umbra
