#include <umbra/scalar.hpp>

#include <umbra/error.hpp>

namespace umbra
{

namespace
{

template <class K>
K apply(const K &a, const K &b, arith_op op)
{
    switch (op) {
        case arith_op::add:
            return a + b;
        case arith_op::sub:
            return a - b;
        case arith_op::mul:
            return a * b;
        case arith_op::div:
            if (b.is_zero()) {
                throw division_by_zero("division by zero");
            }
            return a / b;
    }
    throw domain_error("unknown arithmetic operation");
}

} // namespace

scalar scalar_arith(const scalar &a, const scalar &b, arith_op op)
{
    if (a.index() != b.index()) {
        throw variant_mismatch("scalar variant mismatch");
    }
    if (const auto *ra = std::get_if<rational>(&a)) {
        return apply(*ra, std::get<rational>(b), op);
    }
    return apply(std::get<ratfunc>(a), std::get<ratfunc>(b), op);
}

} // namespace umbra
