#include <umbra/polyop.hpp>

namespace umbra
{

poly<rational> specialize(const poly<ratfunc> &p, const rational &v)
{
    std::vector<rational> out;
    out.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) {
        out.push_back(eval_at_lambda(c, v));
    }
    return poly<rational>(std::move(out));
}

poly<rational> falling_factorial(std::size_t n)
{
    auto p = poly<rational>::constant(rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        p = p * poly<rational>(std::vector<rational>{rational(-static_cast<long>(i)), rational(1)});
    }
    return p;
}

rational stirling1(std::size_t n, std::size_t l)
{
    return falling_factorial(n).coeff(l);
}

rational stirling2(std::size_t l, std::size_t n)
{
    if (l < n) {
        return rational();
    }
    const auto e = series<rational>::exponential(rational(1), l + 1) - series<rational>::one(l + 1);
    return pow(e, static_cast<long>(n))[l] / rational::factorial(n);
}

template class poly<rational>;
template class poly<ratfunc>;

} // namespace umbra
