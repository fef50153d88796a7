#include <umbra/series.hpp>

#include <atomic>

namespace umbra
{

namespace
{

// 0 means no override.
std::atomic<std::size_t> g_precision_override{0};

} // namespace

std::size_t working_precision(std::size_t max_degree)
{
    if (const std::size_t o = g_precision_override.load(); o != 0) {
        return o;
    }
    return 2 * max_degree + 4;
}

void set_precision_override(std::optional<std::size_t> precision)
{
    if (precision && *precision == 0) {
        throw precision_error("precision override must be at least 1");
    }
    g_precision_override.store(precision.value_or(0));
}

std::optional<std::size_t> precision_override()
{
    const std::size_t o = g_precision_override.load();
    return o == 0 ? std::nullopt : std::optional<std::size_t>(o);
}

series<rational> specialize(const series<ratfunc> &s, const rational &v)
{
    std::vector<rational> out;
    out.reserve(s.precision());
    for (const auto &c : s.coeffs()) {
        out.push_back(eval_at_lambda(c, v));
    }
    return series<rational>(std::move(out));
}

template class series<rational>;
template class series<ratfunc>;

} // namespace umbra
