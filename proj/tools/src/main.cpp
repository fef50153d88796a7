#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <umbra/cli.hpp>
#include <umbra/series.hpp>

int main(int argc, char **argv)
{
    // UMBRA_PRECISION fixes the number of series coefficients carried.
    if (const char *env = std::getenv("UMBRA_PRECISION"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const long v = std::stol(env, &used);
            if (used != std::string(env).size() || v < 1) {
                throw std::invalid_argument(env);
            }
            umbra::set_precision_override(static_cast<std::size_t>(v));
        } catch (const std::exception &) {
            std::cerr << "error: UMBRA_PRECISION must be a positive integer\n";
            return umbra::cli::exit_usage;
        }
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    return umbra::cli::run(args, std::cout, std::cerr);
}
