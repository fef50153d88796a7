#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umbra::cli
{

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_verdict_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (without the program name). Output goes to out,
/// diagnostics and usage text to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Executes JSON-lines jobs from in. Every line is validated before any job
/// runs; a bad line yields exit_usage and a diagnostic naming it. Each job
/// writes one compact JSON record per line; the result is the largest exit
/// code among the jobs.
int run_batch(std::istream &in, std::ostream &out, std::ostream &err);

} // namespace umbra::cli
