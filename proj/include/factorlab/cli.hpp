#ifndef FACTORLAB_CLI_HPP_
#define FACTORLAB_CLI_HPP_

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace factorlab::cli {

  inline constexpr int exit_ok = 0;
  inline constexpr int exit_violation = 1;
  inline constexpr int exit_usage = 2;

  // Runs one command; args excludes the program name. Input errors and
  // exhausted budgets are reported on err with exit_usage.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  // FACTORLAB_THREADS if set to a positive integer, else the hardware
  // concurrency (at least 1).
  std::size_t worker_threads();

}  // namespace factorlab::cli

#endif  // FACTORLAB_CLI_HPP_
