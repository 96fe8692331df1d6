#ifndef SEMIMOD_CLI_HPP_
#define SEMIMOD_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace semimod::cli {

  inline constexpr int exit_ok       = 0;
  inline constexpr int exit_invalid  = 2;
  inline constexpr int exit_internal = 3;

  // Runs one command line (args excludes the program name). Results go to
  // `out`, diagnostics to `err`; returns the process exit code.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semimod::cli

#endif  // SEMIMOD_CLI_HPP_
