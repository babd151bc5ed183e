#ifndef SGT_CLI_HPP_
#define SGT_CLI_HPP_

#include <ostream>  // for ostream
#include <string>   // for string
#include <vector>   // for vector

namespace sgt {

  //! Exit status of run_command.
  enum ExitCode : int {
    exit_ok          = 0,
    exit_check_failed = 1,
    exit_usage        = 2,
  };

  //! Runs one subcommand; `args` excludes the program name.
  //!
  //!   analyze FILE
  //!   transversals FILE [--seed-only]
  //!   construct {general|quasi-ideal|spined|semidirect} FILE
  //!   decompose FILE --transversal NAME
  //!   census N
  //!   catalog KEY
  //!
  //! with `--json` and `--max-order K` accepted everywhere.
  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err);

}  // namespace sgt

#endif  // SGT_CLI_HPP_
