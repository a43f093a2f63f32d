#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clslab::cli {

enum ExitCode : int {
  ok = 0,
  verification_failure = 1,
  degeneracy = 2,
  invariant_violation = 3,
  usage = 4,
};

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clslab::cli
