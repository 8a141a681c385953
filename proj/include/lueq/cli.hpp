#pragma once

#include <string>
#include <vector>

namespace lueq {

// Exit codes: 0 success or equivalence certified, 1 distinct, 2 inconclusive
// (including a search that found nothing), 3 input error, 4 numerical
// failure.
struct CommandOutcome {
  int exit_code = 0;
  std::string report;
};

// Runs one subcommand. `args` is argv without the program name.
CommandOutcome dispatch(const std::vector<std::string>& args);

}  // namespace lueq
