#include <cstdio>
#include <string>
#include <vector>

#include "lueq/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const lueq::CommandOutcome outcome = lueq::dispatch(args);
  std::fputs(outcome.report.c_str(), stdout);
  return outcome.exit_code;
}
