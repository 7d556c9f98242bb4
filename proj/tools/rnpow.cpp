#include <iostream>
#include <string>
#include <vector>

#include "rnpow/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const rnpow::cli::RunResult result = rnpow::cli::run_command_line(args);
  if (result.status == 2) {
    std::cerr << result.output;
  } else {
    std::cout << result.output;
  }
  return result.status;
}
