#include <iostream>

#include "stabilis/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto outcome = stabilis::cli::run(args);
  std::cout << outcome.output;
  return outcome.exit_code;
}
