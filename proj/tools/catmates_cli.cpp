#include <iostream>

#include "catmates/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto r = catmates::cli::run(args);
  std::cout << r.output;
  return r.exit_code();
}
