#include <iostream>

#include "factorlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return factorlab::cli::run(args, std::cout, std::cerr);
}
