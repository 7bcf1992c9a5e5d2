#include "boilover/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return boilover::cli::run(args, std::cout, std::cerr, ::isatty(STDOUT_FILENO) != 0);
}
