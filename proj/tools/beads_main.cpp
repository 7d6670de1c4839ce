#include <iostream>
#include <string>
#include <vector>

#include "beads/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return beads::cli::run(args, std::cin, std::cout);
}
