#include <iostream>
#include <vector>

#include "quadpair/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quadpair::runCli(std::move(args), std::cout, std::cerr);
}
