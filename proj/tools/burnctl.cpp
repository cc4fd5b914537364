#include <iostream>
#include <string>
#include <vector>

#include "burn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return burn::cli::run(args, std::cout, std::cerr);
}
