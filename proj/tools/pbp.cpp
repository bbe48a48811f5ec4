#include <iostream>
#include <string>
#include <vector>

#include "pbp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pbp::cli::run(args, std::cout, std::cerr);
}
