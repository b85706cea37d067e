#include <iostream>

#include "lehmer_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return lehmer::cli::run(args, std::cout, std::cerr);
}
