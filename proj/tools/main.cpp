#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chaindepth::cli::run(args, std::cout, std::cerr, chaindepth::cli::process_env());
}
