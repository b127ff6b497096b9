#include <iostream>
#include <string>
#include <vector>

#include "phc/cli.hpp"
#include "phc/errors.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return phc::run_cli(args, std::cin, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 70;
  }
}
