#include <iostream>

#include "charcol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return charcol::run(args, std::cout, std::cerr);
}
