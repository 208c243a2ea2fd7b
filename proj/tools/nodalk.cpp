#include <iostream>
#include <string>
#include <vector>

#include "nodalk/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nodalk::run_cli(args, std::cout, std::cerr);
}
