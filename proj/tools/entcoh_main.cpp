#include <iostream>
#include <string>
#include <vector>

#include "entcoh/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return entcoh::run_command(args, std::cout, std::cerr);
}
