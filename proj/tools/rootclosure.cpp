#include <iostream>

#include "rootclosure/cli.hpp"

int main(int argc, char** argv) {
  return rootclosure::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
