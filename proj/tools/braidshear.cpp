#include <iostream>

#include "braidshear/cli.hpp"

int main(int argc, char** argv) {
  return braidshear::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
