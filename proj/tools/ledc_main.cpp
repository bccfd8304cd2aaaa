#include <iostream>
#include <string>
#include <vector>

#include "ledc_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ledc::cli::run(args, std::cout, std::cerr);
}
