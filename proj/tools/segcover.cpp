#include <iostream>

#include "segcover/cli.hpp"

int main(int argc, char** argv) {
  return segcover::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
