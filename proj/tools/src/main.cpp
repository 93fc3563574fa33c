#include <iostream>

#include "hamcurve_cli/cli.hpp"

int main(int argc, char** argv) {
  return hamcurve::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
