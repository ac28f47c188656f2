#include <iostream>

#include "pf/cli.hpp"

int main(int argc, char** argv) {
  return pf::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
