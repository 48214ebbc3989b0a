#include <iostream>
#include <string>
#include <vector>

#include "qf/cli.hpp"

int main(int argc, char** argv) {
  return qf::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
