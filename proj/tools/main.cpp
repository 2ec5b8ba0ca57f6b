#include <iostream>
#include <string>
#include <vector>

#include "skewschur/cli.hpp"

int main(int argc, char** argv) {
  return skewschur::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                             std::cerr);
}
