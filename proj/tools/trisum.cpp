#include <iostream>
#include <string>
#include <vector>

#include "trisum/cli.hpp"

int main(int argc, char** argv) {
  return trisum::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
