#include <iostream>

#include "chaintutte/cli.hpp"

int main(int argc, char** argv) {
  return chaintutte::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
