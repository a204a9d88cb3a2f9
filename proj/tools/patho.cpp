#include <iostream>

#include "patho/cli/commands.hpp"

int main(int argc, char** argv) {
  return patho::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
