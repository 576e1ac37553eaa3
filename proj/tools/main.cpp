#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return inforank::cli::run(argc, argv, std::cout, std::cerr);
}
