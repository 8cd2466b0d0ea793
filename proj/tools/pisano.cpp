#include <iostream>

#include "pisano/cli.hpp"

int main(int argc, char** argv) {
  return pisano::cli::run(argc, argv, std::cout, std::cerr);
}
