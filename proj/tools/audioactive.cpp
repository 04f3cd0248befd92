#include <iostream>

#include "audioactive/cli.hpp"

int main(int argc, char** argv) {
  return audioactive::cli::run(argc, argv, std::cout, std::cerr);
}
