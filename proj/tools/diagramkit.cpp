#include <iostream>

#include "diagramkit/cli.hpp"

int main(int argc, char** argv) {
  return diagramkit::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
