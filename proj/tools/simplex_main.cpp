#include <binsimplex/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
  return binsimplex::cli::run(argc, argv, std::cout, std::cerr);
}
