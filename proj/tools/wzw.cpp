#include <iostream>
#include <string>
#include <vector>

#include "wzw_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wzw::cli::run(std::move(args), std::cout, std::cerr);
}
