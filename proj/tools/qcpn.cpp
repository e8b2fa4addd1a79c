#include <iostream>

#include "qcpn/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qcpn::cli::run(args, std::cout, std::cerr);
}
