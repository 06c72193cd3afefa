#include <iostream>

#include "qcli.hpp"

int main(int argc, char** argv) {
  return qcli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
