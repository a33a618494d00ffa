// Runs acceptance criteria 1-10 and prints one line per criterion.

#include <cstdlib>
#include <iostream>
#include <string>

#include "suite.hpp"

int main(int argc, char** argv) {
  twoalg::suite::Options o;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--quick") o.quick = true;
    if (arg == "--seed" && i + 1 < argc) o.seed = std::strtoull(argv[++i], nullptr, 10);
  }
  bool all = true;
  for (const auto& c : twoalg::suite::run_all(o)) {
    std::cout << twoalg::suite::summary_line(c) << std::endl;
    all = all && c.passed;
  }
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
