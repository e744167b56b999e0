#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "zariski/selftest.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20211007;
  bool all = true;
  for (int id = 1; id <= zariski::kCriterionCount; ++id) {
    auto r = zariski::run_criterion(id, seed);
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << std::setw(2) << id << ": " << r.title << " ["
              << r.detail << "; " << std::fixed << std::setprecision(2) << r.seconds << "s]" << std::endl;
  }
  return all ? 0 : 1;
}
