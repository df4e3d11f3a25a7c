#include <cstdint>
#include <cstdlib>
#include <iostream>

#include "preproj/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240601;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  preproj::acceptance::run_all(seed, [&](const preproj::acceptance::CriterionResult& r) {
    std::cout << r.line() << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (preproj::acceptance::kCriteria - failed) << "/" << preproj::acceptance::kCriteria << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
