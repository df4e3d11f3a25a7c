#pragma once

// The twelve end-to-end checks shared by the acceptance test and `preproj verify`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace preproj::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  /// "[PASS] 3 twist-k0-reflections (0.01s): detail"
  std::string line() const;
};

constexpr int kCriteria = 12;

CriterionResult run_criterion(int id, std::uint64_t seed);
/// Runs every criterion in order, reporting each as it finishes.
std::vector<CriterionResult> run_all(std::uint64_t seed,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace preproj::acceptance
