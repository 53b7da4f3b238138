#pragma once

#include <string>
#include <vector>

namespace dyck {

struct CheckResult {
  std::string id;
  bool passed = false;
  std::string detail;
};

/// Exhaustive oracle suite behind `verify`: bijection soundness, three-way
/// count agreement, the trigonometric closed form, animal counts. Results are
/// in a fixed order.
std::vector<CheckResult> run_verification(int max_n);

}  // namespace dyck
