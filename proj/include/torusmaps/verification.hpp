#ifndef TORUSMAPS_VERIFICATION_HPP
#define TORUSMAPS_VERIFICATION_HPP

#include <string>
#include <vector>

namespace torusmaps {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The built-in self-check battery: the seven-class enumeration, the
// realization of each class by its canonical matrix, the order-6 worked
// example, and the fixed-point count law.
std::vector<CheckResult> run_verification();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace torusmaps

#endif
