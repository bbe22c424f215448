#pragma once

#include <string>
#include <vector>

namespace skeinlab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The ten acceptance checks, in order. Every check is exact; the expected
// values are frozen from the source results they verify.
std::vector<CheckResult> acceptance_checks();

}  // namespace skeinlab
