#ifndef AJCACTUS_SELFTEST_HPP_
#define AJCACTUS_SELFTEST_HPP_

#include <string>
#include <vector>

namespace ajcactus {

enum class SelftestLevel { kQuick, kFull };

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  std::string detail;  // counts on success, the offending witness on failure
};

// The acceptance checks. kFull runs the pinned bounds (exhaustive up to
// n = 6 where stated); kQuick is a reduced smoke-test variant of the same
// checks.
std::vector<CheckResult> run_acceptance_checks(SelftestLevel level);

}  // namespace ajcactus

#endif  // AJCACTUS_SELFTEST_HPP_
