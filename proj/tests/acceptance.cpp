// Acceptance suite: runs every criterion at its pinned bound and prints one
// PASS/FAIL line per criterion.

#include <cstdio>

#include "ajcactus/selftest.hpp"

int main() {
  const auto results = ajcactus::run_acceptance_checks(ajcactus::SelftestLevel::kFull);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("%s %s: %s -- %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.name.c_str(),
                r.detail.c_str());
  }
  std::printf("%s\n", all ? "acceptance suite passed" : "ACCEPTANCE SUITE FAILED");
  return all ? 0 : 1;
}
