// Integration suite for the nine acceptance criteria. Prints one pass/fail
// line per criterion; exits nonzero when any claim fails.

#include <cstdio>

#include "intpos/checks.hpp"

int main() {
  const auto claims = intpos::run_acceptance();
  for (const auto& c : claims) {
    std::printf("  %s [criterion %d] %s\n", c.pass ? "pass" : "FAIL",
                c.criterion, c.claim.c_str());
    if (!c.detail.empty()) std::printf("         %s\n", c.detail.c_str());
  }
  bool all = true;
  for (const auto& s : intpos::summarize(claims)) {
    std::printf("criterion %d: %s (%d/%d claims)\n", s.criterion,
                s.pass ? "PASS" : "FAIL", s.claims - s.failed, s.claims);
    all = all && s.pass;
  }
  return all ? 0 : 1;
}
