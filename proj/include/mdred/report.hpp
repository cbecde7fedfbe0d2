#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mdred {

/// Outcome of an exhaustive property check: how many individual assertions
/// ran and which of them failed.
struct Report {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) violations.push_back(what);
  }
};

/// Pass/fail with a human-readable witness on failure.
struct Verdict {
  bool ok = true;
  std::string witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
};

}  // namespace mdred
