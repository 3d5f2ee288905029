#pragma once

#include <string>
#include <vector>

namespace stabplane {

struct CheckReport {
  std::string suite;
  size_t checks = 0;
  size_t failures = 0;
  std::vector<std::string> messages;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      messages.push_back(what);
    }
  }
  void merge(const CheckReport& other) {
    checks += other.checks;
    failures += other.failures;
    messages.insert(messages.end(), other.messages.begin(), other.messages.end());
  }
};

std::vector<std::string> suite_names();

// Deterministic invariant sweeps per module; "all" merges every suite.
CheckReport run_suite(const std::string& name);

}  // namespace stabplane
