#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace conway {

/// One violated identity instance.
struct CheckFailure {
  std::size_t case_index = 0;
  std::string law;
  std::string inputs;
  std::string left;
  std::string right;
  std::string word;         // shortlex-minimal word with differing coefficients, "" if not applicable
  std::size_t max_len = 0;  // truncation at which the failure was observed (after shrinking)
};

struct CheckReport {
  std::string suite;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }

  /// Appends the counts and failures of `other`.
  void merge(const CheckReport& other);

  /// Human-readable summary; ends with PASS or FAIL.
  std::string summary() const;
};

}  // namespace conway
