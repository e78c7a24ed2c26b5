#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kanrep/scalar.hpp"

namespace kanrep {

/// One failed instance of an identity.
struct Violation {
  std::string relation;
  std::vector<std::size_t> inputs;
  std::vector<std::string> input_labels;
  std::vector<std::pair<std::string, Scalar>> residual;
};

/// Outcome of an exhaustive check.  `violations` keeps at most the
/// configured number of entries in canonical (input-lexicographic) order;
/// `total_violations` counts all of them.
struct CheckReport {
  std::string subject;
  std::vector<Violation> violations;
  std::size_t total_violations = 0;
  std::size_t cases_checked = 0;
  double millis = 0.0;

  bool passed() const noexcept { return total_violations == 0; }
  /// Folds another report in, re-sorting and truncating to `limit`.
  void absorb(CheckReport other, std::size_t limit);
};

struct CheckOptions {
  /// Maximum number of violations kept with full residuals.
  std::size_t limit = 10;
  unsigned threads = 1;
  /// If set and the basis tail [index, dim) spans an ideal with zero square,
  /// tuples with two or more entries in it are skipped (every term vanishes).
  std::optional<std::size_t> square_zero_ideal_from;
  /// Check the cubic Kantor condition in every characteristic, not just 3.
  bool force_cubic_condition = false;
};

/// Collects violations for one worker.
class ViolationSink {
 public:
  explicit ViolationSink(std::size_t limit) : limit_(limit) {}

  template <class MakeViolation>
  void record(MakeViolation&& make) {
    ++total_;
    if (kept_.size() < limit_) kept_.push_back(make());
  }
  void count_case() noexcept { ++cases_; }

  CheckReport into_report(std::string subject) &&;

 private:
  std::size_t limit_;
  std::size_t total_ = 0;
  std::size_t cases_ = 0;
  std::vector<Violation> kept_;
};

}  // namespace kanrep
