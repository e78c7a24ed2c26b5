#include "kanrep/report.hpp"

#include <algorithm>

namespace kanrep {

void CheckReport::absorb(CheckReport other, std::size_t limit) {
  total_violations += other.total_violations;
  cases_checked += other.cases_checked;
  millis += other.millis;
  for (auto& v : other.violations) violations.push_back(std::move(v));
  std::stable_sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    if (a.inputs != b.inputs) return a.inputs < b.inputs;
    return a.relation < b.relation;
  });
  if (violations.size() > limit) violations.resize(limit);
}

CheckReport ViolationSink::into_report(std::string subject) && {
  CheckReport r;
  r.subject = std::move(subject);
  r.violations = std::move(kept_);
  r.total_violations = total_;
  r.cases_checked = cases_;
  return r;
}

}  // namespace kanrep
