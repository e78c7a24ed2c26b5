#pragma once

#include <algorithm>
#include <chrono>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "kanrep/report.hpp"

namespace kanrep {

/// Runs work(sink, begin, end) over [0, count) split into contiguous ranges,
/// one per worker, and merges the sinks into a deterministic report.
template <class Work>
CheckReport run_partitioned(std::string subject, std::size_t count, const CheckOptions& options, Work&& work) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(options.threads == 0 ? 1 : options.threads, count));
  std::vector<ViolationSink> sinks(workers, ViolationSink(options.limit));
  if (workers == 1) {
    work(sinks[0], std::size_t{0}, count);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          work(sinks[w], count * w / workers, count * (w + 1) / workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  CheckReport report;
  report.subject = subject;
  for (auto& sink : sinks) report.absorb(std::move(sink).into_report(subject), options.limit);
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace kanrep
