#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace repeller::geometry {

/// Runs body(begin, end) over `jobs` contiguous blocks of [0, n). Blocks are
/// fixed by (n, jobs) alone so callers can merge per-block results in order.
template <class Body>
void parallel_blocks(std::size_t n, unsigned jobs, Body&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    body(std::size_t{0}, n, 0u);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  const std::size_t chunk = (n + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::size_t b = std::min(n, j * chunk);
    const std::size_t e = std::min(n, b + chunk);
    workers.emplace_back([&, b, e, j] {
      try {
        body(b, e, j);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline unsigned default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

}  // namespace repeller::geometry
