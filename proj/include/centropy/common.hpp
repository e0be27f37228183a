#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace centropy {

// Error taxonomy. Validation failures are detected on construction,
// dimension errors on mixed-operand operations, domain errors when an
// operation is asked for something outside its mathematical domain, and
// numeric errors when a solver cannot reach its target accuracy.
struct validation_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised by the extreme-distribution solver when |D| > 2^k; the maximum of
// E D(Y) over the superlevel set is then 1 and no two-level solution exists.
struct saturation_error : domain_error {
  using domain_error::domain_error;
};

inline constexpr double kMassTolerance = 1e-12;
inline constexpr double kLn2 = 0.69314718055994530942;

// x * log2(x) with the 0 log 0 = 0 convention.
inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// log2(2^n - d), stable for d << 2^n and exact enough up to n = 64.
inline double log2_pow2_minus(int n, double d) {
  const double frac = d * std::ldexp(1.0, -n);
  return static_cast<double>(n) + std::log1p(-frac) / kLn2;
}

inline double pow2(double e) { return std::exp2(e); }

// Runs fn(i) for i in [0, count), optionally over several threads.
// Callers must write results to per-index slots so the schedule cannot
// change the outcome.
inline void parallel_for_indexed(std::size_t count, unsigned threads,
                                 const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

inline unsigned default_thread_count() {
  if (const char* env = std::getenv("CENTROPY_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace centropy
