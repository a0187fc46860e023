#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace bateman {

// Exit-code-mapped error categories (see tools/bateman.cpp).
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct inadmissible_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Neumaier-compensated accumulator. The Euler products walk 1e7..1e8 terms
// whose magnitudes span ~9 decades; naive summation loses the tail.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Round half away from zero; the tables print integers under this rule.
inline long long round_half_away(double x) {
  return static_cast<long long>(x < 0 ? std::ceil(x - 0.5) : std::floor(x + 0.5));
}

inline std::uint64_t default_memory_budget() {
  if (const char* env = std::getenv("BATEMAN_MEMORY_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 1ull << 28;  // 256 MiB
}

}  // namespace bateman
