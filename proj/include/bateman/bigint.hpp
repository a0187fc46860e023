#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bateman {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::uint64_t mod_u64(const BigInt& a, std::uint64_t m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

// Exact integer square root test.
inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

}  // namespace bateman
