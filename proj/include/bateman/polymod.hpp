#pragma once

#include <cstdint>
#include <vector>

#include "bateman/primes.hpp"

namespace bateman {

// Dense polynomials over Z/pZ, constant term first, trimmed. Degrees here
// stay tiny (the families of interest are products of a few members of
// degree <= 3), so schoolbook arithmetic is the right tool.
namespace polymod {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

// Remainder of a by monic-izable b (lc inverted mod p).
inline Poly rem(Poly a, const Poly& b, std::uint64_t p) {
  std::uint64_t inv_lc = powmod_u64(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    std::uint64_t q = mulmod_u64(a.back(), inv_lc, p);
    std::size_t shift = a.size() - b.size();
    if (q != 0) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        std::uint64_t s = mulmod_u64(q, b[i], p);
        a[shift + i] = (a[shift + i] + p - s) % p;
      }
    }
    a.pop_back();
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline Poly monic(Poly f, std::uint64_t p) {
  if (f.empty()) return f;
  std::uint64_t inv = powmod_u64(f.back(), p - 2, p);
  for (auto& c : f) c = mulmod_u64(c, inv, p);
  return f;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(std::move(a), p);
}

// x^e mod f, binary exponentiation in the quotient ring.
inline Poly pow_x(std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  Poly base{0, 1};
  if (f.size() <= 1) return {};
  base = rem(std::move(base), f, p);
  while (e) {
    if (e & 1) result = rem(mul(result, base, p), f, p);
    base = rem(mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

// Number of distinct roots of f in Z/pZ: deg gcd(x^p - x, f).
// Caller guarantees f is nonzero mod p.
inline int distinct_roots(const Poly& f0, std::uint64_t p) {
  Poly f = monic(f0, p);
  if (degree(f) == 0) return 0;
  if (degree(f) == 1) return 1;
  Poly xp = pow_x(p, f, p);
  // xp - x
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = (xp[1] + p - 1) % p;
  trim(xp);
  if (xp.empty()) return degree(f);  // f | x^p - x: all roots distinct and in F_p
  Poly g = gcd(f, xp, p);
  return g.empty() ? 0 : degree(g);
}

// Rabin's test: f of degree n is irreducible over F_p iff x^(p^n) = x mod f
// and gcd(x^(p^(n/q)) - x, f) = 1 for every prime q | n.
inline bool irreducible(const Poly& f0, std::uint64_t p) {
  Poly f = monic(f0, p);
  int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  auto frobenius_iterate = [&](int times) {
    Poly y{0, 1};
    y = rem(std::move(y), f, p);
    for (int i = 0; i < times; ++i) {
      // y <- y^p mod f
      Poly acc{1};
      Poly base = y;
      std::uint64_t e = p;
      while (e) {
        if (e & 1) acc = rem(mul(acc, base, p), f, p);
        base = rem(mul(base, base, p), f, p);
        e >>= 1;
      }
      y = std::move(acc);
    }
    return y;
  };
  std::vector<int> prime_divs;
  int m = n;
  for (int q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      prime_divs.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) prime_divs.push_back(m);
  for (int q : prime_divs) {
    Poly y = frobenius_iterate(n / q);
    // gcd(y - x, f) must be 1
    if (y.size() < 2) y.resize(2, 0);
    y[1] = (y[1] + p - 1) % p;
    trim(y);
    Poly g = y.empty() ? f : gcd(f, y, p);
    if (!(g.size() == 1)) return false;
  }
  Poly y = frobenius_iterate(n);
  if (y.size() < 2) y.resize(2, 0);
  y[1] = (y[1] + p - 1) % p;
  trim(y);
  return y.empty();
}

}  // namespace polymod
}  // namespace bateman
