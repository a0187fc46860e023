#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "bateman/bigint.hpp"
#include "bateman/common.hpp"

namespace bateman {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = m > 1 ? 1 : 0;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin. The 7-base witness set below is verified
// complete for all n < 2^64, so the classification is exact, never
// probabilistic; the integer tables downstream need exact counts.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    std::uint64_t x = powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

// Plain byte sieve; supplies base primes for the segmented machinery.
inline std::vector<std::uint32_t> simple_sieve(std::uint32_t n) {
  std::vector<std::uint32_t> primes;
  if (n < 2) return primes;
  std::vector<std::uint8_t> comp(n + 1, 0);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!comp[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = 1;
    }
  }
  return primes;
}

// Primality flags for the odd integers of [lo, hi), bit-packed; 2 is handled
// logically so counts and lookups agree with is_prime_u64 on every element.
class PrimeRange {
 public:
  PrimeRange(std::uint64_t lo, std::uint64_t hi, std::uint64_t first_odd, std::vector<std::uint64_t> bits)
      : lo_(lo), hi_(hi), first_odd_(first_odd), bits_(std::move(bits)) {}

  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return hi_; }

  bool contains(std::uint64_t n) const {
    if (n < lo_ || n >= hi_) return false;
    if (n == 2) return true;
    if (n < 3 || n % 2 == 0) return false;
    std::uint64_t idx = (n - first_odd_) / 2;
    return (bits_[idx >> 6] >> (idx & 63)) & 1;
  }

  std::uint64_t count() const {
    std::uint64_t c = (lo_ <= 2 && 2 < hi_) ? 1 : 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
  }

  template <class F>
  void for_each(F&& f) const {
    if (lo_ <= 2 && 2 < hi_) f(std::uint64_t{2});
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word) {
        int b = std::countr_zero(word);
        word &= word - 1;
        f(first_odd_ + 2 * (std::uint64_t(w) * 64 + b));
      }
    }
  }

 private:
  std::uint64_t lo_, hi_, first_odd_;
  std::vector<std::uint64_t> bits_;
};

namespace detail {

// Marks composites of the odd base primes over the odd-index window
// [first_odd, first_odd + 2*n_odds). Tiled so the working set stays inside
// seg_bytes of cache at a time.
inline void sieve_odd_window(std::uint64_t first_odd, std::uint64_t n_odds,
                             const std::vector<std::uint32_t>& base,
                             std::vector<std::uint64_t>& bits, std::size_t seg_bytes) {
  std::fill(bits.begin(), bits.end(), ~0ull);
  if (n_odds == 0) return;
  const std::uint64_t seg_idx_span = std::max<std::uint64_t>(seg_bytes * 8, 64);
  std::vector<std::uint64_t> next(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::uint64_t p = base[i];
    if (p == 2) {
      next[i] = ~0ull;
      continue;
    }
    std::uint64_t start = p * p;
    if (start < first_odd) {
      std::uint64_t q = (first_odd + p - 1) / p * p;
      if (q % 2 == 0) q += p;
      start = q;
    }
    next[i] = (start - first_odd) / 2;  // may be >= n_odds; handled below
  }
  for (std::uint64_t seg_lo = 0; seg_lo < n_odds; seg_lo += seg_idx_span) {
    std::uint64_t seg_hi = std::min(n_odds, seg_lo + seg_idx_span);
    for (std::size_t i = 0; i < base.size(); ++i) {
      std::uint64_t p = base[i];
      if (p == 2) continue;
      std::uint64_t idx = next[i];
      for (; idx < seg_hi; idx += p) bits[idx >> 6] &= ~(1ull << (idx & 63));
      next[i] = idx;
    }
  }
  // Mask the tail beyond n_odds and un-flag 1 if the window starts there.
  std::uint64_t tail = n_odds & 63;
  if (tail) bits.back() &= (1ull << tail) - 1;
  if (first_odd == 1) bits[0] &= ~1ull;
}

}  // namespace detail

// Exact primality flags for [lo, hi). Throws budget_error when the flag
// vector itself would not fit the memory budget; scans that only need to
// visit primes should use for_each_prime / prime_count instead.
inline PrimeRange sieve_range(std::uint64_t lo, std::uint64_t hi,
                              std::uint64_t budget_bytes = default_memory_budget(),
                              std::size_t seg_bytes = (1u << 20)) {
  if (lo >= hi) throw usage_error("sieve_range: need lo < hi");
  std::uint64_t first_odd = (lo % 2 == 1) ? lo : lo + 1;
  std::uint64_t n_odds = first_odd >= hi ? 0 : (hi - first_odd + 1) / 2;
  if (n_odds / 8 + 1 > budget_bytes)
    throw budget_error("sieve_range: span of " + std::to_string(hi - lo) +
                       " exceeds the memory budget of " + std::to_string(budget_bytes) + " bytes");
  std::vector<std::uint64_t> bits((n_odds + 63) / 64, ~0ull);
  auto base = simple_sieve(static_cast<std::uint32_t>(isqrt_u64(hi - 1)));
  detail::sieve_odd_window(first_odd, n_odds, base, bits, seg_bytes);
  return PrimeRange(lo, hi, first_odd, std::move(bits));
}

// Ascending prime visitor over [lo, hi), segment by segment; memory use is
// one segment regardless of the span.
template <class F>
inline void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f,
                           std::size_t seg_bytes = (1u << 20)) {
  if (lo >= hi) return;
  if (lo <= 2 && 2 < hi) f(std::uint64_t{2});
  std::uint64_t first_odd = (lo % 2 == 1) ? lo : lo + 1;
  if (first_odd >= hi) return;
  auto base = simple_sieve(static_cast<std::uint32_t>(isqrt_u64(hi - 1)));
  const std::uint64_t idx_span = seg_bytes * 8;
  std::uint64_t total = (hi - first_odd + 1) / 2;
  std::vector<std::uint64_t> bits((std::min(idx_span, total) + 63) / 64);
  for (std::uint64_t off = 0; off < total; off += idx_span) {
    std::uint64_t n_odds = std::min(idx_span, total - off);
    std::uint64_t seg_first = first_odd + 2 * off;
    bits.assign((n_odds + 63) / 64, ~0ull);
    detail::sieve_odd_window(seg_first, n_odds, base, bits, seg_bytes);
    for (std::size_t w = 0; w < bits.size(); ++w) {
      std::uint64_t word = bits[w];
      while (word) {
        int b = std::countr_zero(word);
        word &= word - 1;
        f(seg_first + 2 * (std::uint64_t(w) * 64 + b));
      }
    }
  }
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n >= 2) out.reserve(static_cast<std::size_t>(n > 16 ? 1.2 * n / std::log(double(n)) : 8));
  for_each_prime(2, n + 1, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

inline std::uint64_t prime_count_range(std::uint64_t lo, std::uint64_t hi,
                                       std::size_t seg_bytes = (1u << 20)) {
  if (lo >= hi) return 0;
  std::uint64_t c = (lo <= 2 && 2 < hi) ? 1 : 0;
  std::uint64_t first_odd = (lo % 2 == 1) ? lo : lo + 1;
  if (first_odd >= hi) return c;
  auto base = simple_sieve(static_cast<std::uint32_t>(isqrt_u64(hi - 1)));
  const std::uint64_t idx_span = seg_bytes * 8;
  std::uint64_t total = (hi - first_odd + 1) / 2;
  std::vector<std::uint64_t> bits;
  for (std::uint64_t off = 0; off < total; off += idx_span) {
    std::uint64_t n_odds = std::min(idx_span, total - off);
    bits.assign((n_odds + 63) / 64, ~0ull);
    detail::sieve_odd_window(first_odd + 2 * off, n_odds, base, bits, seg_bytes);
    for (std::uint64_t w : bits) c += std::popcount(w);
  }
  return c;
}

// pi(x). Disjoint chunks may be counted on worker threads; per-chunk counts
// are exact integers summed in chunk order, so the result is identical for
// any worker count.
inline std::uint64_t prime_count(std::uint64_t x, unsigned threads = 1) {
  if (x < 2) return 0;
  std::uint64_t hi = x + 1;
  if (threads <= 1 || hi < (1u << 22)) return prime_count_range(2, hi);
  std::uint64_t chunk = (hi + threads - 1) / threads;
  chunk += chunk % 2;
  std::vector<std::uint64_t> counts(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t lo = 2 + t * chunk;
    std::uint64_t up = std::min(hi, lo + chunk);
    if (lo >= up) break;
    pool.emplace_back([&counts, t, lo, up] { counts[t] = prime_count_range(lo, up); });
  }
  for (auto& th : pool) th.join();
  std::uint64_t c = 0;
  for (std::uint64_t v : counts) c += v;
  return c;
}

// p_n with p_1 = 2.
inline std::uint64_t nth_prime(std::uint64_t n) {
  if (n == 0) throw usage_error("nth_prime: index starts at 1");
  if (n > (1ull << 40)) throw usage_error("nth_prime: index beyond sieve capacity");
  static const std::uint64_t small[] = {2, 3, 5, 7, 11, 13};
  if (n <= 6) return small[n - 1];
  double nd = static_cast<double>(n);
  std::uint64_t bound = static_cast<std::uint64_t>(nd * (std::log(nd) + std::log(std::log(nd)))) + 16;
  std::uint64_t seen = 0, result = 0;
  // One pass; the Rosser bound guarantees the nth prime lies below `bound`.
  for_each_prime(2, bound, [&](std::uint64_t p) {
    if (++seen == n) result = p;
  });
  if (result == 0) throw usage_error("nth_prime: bound estimate failed");
  return result;
}

// Jacobi symbol (a/n) for odd n >= 1, by binary quadratic reciprocity.
inline int jacobi(std::int64_t a, std::uint64_t n) {
  if (n % 2 == 0) throw usage_error("jacobi: modulus must be odd");
  std::uint64_t ua;
  int sign = 1;
  if (a < 0) {
    // (-1/n) = (-1)^((n-1)/2)
    if (n % 4 == 3) sign = -sign;
    ua = static_cast<std::uint64_t>(-(a + 1)) + 1;
  } else {
    ua = static_cast<std::uint64_t>(a);
  }
  ua %= n;
  while (ua != 0) {
    int z = std::countr_zero(ua);
    ua >>= z;
    if ((z & 1) && (n % 8 == 3 || n % 8 == 5)) sign = -sign;
    if (ua % 4 == 3 && n % 4 == 3) sign = -sign;
    std::swap(ua, n);
    ua %= n;
  }
  return n == 1 ? sign : 0;
}

inline int jacobi(const BigInt& a, std::uint64_t n) {
  if (n % 2 == 0) throw usage_error("jacobi: modulus must be odd");
  return jacobi(static_cast<std::int64_t>(mod_u64(a, n)), n);
}

// --- factorization of 64-bit integers (trial division + Brent's rho) ---

namespace detail {

inline std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  std::uint64_t c = 1;
  while (true) {
    std::uint64_t x = 2, y = 2, d = 1, q = 1, ys = 0;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    while (d == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
      for (std::uint64_t k = 0; k < r && d == 1; k += m) {
        ys = y;
        std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = (mulmod_u64(y, y, n) + c) % n;
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = (mulmod_u64(ys, ys, n) + c) % n;
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
    ++c;
  }
}

inline void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace detail

// Sorted (prime, exponent) factorization.
inline std::vector<std::pair<std::uint64_t, int>> factorize_u64(std::uint64_t n) {
  std::vector<std::uint64_t> fl;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (n % p == 0) {
      fl.push_back(p);
      n /= p;
    }
  }
  if (n > 1) detail::factor_rec(n, fl);
  std::sort(fl.begin(), fl.end());
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p : fl) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

// phi(a) via the product over p | a.
inline std::uint64_t totient(std::uint64_t a) {
  if (a == 0) throw usage_error("totient: argument must be positive");
  std::uint64_t r = a;
  for (auto [p, e] : factorize_u64(a)) r = r / p * (p - 1);
  return r;
}

// sum_{p<=x} 1/p, compensated, ascending.
inline double prime_reciprocal_sum(double x) {
  if (x < 2) return 0.0;
  CompensatedSum s;
  for_each_prime(2, static_cast<std::uint64_t>(x) + 1,
                 [&](std::uint64_t p) { s.add(1.0 / static_cast<double>(p)); });
  return s.value();
}

// sum_{p<=x} 1/p - log log x; approaches the Meissel-Mertens constant.
inline double mertens_deviation(double x) {
  if (x < 2) throw usage_error("mertens_deviation: x must be >= 2");
  return prime_reciprocal_sum(x) - std::log(std::log(x));
}

// --- arbitrary-precision probabilistic primality ---

enum class Primality { composite, probable_prime };

inline constexpr std::uint64_t kDefaultWitnessSeed = 0x9e3779b97f4a7c15ull;

// Miller-Rabin with `rounds` random witnesses from a seeded generator, so a
// given (n, rounds, seed) always classifies identically across runs.
inline Primality is_prime_big(const BigInt& n, unsigned rounds = 40,
                              std::uint64_t seed = kDefaultWitnessSeed) {
  if (rounds < 1) throw usage_error("is_prime_big: rounds must be >= 1");
  if (n < 2) return Primality::composite;
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return Primality::probable_prime;
    if (n % p == 0) return Primality::composite;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d >>= 1;
    ++s;
  }
  std::mt19937_64 rng(seed);
  const std::size_t words = (boost::multiprecision::msb(n) / 64) + 1;
  for (unsigned round = 0; round < rounds; ++round) {
    BigInt a = 0;
    for (std::size_t w = 0; w < words; ++w) a = (a << 64) | BigInt(rng());
    a = a % (n - 3) + 2;  // in [2, n-2]
    BigInt x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return Primality::composite;
  }
  return Primality::probable_prime;
}

inline bool is_probable_prime(const BigInt& n, unsigned rounds = 40,
                              std::uint64_t seed = kDefaultWitnessSeed) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max())
    return is_prime_u64(static_cast<std::uint64_t>(n));
  return is_prime_big(n, rounds, seed) == Primality::probable_prime;
}

}  // namespace bateman
