#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bateman/asymptotics.hpp"
#include "bateman/polynomial.hpp"
#include "bateman/primes.hpp"

namespace bateman {

struct CountReport {
  std::string family;
  std::uint64_t x = 0;  // bound, or N in first-N-primes mode
  std::uint64_t count = 0;
  std::optional<Prediction> prediction;
  std::optional<double> ratio;  // empirical / predicted
  double wall_ms = 0.0;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

struct FastEval {
  std::vector<std::int64_t> coeffs;  // constant first
  bool usable = false;
};

// The 64-bit fast path applies when sum |c_i| x^i stays below 2^62, which
// bounds every Horner intermediate as well.
inline FastEval make_fast_eval(const IntPoly& f, std::uint64_t x) {
  FastEval fe;
  BigInt bound = 0, xp = 1;
  for (int i = 0; i <= f.degree(); ++i) {
    BigInt a = f.coeff(i);
    bound += (a < 0 ? BigInt(-a) : a) * xp;
    xp *= x;
  }
  if (bound >= (BigInt(1) << 62)) return fe;
  fe.usable = true;
  for (int i = 0; i <= f.degree(); ++i) fe.coeffs.push_back(static_cast<std::int64_t>(f.coeff(i)));
  return fe;
}

inline __int128 eval_fast(const FastEval& fe, std::uint64_t n) {
  __int128 acc = 0;
  for (auto it = fe.coeffs.rbegin(); it != fe.coeffs.rend(); ++it)
    acc = acc * static_cast<__int128>(n) + *it;
  return acc;
}

}  // namespace detail

// Q(f_1..f_k; x) = #{ 1 <= n <= x : every f_i(n) is prime }. Exact on the
// 64-bit path; values beyond it use the seeded probabilistic test.
inline CountReport count_Q(const PolyFamily& F, std::uint64_t x,
                           bool override_admissibility = false, unsigned bigint_rounds = 40,
                           std::uint64_t seed = kDefaultWitnessSeed) {
  F.require_admissible(override_admissibility);
  detail::Stopwatch sw;
  // Cheapest-to-reject first: smaller values mean cheaper tests and the
  // order cannot change the count.
  std::vector<const IntPoly*> order;
  for (const auto& m : F.members()) order.push_back(&m);
  std::sort(order.begin(), order.end(), [&](const IntPoly* a, const IntPoly* b) {
    BigInt va = a->eval(x), vb = b->eval(x);
    if (va < 0) va = -va;
    if (vb < 0) vb = -vb;
    return va < vb;
  });
  std::vector<detail::FastEval> fast;
  bool all_fast = true;
  for (const IntPoly* m : order) {
    fast.push_back(detail::make_fast_eval(*m, x));
    all_fast = all_fast && fast.back().usable;
  }
  std::uint64_t count = 0;
  if (all_fast) {
    for (std::uint64_t n = 1; n <= x; ++n) {
      bool all = true;
      for (const auto& fe : fast) {
        __int128 v = detail::eval_fast(fe, n);
        if (v < 2 || !is_prime_u64(static_cast<std::uint64_t>(v))) {
          all = false;
          break;
        }
      }
      if (all) ++count;
    }
  } else {
    for (std::uint64_t n = 1; n <= x; ++n) {
      bool all = true;
      for (const IntPoly* m : order) {
        BigInt v = m->eval(n);
        if (v < 2) {
          all = false;
          break;
        }
        if (v <= std::numeric_limits<std::uint64_t>::max()) {
          if (!is_prime_u64(static_cast<std::uint64_t>(v))) {
            all = false;
            break;
          }
        } else if (is_prime_big(v, bigint_rounds, seed) == Primality::composite) {
          all = false;
          break;
        }
      }
      if (all) ++count;
    }
  }
  CountReport r;
  r.family = family_str(F.members());
  r.x = x;
  r.count = count;
  r.wall_ms = sw.ms();
  return r;
}

inline CountReport& attach_prediction(CountReport& r, Prediction p) {
  r.ratio = p.predicted > 0 ? std::optional<double>(static_cast<double>(r.count) / p.predicted)
                            : std::nullopt;
  r.prediction = std::move(p);
  return r;
}

// pi_{a,b}(x): primes <= x congruent to b mod a.
inline CountReport count_ap(std::uint64_t a, std::int64_t b, std::uint64_t x) {
  if (a == 0) throw usage_error("count_ap: a must be positive");
  std::uint64_t br = static_cast<std::uint64_t>(((b % static_cast<std::int64_t>(a)) +
                                                 static_cast<std::int64_t>(a)) %
                                                static_cast<std::int64_t>(a));
  if (std::gcd(a, br) != 1) throw inadmissible_error("count_ap: gcd(a, b) != 1");
  detail::Stopwatch sw;
  std::uint64_t count = 0;
  for_each_prime(2, x + 1, [&](std::uint64_t p) {
    if (p % a == br) ++count;
  });
  CountReport r;
  r.family = std::to_string(a) + "*t+" + std::to_string(b);
  r.x = x;
  r.count = count;
  r.wall_ms = sw.ms();
  return r;
}

// pi_Landau(x): primes of the form n^2+1 at most x; equals
// count_Q({t^2+1}, floor(sqrt(x-1))).
inline CountReport count_landau(std::uint64_t x) {
  if (x < 2) throw usage_error("count_landau: x must be >= 2");
  detail::Stopwatch sw;
  std::uint64_t m = isqrt_u64(x - 1);
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= m; ++n)
    if (is_prime_u64(n * n + 1)) ++count;
  CountReport r;
  r.family = "t^2+1";
  r.x = x;
  r.count = count;
  r.wall_ms = sw.ms();
  return r;
}

enum class PairMode { by_bound, by_first_primes };

// pi_k: primes p in range with p+k also prime. In first-N-primes mode the
// range is p <= p_N (the table convention: counts among the first N primes).
inline CountReport count_pairs(std::uint64_t k, PairMode mode, std::uint64_t value,
                               std::uint64_t budget = default_memory_budget()) {
  if (k == 0 || k % 2 != 0) throw usage_error("count_pairs: k must be a positive even integer");
  detail::Stopwatch sw;
  std::uint64_t X = (mode == PairMode::by_first_primes) ? nth_prime(value) : value;
  PrimeRange range = sieve_range(0, X + k + 1, budget);
  std::uint64_t count = 0;
  range.for_each([&](std::uint64_t p) {
    if (p <= X && range.contains(p + k)) ++count;
  });
  CountReport r;
  r.family = "t, t+" + std::to_string(k);
  r.x = value;
  r.count = count;
  r.wall_ms = sw.ms();
  return r;
}

// Sophie Germain primes p <= x (2p+1 also prime); identical to
// count_Q({t, 2t+1}, x) by construction.
inline CountReport count_sophie(std::uint64_t x, std::uint64_t budget = default_memory_budget()) {
  if (x < 2) throw usage_error("count_sophie: x must be >= 2");
  detail::Stopwatch sw;
  PrimeRange range = sieve_range(0, 2 * x + 2, budget);
  std::uint64_t count = 0;
  range.for_each([&](std::uint64_t p) {
    if (p <= x && range.contains(2 * p + 1)) ++count;
  });
  CountReport r;
  r.family = "t, 2*t+1";
  r.x = x;
  r.count = count;
  r.wall_ms = sw.ms();
  return r;
}

enum class ChainKind { first, second };

struct Chain {
  ChainKind kind;
  std::vector<std::uint64_t> elements;
  bool complete = true;  // extension of the last element is composite
};

// All maximal chains (p -> 2p+1 or 2p-1) seeded at primes <= search_bound;
// a prime seeds a chain only if it is not itself an extension, so each
// maximal chain is emitted exactly once.
inline std::vector<Chain> cunningham_chains(ChainKind kind, std::uint64_t search_bound,
                                            std::size_t min_length,
                                            std::uint64_t budget = default_memory_budget()) {
  std::vector<Chain> out;
  PrimeRange range = sieve_range(0, search_bound + 1, budget);
  const std::uint64_t headroom = (std::numeric_limits<std::uint64_t>::max() - 1) / 2;
  range.for_each([&](std::uint64_t p) {
    std::uint64_t pred_num = (kind == ChainKind::first) ? p - 1 : p + 1;
    if (pred_num % 2 == 0) {
      std::uint64_t pred = pred_num / 2;
      if (pred >= 2 && is_prime_u64(pred)) return;  // p is an extension, not a seed
    }
    Chain ch{kind, {p}, true};
    while (true) {
      std::uint64_t last = ch.elements.back();
      if (last > headroom) {
        ch.complete = false;  // extension leaves the 64-bit range
        break;
      }
      std::uint64_t next = (kind == ChainKind::first) ? 2 * last + 1 : 2 * last - 1;
      if (!is_prime_u64(next)) break;
      ch.elements.push_back(next);
    }
    if (ch.elements.size() >= min_length) out.push_back(std::move(ch));
  });
  return out;
}

// Partial Brun sum over twin pairs (p, p+2) with p <= x: both reciprocals of
// each pair, so 1/5 enters twice (once with (3,5), once with (5,7)).
inline double brun_partial(std::uint64_t x, std::uint64_t budget = default_memory_budget()) {
  if (x < 5) throw usage_error("brun_partial: x must be >= 5");
  PrimeRange range = sieve_range(0, x + 3, budget);
  CompensatedSum s;
  range.for_each([&](std::uint64_t p) {
    if (p <= x && range.contains(p + 2)) {
      s.add(1.0 / static_cast<double>(p));
      s.add(1.0 / static_cast<double>(p + 2));
    }
  });
  return s.value();
}

}  // namespace bateman
