#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bateman/rootcount.hpp"

namespace bateman {

// Smallest g >= 2 generating (Z/pZ)*; checked against the prime
// factorization of p-1.
inline std::uint64_t least_primitive_root(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    throw usage_error("least_primitive_root: need an odd prime");
  auto factors = factorize_u64(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (auto [q, e] : factors) {
      if (powmod_u64(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

// Smallest r >= 2 with (r/p) = -1.
inline std::uint64_t least_nonresidue(std::uint64_t p) {
  for (std::uint64_t r = 2;; ++r)
    if (jacobi(static_cast<std::int64_t>(r), p) == -1) return r;
}

enum class NonresidueRule { least_primitive_root, least_nonresidue, explicit_list };

// CRT data for t^2+t+k with omega(p) = 0 at 2 and every plan prime:
// k odd and 1-4k = r_p (a nonresidue) mod p.
struct CrtPlan {
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> nonresidues;
  BigInt modulus = 2;  // 2 * prod primes
  BigInt k = 1;        // least positive solution
};

inline std::vector<std::uint64_t> first_odd_primes(std::size_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; out.size() < m; p += 2)
    if (is_prime_u64(p)) out.push_back(p);
  return out;
}

inline std::vector<std::uint64_t> odd_primes_through(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for_each_prime(3, bound + 1, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

// Least positive odd k with k = 4^{-1}(1 - r_p) mod p for every plan prime.
// 4^{-1} mod p is (p+1)/4 or (3p+1)/4 by the residue of p mod 4.
inline CrtPlan build_plan(const std::vector<std::uint64_t>& odd_primes, NonresidueRule rule,
                          const std::vector<std::uint64_t>& explicit_residues = {}) {
  if (odd_primes.empty()) throw usage_error("build_plan: no primes given");
  if (rule == NonresidueRule::explicit_list && explicit_residues.size() != odd_primes.size())
    throw usage_error("build_plan: explicit residue list length mismatch");
  CrtPlan plan;
  plan.primes = odd_primes;
  plan.k = 1;
  plan.modulus = 2;
  for (std::size_t i = 0; i < odd_primes.size(); ++i) {
    std::uint64_t p = odd_primes[i];
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
      throw usage_error("build_plan: " + std::to_string(p) + " is not an odd prime");
    std::uint64_t r;
    switch (rule) {
      case NonresidueRule::least_primitive_root: r = least_primitive_root(p); break;
      case NonresidueRule::least_nonresidue: r = least_nonresidue(p); break;
      default: r = explicit_residues[i] % p;
    }
    if (jacobi(static_cast<std::int64_t>(r % p), p) != -1)
      throw inadmissible_error("build_plan: residue " + std::to_string(r) +
                               " is not a quadratic nonresidue mod " + std::to_string(p));
    plan.nonresidues.push_back(r);
    std::uint64_t inv4 = (p % 4 == 3) ? (p + 1) / 4 : (3 * p + 1) / 4;
    std::uint64_t rem = mulmod_u64((p + 1 - r % p) % p, inv4, p);  // 4^{-1}(1-r) mod p
    // combine k (mod modulus) with rem (mod p)
    std::uint64_t kp = mod_u64(plan.k, p);
    std::uint64_t delta = (rem + p - kp) % p;
    std::uint64_t minv = powmod_u64(mod_u64(plan.modulus, p), p - 2, p);
    plan.k += plan.modulus * mulmod_u64(delta, minv, p);
    plan.modulus *= p;
  }
  return plan;
}

inline IntPoly plan_polynomial(const CrtPlan& plan) {
  return IntPoly(std::vector<BigInt>{plan.k, 1, 1});  // t^2 + t + k
}

// True iff omega_{t^2+t+k}(p) = 0 for 2 and every plan prime, and the
// residue construction holds literally (1-4k a nonresidue mod each p).
inline bool verify_plan(const CrtPlan& plan) {
  IntPoly f = plan_polynomial(plan);
  if (omega_bruteforce(f, 2) != 0) return false;
  BigInt disc = 1 - 4 * plan.k;
  for (std::uint64_t p : plan.primes) {
    if (omega_quadratic(f, p) != 0) return false;
    if (jacobi(disc, p) != -1) return false;
  }
  return true;
}

// Largest m with t^2+t+k prime (probable-prime beyond 64 bits) for all
// t = 0..m-1.
inline std::uint64_t euler_streak(const BigInt& k, unsigned rounds = 40,
                                  std::uint64_t seed = kDefaultWitnessSeed) {
  if (k < 1) throw usage_error("euler_streak: k must be >= 1");
  std::uint64_t t = 0;
  while (true) {
    BigInt v = BigInt(t) * t + t + k;
    if (!is_probable_prime(v, rounds, seed)) return t;
    ++t;
  }
}

}  // namespace bateman
