#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bateman/rootcount.hpp"

namespace bateman {

enum class Verdict { converging, diverging_to_zero_suspected, diverging_suspected };

inline const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::converging: return "converging";
    case Verdict::diverging_to_zero_suspected: return "diverging-to-zero-suspected";
    default: return "diverging-suspected";
  }
}

struct Checkpoint {
  std::uint64_t bound;
  double value;
};

struct ConstantEstimate {
  std::string family;
  int k = 1;
  std::uint64_t prime_bound = 0;
  double value = 0.0;
  std::vector<Checkpoint> checkpoints;
  std::optional<Verdict> verdict;
  std::optional<double> tail_bound;  // absolutely convergent forms only
};

// Evidence-only classification of a checkpoint trace; convergence of the
// underlying series is not numerically decidable, so this reports suspicion,
// never proof. Uses the last three inter-checkpoint steps.
inline Verdict divergence_diagnostic(const std::vector<Checkpoint>& cps,
                                     double zero_drop_threshold = 0.05,
                                     double converged_delta = 1e-2) {
  if (cps.size() < 4 || cps.front().bound == 0 || cps.back().bound / cps.front().bound < 1000)
    throw usage_error("divergence_diagnostic: need >= 4 checkpoints spanning >= 3 decades");
  std::vector<double> d;
  for (std::size_t i = 0; i + 1 < cps.size(); ++i)
    d.push_back(std::log(cps[i + 1].value) - std::log(cps[i].value));
  double d1 = d[d.size() - 3], d2 = d[d.size() - 2], d3 = d[d.size() - 1];
  if (d1 < -zero_drop_threshold && d2 < -zero_drop_threshold && d3 < -zero_drop_threshold)
    return Verdict::diverging_to_zero_suspected;
  if (std::abs(d1) >= std::abs(d2) && std::abs(d2) >= std::abs(d3) &&
      std::abs(d3) < converged_delta)
    return Verdict::converging;
  return Verdict::diverging_suspected;
}

inline std::vector<std::uint64_t> decade_schedule(std::uint64_t bound) {
  std::vector<std::uint64_t> s;
  for (std::uint64_t b = 1000; b < bound; b *= 10) s.push_back(b);
  return s;
}

// Partial product of (1 - 1/p)^-k (1 - omega(p)/p) over primes p <= bound in
// strictly ascending order, accumulated as a compensated sum of logarithms.
// The product converges only conditionally, so the order is part of the
// contract, not an implementation detail.
inline ConstantEstimate bh_constant(const PolyFamily& F, std::uint64_t prime_bound,
                                    std::vector<std::uint64_t> schedule = {},
                                    bool override_admissibility = false) {
  if (prime_bound < 2) throw usage_error("bh_constant: prime bound must be >= 2");
  F.require_admissible(override_admissibility);
  if (schedule.empty()) schedule = decade_schedule(prime_bound);
  std::sort(schedule.begin(), schedule.end());
  schedule.erase(std::unique(schedule.begin(), schedule.end()), schedule.end());
  while (!schedule.empty() && schedule.back() >= prime_bound) schedule.pop_back();

  const int k = F.k();
  ConstantEstimate est;
  est.family = family_str(F.members());
  est.k = k;
  est.prime_bound = prime_bound;

  CompensatedSum logsum;
  std::size_t si = 0;
  for_each_prime(2, prime_bound + 1, [&](std::uint64_t p) {
    while (si < schedule.size() && schedule[si] < p) {
      est.checkpoints.push_back({schedule[si], std::exp(logsum.value())});
      ++si;
    }
    std::uint64_t w = omega_family(F, p);
    if (w >= p)
      throw inadmissible_error("bh_constant: omega(" + std::to_string(p) + ") = " +
                               std::to_string(p) + ", zero factor (family vanishes mod " +
                               std::to_string(p) + ")");
    double pd = static_cast<double>(p);
    logsum.add(-k * std::log1p(-1.0 / pd) + std::log1p(-static_cast<double>(w) / pd));
  });
  while (si < schedule.size()) {
    est.checkpoints.push_back({schedule[si], std::exp(logsum.value())});
    ++si;
  }
  est.value = std::exp(logsum.value());
  est.checkpoints.push_back({prime_bound, est.value});
  if (est.checkpoints.size() >= 4 &&
      est.checkpoints.back().bound / est.checkpoints.front().bound >= 1000)
    est.verdict = divergence_diagnostic(est.checkpoints);
  return est;
}

// --- closed-form specializations ---

// Linear at+b with gcd(a,b)=1: the product collapses to a/phi(a), exactly.
struct ApConstant {
  std::uint64_t a = 1;
  std::uint64_t phi = 1;
  BigRational exact = 1;
  double value = 1.0;
};

inline ApConstant ap_constant(std::uint64_t a, std::int64_t b) {
  if (a == 0) throw usage_error("ap_constant: a must be positive");
  std::uint64_t br = static_cast<std::uint64_t>(((b % static_cast<std::int64_t>(a)) +
                                                 static_cast<std::int64_t>(a)) %
                                                static_cast<std::int64_t>(a));
  if (std::gcd(a, br) != 1)
    throw inadmissible_error("ap_constant: gcd(a, b) != 1, at+b is prime for at most one t");
  ApConstant r;
  r.a = a;
  r.phi = totient(a);
  r.exact = BigRational(a, r.phi);
  r.value = static_cast<double>(a) / static_cast<double>(r.phi);
  return r;
}

// One odd-prime factor of the C_k product, in log space:
// p/(p-1) when p | k, else p(p-2)/(p-1)^2 = 1 - 1/(p-1)^2.
inline double ck_log_factor(std::uint64_t p, std::uint64_t k) {
  double pd = static_cast<double>(p);
  if (k % p == 0) return std::log(pd / (pd - 1.0));
  return std::log1p(-1.0 / ((pd - 1.0) * (pd - 1.0)));
}

// Prime-pair constant C_k (even k), an absolutely convergent product:
// prod_{p|k,p>=3} p/(p-1) * prod_{p notdiv k} p(p-2)/(p-1)^2.
inline ConstantEstimate ck_constant(std::uint64_t k, std::uint64_t prime_bound) {
  if (k == 0 || k % 2 != 0)
    throw usage_error("ck_constant: k must be a positive even integer (odd k admits at most one pair)");
  if (prime_bound < 3) throw usage_error("ck_constant: prime bound too small");
  CompensatedSum logsum;
  for_each_prime(3, prime_bound + 1, [&](std::uint64_t p) { logsum.add(ck_log_factor(p, k)); });
  ConstantEstimate est;
  est.family = "C_" + std::to_string(k);
  est.k = 2;
  est.prime_bound = prime_bound;
  est.value = std::exp(logsum.value());
  // |log tail| <= sum_{p>B} 1.2/(p-1)^2 <= 2/(B-1)
  est.tail_bound = est.value * std::expm1(2.0 / static_cast<double>(prime_bound - 1));
  return est;
}

struct HlfConstant {
  double epsilon = 1.0;
  double value = 0.0;
};

// Hardy-Littlewood conjecture F constant for at^2+bt+c:
//   2 eps * prod_{p>=3, p | gcd(a,b)} p/(p-1) * prod_{p>=3, p notdiv a} (1 - (Delta/p)/(p-1)).
// Agrees with bh_constant on {at^2+bt+c} at equal bound.
inline HlfConstant hlf_constant(const BigInt& a, const BigInt& b, const BigInt& c,
                                std::uint64_t prime_bound) {
  using boost::multiprecision::gcd;
  if (a <= 0) throw usage_error("hlf_constant: a must be positive");
  if (gcd(gcd(a, b), c) != 1)
    throw inadmissible_error("hlf_constant: gcd violation, gcd(a,b,c) != 1");
  if ((a + b) % 2 == 0 && c % 2 == 0)
    throw inadmissible_error("hlf_constant: parity violation, a+b and c both even");
  BigInt delta = b * b - 4 * a * c;
  if (is_perfect_square(delta))
    throw inadmissible_error("hlf_constant: perfect-square discriminant, polynomial is reducible");
  HlfConstant r;
  r.epsilon = ((a + b) % 2 != 0) ? 0.5 : 1.0;
  BigInt gab = gcd(a, b);
  if (gab < 0) gab = -gab;
  CompensatedSum logsum;
  logsum.add(std::log(2.0 * r.epsilon));
  for_each_prime(3, prime_bound + 1, [&](std::uint64_t p) {
    double pd = static_cast<double>(p);
    if (mod_u64(a, p) == 0) {
      if (mod_u64(gab, p) == 0) logsum.add(std::log(pd / (pd - 1.0)));
      return;
    }
    int chi = jacobi(delta, p);
    if (chi != 0) logsum.add(std::log1p(-static_cast<double>(chi) / (pd - 1.0)));
  });
  r.value = std::exp(logsum.value());
  return r;
}

inline BigInt primorial(unsigned k) {
  BigInt r = 1;
  unsigned seen = 0;
  for (std::uint64_t p = 2; seen < k; ++p)
    if (is_prime_u64(p)) {
      r *= p;
      ++seen;
    }
  return r;
}

// Constant for the k-term progression family t, t+a, ..., t+(k-1)a with
// a = p_k# (product of the first k primes):
//   prod_{n<=k} (1-1/p_n)^(-k+1) * prod_{p>p_k} (1-1/p)^(-k) (1-k/p).
inline double greentao_constant(unsigned k, std::uint64_t prime_bound) {
  if (k == 0) throw usage_error("greentao_constant: k must be >= 1");
  std::uint64_t pk = nth_prime(k);
  if (pk > prime_bound) throw usage_error("greentao_constant: prime bound below p_k");
  CompensatedSum logsum;
  double kd = static_cast<double>(k);
  for_each_prime(2, prime_bound + 1, [&](std::uint64_t p) {
    double pd = static_cast<double>(p);
    if (p <= pk)
      logsum.add(-(kd - 1.0) * std::log1p(-1.0 / pd));
    else
      logsum.add(-kd * std::log1p(-1.0 / pd) + std::log1p(-kd / pd));
  });
  return std::exp(logsum.value());
}

}  // namespace bateman
