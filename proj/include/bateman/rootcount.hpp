#pragma once

#include <cstdint>
#include <map>

#include "bateman/polynomial.hpp"

namespace bateman {

inline constexpr std::uint64_t kOmegaBruteCutoff = 10000;

// omega_f(p): solutions of f(x) = 0 mod p, distinct residues, never
// multiplicity. Brute force over all residues; the oracle for everything else.
inline std::uint64_t omega_bruteforce(const IntPoly& f, std::uint64_t p,
                                      std::uint64_t cutoff = kOmegaBruteCutoff) {
  if (p > cutoff) throw usage_error("omega_bruteforce: prime exceeds cutoff");
  auto fp = f.reduce_mod(p);
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (auto it = fp.rbegin(); it != fp.rend(); ++it) acc = (mulmod_u64(acc, x, p) + *it) % p;
    if (acc == 0) ++count;
  }
  return count;
}

// Quadratic closed form: for odd p not dividing the leading coefficient,
// completing the square gives omega = 1 + (Delta/p).
inline std::uint64_t omega_quadratic(const IntPoly& f, std::uint64_t p) {
  if (f.degree() != 2) throw usage_error("omega_quadratic: degree must be 2");
  if (p == 2 || mod_u64(f.leading(), p) == 0) {
    // degree drops (or p = 2): count the reduced polynomial's roots directly
    auto fp = f.reduce_mod(p);
    if (fp.empty()) throw inadmissible_error("omega_quadratic: vanishes identically mod " + std::to_string(p));
    if (p <= kOmegaBruteCutoff) return omega_bruteforce(f, p);
    if (polymod::degree(fp) == 0) return 0;
    return polymod::distinct_roots(fp, p);
  }
  BigInt delta = discriminant_quadratic(f);
  int chi = jacobi(delta, p);
  return static_cast<std::uint64_t>(1 + chi);
}

// Distinct-root count over F_p for any degree: deg gcd(x^p - x, f mod p).
inline std::uint64_t omega_generic(const IntPoly& f, std::uint64_t p) {
  auto fp = f.reduce_mod(p);
  if (fp.empty())
    throw inadmissible_error("omega_generic: polynomial vanishes identically mod " + std::to_string(p));
  if (polymod::degree(fp) == 0) return 0;
  return static_cast<std::uint64_t>(polymod::distinct_roots(fp, p));
}

namespace detail {

// Cheapest exact method for one member; degree has already dropped checks
// inside each routine.
inline std::uint64_t omega_member(const IntPoly& f, std::uint64_t p) {
  switch (f.degree()) {
    case 1: {
      std::uint64_t a = mod_u64(f.leading(), p);
      if (a != 0) return 1;
      return mod_u64(f.coeff(0), p) == 0 ? p  /* vanishes */ : 0;
    }
    case 2:
      return omega_quadratic(f, p);
    default:
      return omega_generic(f, p);
  }
}

}  // namespace detail

// Family count. Away from the exceptional primes (pairwise resultants,
// leading coefficients) the members share no roots mod p and the count is
// the sum of member counts; on the exceptional set the product polynomial
// is counted directly.
inline std::uint64_t omega_family(const PolyFamily& F, std::uint64_t p) {
  if (!F.exceptional(p)) {
    std::uint64_t total = 0;
    for (const auto& m : F.members()) total += detail::omega_member(m, p);
    return total;
  }
  return omega_generic(F.product(), p);
}

// Method tags for profile entries.
enum class OmegaMethod { brute, quadratic, generic, family_sum };

struct OmegaProfile {
  std::string family;
  std::map<std::uint64_t, std::pair<std::uint64_t, OmegaMethod>> small;  // p -> (omega, method)
  std::vector<std::uint64_t> exceptional;
};

inline OmegaProfile build_omega_profile(const PolyFamily& F, std::uint64_t cutoff) {
  OmegaProfile prof;
  prof.family = family_str(F.members());
  for_each_prime(2, cutoff + 1, [&](std::uint64_t p) {
    if (F.exceptional(p)) {
      prof.exceptional.push_back(p);
      prof.small[p] = {omega_generic(F.product(), p), OmegaMethod::generic};
    } else if (F.k() == 1) {
      const IntPoly& f = F.members().front();
      if (f.degree() == 2)
        prof.small[p] = {omega_quadratic(f, p), OmegaMethod::quadratic};
      else
        prof.small[p] = {detail::omega_member(f, p), OmegaMethod::generic};
    } else {
      prof.small[p] = {omega_family(F, p), OmegaMethod::family_sum};
    }
  });
  return prof;
}

}  // namespace bateman
