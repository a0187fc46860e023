#include "bateman/eulersearch.hpp"

#include <set>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace bateman;

TEST_CASE("least primitive root") {
  REQUIRE(least_primitive_root(3) == 2);
  REQUIRE(least_primitive_root(7) == 3);
  REQUIRE(least_primitive_root(23) == 5);
  // the footnote list for the primes 3..37
  std::vector<std::uint64_t> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::vector<std::uint64_t> roots{2, 2, 3, 2, 2, 3, 2, 5, 2, 3, 2};
  for (std::size_t i = 0; i < primes.size(); ++i)
    REQUIRE(least_primitive_root(primes[i]) == roots[i]);
  REQUIRE_THROWS_AS(least_primitive_root(8), usage_error);
  // oracle: the returned g has full order
  for (std::uint64_t p : primes) {
    std::uint64_t g = least_primitive_root(p);
    std::set<std::uint64_t> powers;
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i + 1 < p; ++i) {
      v = v * g % p;
      powers.insert(v);
    }
    REQUIRE(powers.size() == p - 1);
  }
}

TEST_CASE("build_plan k37") {
  auto plan = build_plan(odd_primes_through(37), NonresidueRule::least_primitive_root);
  REQUIRE(plan.primes.size() == 11);
  REQUIRE(plan.k == BigInt("1448243016041"));
  REQUIRE(verify_plan(plan));
}

TEST_CASE("build_plan single prime exhaustive oracle") {
  // least odd k with 1 - 4k a nonresidue (= 2) mod 3, by exhaustive search
  std::uint64_t expect = 0;
  for (std::uint64_t k = 1;; k += 2) {
    std::uint64_t r = ((1 + 3 * 4 * k) - 4 * k) % 3;  // (1 - 4k) mod 3
    if (r == 2) {
      expect = k;
      break;
    }
  }
  REQUIRE(expect == 5);
  auto plan = build_plan({3}, NonresidueRule::explicit_list, {2});
  REQUIRE(plan.k == expect);
  REQUIRE(plan.modulus == 6);
}

TEST_CASE("build_plan rejects residues") {
  // 1 is a quadratic residue mod every prime
  REQUIRE_THROWS_AS(build_plan({5}, NonresidueRule::explicit_list, {1}), inadmissible_error);
  try {
    build_plan({3, 5, 7}, NonresidueRule::explicit_list, {2, 4, 3});
    FAIL("expected rejection");
  } catch (const inadmissible_error& e) {
    REQUIRE(std::string(e.what()).find("5") != std::string::npos);  // 4 is a square mod 5
  }
}

TEST_CASE("plan solution uniqueness") {
  auto plan = build_plan(odd_primes_through(13), NonresidueRule::least_primitive_root);
  REQUIRE(plan.k > 0);
  REQUIRE(plan.k < plan.modulus);
  // any second solution differs by a multiple of the modulus: adding the
  // modulus preserves every congruence
  IntPoly f(std::vector<BigInt>{plan.k + plan.modulus, 1, 1});
  for (std::uint64_t p : plan.primes) REQUIRE(omega_quadratic(f, p) == 0);
  // nonresidue invariant, literally restated
  for (std::uint64_t p : plan.primes) REQUIRE(jacobi(BigInt(1 - 4 * plan.k), p) == -1);
}

TEST_CASE("verify_plan detects corruption") {
  auto plan = build_plan(odd_primes_through(37), NonresidueRule::least_primitive_root);
  REQUIRE(verify_plan(plan));
  CrtPlan bad = plan;
  bad.k += 2;
  REQUIRE_FALSE(verify_plan(bad));
}

TEST_CASE("least nonresidue rule") {
  auto plan = build_plan(odd_primes_through(13), NonresidueRule::least_nonresidue);
  REQUIRE(verify_plan(plan));
  for (std::size_t i = 0; i < plan.primes.size(); ++i) {
    // minimality: nothing below r is a nonresidue
    for (std::uint64_t r = 2; r < plan.nonresidues[i]; ++r)
      REQUIRE(jacobi(static_cast<std::int64_t>(r), plan.primes[i]) != -1);
  }
}

TEST_CASE("euler streaks") {
  REQUIRE(euler_streak(41) == 40);
  REQUIRE(euler_streak(2) == 1);
  REQUIRE(euler_streak(17) == 16);
  REQUIRE_THROWS_AS(euler_streak(0), usage_error);
}

TEST_CASE("k100 plan: the printed digit block is the 99-odd-prime solution") {
  // The published 219-digit value corresponds to the odd primes strictly
  // below 547 (the first 99), least positive representative.
  const std::string block =
      "368252844287346264549339498241883760445531038408419074957754530414201035197340835831866"
      "152046697296624890423698191577358565650719425670030967384568941667322171286195075149379"
      "680113340447535104953498545635385597443028681";
  auto plan99 = build_plan(first_odd_primes(99), NonresidueRule::least_primitive_root);
  REQUIRE(plan99.primes.back() == 541);
  REQUIRE(plan99.k.str() == block);
  REQUIRE(verify_plan(plan99));
  // and the value still has omega(547) = 0, although 547 was not in the plan
  IntPoly f = plan_polynomial(plan99);
  REQUIRE(omega_quadratic(f, 547) == 0);
  // the literal 100-odd-prime plan exists and verifies, but yields a
  // different (222-digit) representative
  auto plan100 = build_plan(first_odd_primes(100), NonresidueRule::least_primitive_root);
  REQUIRE(plan100.primes.back() == 547);
  REQUIRE(verify_plan(plan100));
  REQUIRE(plan100.k.str() != block);
  REQUIRE(plan100.k.str().size() == 222);
}
