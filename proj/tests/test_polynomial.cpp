#include "bateman/polynomial.hpp"

#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace bateman;

TEST_CASE("parse and print") {
  REQUIRE(IntPoly::parse("t^2+t+41").str() == "t^2+t+41");
  REQUIRE(IntPoly::parse("2*t+1").str() == "2*t+1");
  REQUIRE(IntPoly::parse("2t + 1") == IntPoly::parse("2*t+1"));
  REQUIRE(IntPoly::parse("-t^2 - 1").str() == "-t^2-1");
  REQUIRE(IntPoly::parse("4*t^2+4*t-1") == (IntPoly{-1, 4, 4}));
  REQUIRE(IntPoly::parse("t^3-2").degree() == 3);
  REQUIRE(IntPoly::parse("123456789012345678901234567890").coeff(0) ==
          BigInt("123456789012345678901234567890"));
  REQUIRE_THROWS_AS(IntPoly::parse("x^2+1"), usage_error);
  REQUIRE_THROWS_AS(IntPoly::parse(""), usage_error);
}

TEST_CASE("eval") {
  REQUIRE(IntPoly::parse("t^2+1").eval(3) == 10);
  REQUIRE(IntPoly::parse("t^2+t+41").eval(40) == 1681);
  BigInt k100("3682528442873462645493394982418837604455310384084190749577545304142010351973408358318"
              "6615204669729662489042369819157735856565071942567003096738456894166732217128619507514"
              "9379680113340447535104953498545635385597443028681");
  IntPoly f(std::vector<BigInt>{k100, 1, 1});
  REQUIRE(f.eval(1) == k100 + 2);
}

TEST_CASE("family product") {
  REQUIRE(family_product({IntPoly{0, 1}, IntPoly{2, 1}}) == (IntPoly{0, 2, 1}));
  REQUIRE(family_product({IntPoly{0, 1}, IntPoly{1, 2}}) == (IntPoly{0, 1, 2}));
  // pointwise oracle on a triple
  std::vector<IntPoly> trip{IntPoly{0, 1}, IntPoly{6, 1}, IntPoly{14, 1}};
  IntPoly prod = family_product(trip);
  for (long long n = -5; n <= 4; ++n) {
    BigInt expect = 1;
    for (const auto& f : trip) expect *= f.eval(n);
    REQUIRE(prod.eval(n) == expect);
  }
}

TEST_CASE("family product pointwise on random families") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    std::vector<IntPoly> members;
    int k = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < k; ++j) members.push_back(oracles::random_poly(rng, 3, 9));
    IntPoly prod = family_product(members);
    long long n = static_cast<long long>(rng() % 41) - 20;
    BigInt expect = 1;
    for (const auto& f : members) expect *= f.eval(n);
    REQUIRE(prod.eval(n) == expect);
  }
}

TEST_CASE("fixed divisor") {
  REQUIRE(fixed_divisor(IntPoly::parse("t^2+t+2")) == 2);
  REQUIRE(fixed_divisor(IntPoly::parse("t^3-t+3")) == 3);
  REQUIRE(fixed_divisor(IntPoly::parse("t^2+1")) == 1);
}

TEST_CASE("fixed divisor divides every value") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    IntPoly f = oracles::random_poly(rng, 5, 20);
    BigInt d = fixed_divisor(f);
    if (d < 0) d = -d;
    if (d == 0) continue;  // zero polynomial excluded by generator
    for (long long n = -50; n <= 50; n += 7) REQUIRE(f.eval(n) % d == 0);
  }
}

TEST_CASE("vanishing primes") {
  REQUIRE(vanishing_primes(IntPoly{0, -1, 1}) == std::vector<std::uint64_t>{2});  // t(t-1)
  auto dickson = vanishing_primes(IntPoly::parse("t+3") * IntPoly::parse("t+7") * IntPoly::parse("t-1"));
  REQUIRE(std::find(dickson.begin(), dickson.end(), 3) != dickson.end());
  REQUIRE(vanishing_primes(IntPoly::parse("t^2+1")).empty());
}

TEST_CASE("vanishing primes equal the brute-force residue check") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    IntPoly f = oracles::random_poly(rng, 5, 30);
    auto vp = vanishing_primes(f);
    // oracle: p vanishes iff all residues are roots
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
      bool vanishes = oracles::omega_by_scan(f, p) == p;
      bool listed = std::find(vp.begin(), vp.end(), p) != vp.end();
      REQUIRE(vanishes == listed);
    }
  }
}

TEST_CASE("irreducibility reference cases") {
  REQUIRE(irreducibility(IntPoly::parse("t^2+1")).status == IrredStatus::irreducible);
  auto red = irreducibility(IntPoly::parse("t^2-1"));
  REQUIRE(red.status == IrredStatus::reducible);
  REQUIRE(red.witness.has_value());
  REQUIRE((*red.witness == IntPoly{-1, 1} || *red.witness == IntPoly{1, 1}));
  REQUIRE(irreducibility(IntPoly::parse("t^3-2")).status == IrredStatus::irreducible);
  REQUIRE(irreducibility(IntPoly::parse("t^3-t+3")).status == IrredStatus::irreducible);
  REQUIRE(irreducibility(IntPoly::parse("4*t^2+12*t+5")).status == IrredStatus::reducible);
  REQUIRE(irreducibility(IntPoly::parse("4*t^2+4*t-1")).status == IrredStatus::irreducible);
  REQUIRE_THROWS_AS(irreducibility(IntPoly{7}), usage_error);
  // big-coefficient quadratic: discriminant route, no divisor enumeration
  BigInt k100("3682528442873462645493394982418837604455310384084190749577545304142010351973408358318"
              "6615204669729662489042369819157735856565071942567003096738456894166732217128619507514"
              "9379680113340447535104953498545635385597443028681");
  REQUIRE(irreducibility(IntPoly(std::vector<BigInt>{k100, 1, 1})).status == IrredStatus::irreducible);
}

TEST_CASE("irreducibility is sound on integer roots") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long long> root(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    // build (t - r) * g with a random cofactor; must never be called irreducible
    long long r = root(rng);
    IntPoly g = oracles::random_poly(rng, 2, 50);
    if (g.degree() < 1) continue;
    IntPoly f = g * IntPoly{-r, 1};
    REQUIRE(irreducibility(f).status != IrredStatus::irreducible);
  }
}

TEST_CASE("irreducibility of witnessed factors") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    IntPoly f = oracles::random_poly(rng, 3, 40);
    if (f.degree() < 2) continue;
    auto v = irreducibility(f);
    if (v.status == IrredStatus::reducible && v.witness) {
      // a witness divides: resultant(f, witness) == 0
      REQUIRE(resultant(f, *v.witness) == 0);
    }
  }
}

TEST_CASE("resultant reference cases") {
  REQUIRE(resultant(IntPoly{0, 1}, IntPoly{2, 1}) == 2);
  REQUIRE(resultant(IntPoly{0, 1}, IntPoly{1, 2}) == oracles::sylvester_resultant(IntPoly{0, 1}, IntPoly{1, 2}));
  REQUIRE(resultant(IntPoly{0, 1}, IntPoly{1, 2}) == 1);
  REQUIRE(resultant(IntPoly{-1, 1}, IntPoly{-1, 1}) == 0);
}

TEST_CASE("resultant equals the Sylvester determinant") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    IntPoly f = oracles::random_poly(rng, 4, 12);
    IntPoly g = oracles::random_poly(rng, 4, 12);
    if (f.degree() < 0 || g.degree() < 0) continue;
    REQUIRE(resultant(f, g) == oracles::sylvester_resultant(f, g));
  }
}

TEST_CASE("resultant zero iff rational gcd nonconstant") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    IntPoly a = oracles::random_poly(rng, 2, 8);
    IntPoly b = oracles::random_poly(rng, 2, 8);
    IntPoly c = oracles::random_poly(rng, 2, 8);
    if (a.degree() < 1) continue;
    // f = a*b and g = a*c share the factor a
    REQUIRE(resultant(a * b, a * c) == 0);
  }
  for (int i = 0; i < 200; ++i) {
    IntPoly f = oracles::random_poly(rng, 3, 10);
    IntPoly g = oracles::random_poly(rng, 3, 10);
    if (f.degree() < 1 || g.degree() < 1) continue;
    bool rz = resultant(f, g) == 0;
    bool shared = oracles::rational_gcd_degree(f, g) >= 1;
    REQUIRE(rz == shared);
  }
}

TEST_CASE("discriminant") {
  REQUIRE(discriminant_quadratic(IntPoly::parse("t^2+t+41")) == -163);
  REQUIRE(discriminant_quadratic(IntPoly::parse("4*t^2+4*t-1")) == 32);
  REQUIRE(discriminant_quadratic(IntPoly::parse("4*t^2-2*t+3")) == -44);
  REQUIRE_THROWS_AS(discriminant_quadratic(IntPoly::parse("t^3-2")), usage_error);
}

TEST_CASE("check_family verdicts") {
  auto twins = check_family({IntPoly{0, 1}, IntPoly{2, 1}});
  REQUIRE(twins.report().admissible());
  REQUIRE(twins.pair_resultants().at({0, 1}) == 2);

  auto consec = check_family({IntPoly{0, 1}, IntPoly{1, 1}});
  REQUIRE_FALSE(consec.report().admissible());
  REQUIRE(consec.report().vanishing == std::vector<std::uint64_t>{2});
  REQUIRE_THROWS_AS(consec.require_admissible(false), inadmissible_error);
  REQUIRE_NOTHROW(consec.require_admissible(true));

  auto sq = check_family({IntPoly::parse("t^2-1")});
  REQUIRE_FALSE(sq.report().admissible());
  REQUIRE(sq.report().members[0].irred.status == IrredStatus::reducible);

  REQUIRE_THROWS_AS(check_family({IntPoly{0, 1}, IntPoly{0, 1}}), usage_error);
  REQUIRE_THROWS_AS(check_family({IntPoly{}}), usage_error);

  // scalar multiples warn but do not reject
  auto warned = check_family({IntPoly{1, 1}, IntPoly{2, 2}});
  REQUIRE_FALSE(warned.report().warnings.empty());
}

TEST_CASE("parse_family") {
  auto F = parse_family("t, 2*t+1");
  REQUIRE(F.k() == 2);
  REQUIRE(F.product() == (IntPoly{0, 1, 2}));
  REQUIRE(F.degree_product() == 1);
}
