#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bateman/bigint.hpp"
#include "bateman/common.hpp"
#include "bateman/polymod.hpp"
#include "bateman/primes.hpp"

namespace bateman {

// Univariate integer polynomial in t, constant term first.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) c_.emplace_back(c);
    trim();
  }
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly parse(std::string_view text);
  std::string str() const;

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const BigInt& coeff(std::size_t i) const {
    static const BigInt zero = 0;
    return i < c_.size() ? c_[i] : zero;
  }
  const std::vector<BigInt>& coeffs() const { return c_; }
  const BigInt& leading() const { return c_.back(); }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  BigInt eval(const BigInt& n) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * n + *it;
    return acc;
  }

  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
    return g;  // 0 for the zero polynomial, else positive
  }

  // Content removed, leading coefficient made positive.
  IntPoly primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    if (leading() < 0) g = -g;
    std::vector<BigInt> r = c_;
    for (auto& c : r) c /= g;
    return IntPoly(std::move(r));
  }

  polymod::Poly reduce_mod(std::uint64_t p) const {
    polymod::Poly r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mod_u64(c_[i], p);
    polymod::trim(r);
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

// --- text format: integer coefficients in t, e.g. "t^2+t+41", "2*t+1" ---

inline IntPoly IntPoly::parse(std::string_view text) {
  std::map<unsigned, BigInt> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_uint = [&]() -> BigInt {
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    if (digits.empty()) throw usage_error("polynomial parse: expected a number in '" + std::string(text) + "'");
    return BigInt(digits);
  };
  skip_ws();
  if (i == text.size()) throw usage_error("polynomial parse: empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw usage_error("polynomial parse: expected '+' or '-' near position " + std::to_string(i));
    }
    first = false;
    BigInt coef = 1;
    bool saw_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = parse_uint();
      saw_coef = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    unsigned exp = 0;
    if (i < text.size() && (text[i] == 't' || text[i] == 'T')) {
      ++i;
      exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        BigInt e = parse_uint();
        if (e > 64) throw usage_error("polynomial parse: exponent too large");
        exp = static_cast<unsigned>(e);
      }
    } else if (!saw_coef) {
      throw usage_error("polynomial parse: expected coefficient or 't' near position " + std::to_string(i));
    }
    terms[exp] += sign * coef;
  }
  std::vector<BigInt> c(terms.empty() ? 0 : terms.rbegin()->first + 1, BigInt(0));
  for (auto& [e, v] : terms) c[e] = v;
  return IntPoly(std::move(c));
}

inline std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeff(k);
    if (c == 0) continue;
    BigInt a = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? '-' : '+');
    }
    if (k == 0) {
      out << a.str();
    } else {
      if (a != 1) out << a.str() << '*';
      out << 't';
      if (k >= 2) out << '^' << k;
    }
  }
  return out.str();
}

inline std::string family_str(const std::vector<IntPoly>& members) {
  std::string s;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ", ";
    s += members[i].str();
  }
  return s;
}

inline IntPoly family_product(const std::vector<IntPoly>& members) {
  if (members.empty()) throw usage_error("family_product: need at least one member");
  IntPoly prod{1};
  for (const auto& f : members) prod = prod * f;
  return prod;
}

// gcd of f(0), ..., f(deg f); by the finite-difference basis this equals the
// gcd of f over all integer arguments.
inline BigInt fixed_divisor(const IntPoly& f) {
  if (f.is_zero()) throw usage_error("fixed_divisor: zero polynomial");
  BigInt g = 0;
  for (int n = 0; n <= f.degree(); ++n) g = boost::multiprecision::gcd(g, f.eval(n));
  return g;
}

// Primes p such that f vanishes identically mod p = prime divisors of the
// fixed divisor.
inline std::vector<std::uint64_t> vanishing_primes(const IntPoly& f) {
  BigInt d = fixed_divisor(f);
  if (d < 0) d = -d;
  std::vector<std::uint64_t> out;
  if (d <= 1) return out;
  if (d <= std::numeric_limits<std::uint64_t>::max()) {
    for (auto [p, e] : factorize_u64(static_cast<std::uint64_t>(d))) out.push_back(p);
    return out;
  }
  for (std::uint64_t p = 2; p <= 1000000; p = (p == 2 ? 3 : p + 2)) {
    if (!is_prime_u64(p)) continue;
    if (d % p == 0) {
      out.push_back(p);
      while (d % p == 0) d /= p;
    }
    if (d == 1) break;
  }
  if (d > 1) {
    if (d <= std::numeric_limits<std::uint64_t>::max()) {
      for (auto [p, e] : factorize_u64(static_cast<std::uint64_t>(d))) out.push_back(p);
    } else {
      throw usage_error("vanishing_primes: fixed divisor has a factor beyond 64-bit scope");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- irreducibility over Z (three-valued) ---

enum class IrredStatus { irreducible, reducible, unknown };

struct IrredVerdict {
  IrredStatus status = IrredStatus::unknown;
  std::optional<IntPoly> witness;  // a proper factor, when reducible
  std::string note;
};

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// Integer roots of a monic polynomial of degree 2 or 3 (exact for any
// coefficient size; bisection on the monotone pieces).
inline std::vector<BigInt> integer_roots_monic(const std::vector<BigInt>& c) {
  std::vector<BigInt> roots;
  int d = static_cast<int>(c.size()) - 1;
  auto eval = [&](const BigInt& y) {
    BigInt acc = 0;
    for (int i = d; i >= 0; --i) acc = acc * y + c[i];
    return acc;
  };
  auto push_if_root = [&](const BigInt& y) {
    if (eval(y) == 0) {
      for (const auto& r : roots)
        if (r == y) return;
      roots.push_back(y);
    }
  };
  if (d == 1) {
    push_if_root(-c[0]);
    return roots;
  }
  if (d == 2) {
    BigInt disc = c[1] * c[1] - 4 * c[0], s;
    if (is_perfect_square(disc, &s)) {
      if ((-c[1] + s) % 2 == 0) push_if_root((-c[1] + s) / 2);
      if ((-c[1] - s) % 2 == 0) push_if_root((-c[1] - s) / 2);
    }
    return roots;
  }
  // cubic: split at the critical points of 3y^2 + 2*c2*y + c1
  BigInt H = 1;
  for (int i = 0; i < d; ++i) {
    BigInt a = c[i] < 0 ? BigInt(-c[i]) : c[i];
    if (a > H) H = a;
  }
  H += 1;
  std::vector<BigInt> breaks{-H, H};
  BigInt disc = 4 * c[2] * c[2] - 12 * c[1];
  if (disc > 0) {
    BigInt s = boost::multiprecision::sqrt(disc);
    breaks.push_back(floor_div(-2 * c[2] - s, BigInt(6)));
    breaks.push_back(floor_div(-2 * c[2] + s, BigInt(6)));
    std::sort(breaks.begin(), breaks.end());
  }
  for (const auto& b : breaks)
    for (int off = -2; off <= 2; ++off) push_if_root(b + off);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    BigInt lo = breaks[i], hi = breaks[i + 1];
    BigInt flo = eval(lo), fhi = eval(hi);
    if (flo == 0 || fhi == 0) continue;  // already collected
    if ((flo < 0) == (fhi < 0)) continue;
    while (hi - lo > 1) {
      BigInt mid = floor_div(lo + hi, BigInt(2));
      BigInt fm = eval(mid);
      if (fm == 0) {
        push_if_root(mid);
        break;
      }
      if ((fm < 0) == (flo < 0))
        lo = mid, flo = fm;
      else
        hi = mid;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Rational roots of a primitive polynomial of degree <= 3, via the monic
// transform y = lc * t. Returns linear witnesses (q*t - p), primitive.
inline std::optional<IntPoly> rational_root_witness_low_degree(const IntPoly& f) {
  int d = f.degree();
  const BigInt& lc = f.leading();
  // F(y) = lc^(d-1) f(y/lc), monic of the same degree
  std::vector<BigInt> F(d + 1);
  F[d] = 1;
  BigInt scale = 1;
  for (int i = d - 1; i >= 0; --i) {
    F[i] = f.coeff(i) * scale;
    scale *= lc;
  }
  auto roots = integer_roots_monic(F);
  if (roots.empty()) return std::nullopt;
  BigInt y = roots.front();
  BigInt g = boost::multiprecision::gcd(y, lc);
  if (g == 0) g = lc;
  if (g < 0) g = -g;
  std::vector<BigInt> w{-y / g, lc / g};
  IntPoly witness(std::move(w));
  return witness.primitive_part();
}

}  // namespace detail

// Exact for degree <= 3; for higher degrees a mod-p certificate can prove
// irreducibility and a rational root proves reducibility, otherwise unknown.
inline IrredVerdict irreducibility(const IntPoly& f) {
  if (f.degree() < 1) throw usage_error("irreducibility: zero or constant polynomial");
  IntPoly g = f.primitive_part();
  int d = g.degree();
  IrredVerdict v;
  if (d == 1) {
    v.status = IrredStatus::irreducible;
    return v;
  }
  if (d <= 3) {
    auto witness = detail::rational_root_witness_low_degree(g);
    if (witness) {
      v.status = IrredStatus::reducible;
      v.witness = *witness;
      v.note = "rational root";
    } else {
      v.status = IrredStatus::irreducible;
      v.note = "no rational root (complete for degree <= 3)";
    }
    return v;
  }
  // degree >= 4: look for small rational roots, then a mod-p certificate
  const BigInt& lc = g.leading();
  for (long long r = -10000; r <= 10000; ++r) {
    if (g.eval(r) == 0) {
      v.status = IrredStatus::reducible;
      v.witness = IntPoly{-r, 1};
      v.note = "integer root";
      return v;
    }
  }
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull, 41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull,
                          73ull, 79ull, 83ull, 89ull, 97ull}) {
    if (mod_u64(lc, q) == 0) continue;
    auto fq = g.reduce_mod(q);
    if (polymod::degree(fq) != d) continue;
    if (polymod::irreducible(fq, q)) {
      v.status = IrredStatus::irreducible;
      v.note = "irreducible mod " + std::to_string(q);
      return v;
    }
  }
  v.status = IrredStatus::unknown;
  v.note = "no certificate among the first 25 primes";
  return v;
}

// --- resultant via the subresultant pseudo-remainder sequence ---

namespace detail {

// lc(B)^(deg A - deg B + 1) * A mod B, exact in Z[t].
inline std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  auto deg = [](const std::vector<BigInt>& v) { return static_cast<int>(v.size()) - 1; };
  auto trim = [](std::vector<BigInt>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  const BigInt& lb = b.back();
  int e = deg(a) - deg(b) + 1;
  while (!a.empty() && deg(a) >= deg(b)) {
    BigInt la = a.back();
    int shift = deg(a) - deg(b);
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    trim(a);
    --e;
  }
  BigInt scale = 1;
  for (int i = 0; i < e; ++i) scale *= lb;
  for (auto& c : a) c *= scale;
  return a;
}

inline BigInt pow_big(BigInt base, int e) {
  BigInt r = 1;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Res(f, g), exact; zero iff f and g share a nonconstant factor.
inline BigInt resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw usage_error("resultant: zero polynomial");
  std::vector<BigInt> A = f.coeffs(), B = g.coeffs();
  auto deg = [](const std::vector<BigInt>& v) { return static_cast<int>(v.size()) - 1; };
  int sign = 1;
  if (deg(A) < deg(B)) {
    std::swap(A, B);
    if ((deg(A) & 1) && (deg(B) & 1)) sign = -sign;
  }
  if (deg(B) < 0) return 0;
  if (deg(A) == 0) return 1;  // both constants
  if (deg(B) == 0) return detail::pow_big(B[0], deg(A));
  // contents out first: res(a*A', b*B') = a^degB b^degA res(A', B')
  BigInt ca = 0, cb = 0;
  for (auto& c : A) ca = boost::multiprecision::gcd(ca, c);
  for (auto& c : B) cb = boost::multiprecision::gcd(cb, c);
  for (auto& c : A) c /= ca;
  for (auto& c : B) c /= cb;
  BigInt t = detail::pow_big(ca, deg(B)) * detail::pow_big(cb, deg(A));
  BigInt gg = 1, h = 1;
  while (true) {
    int d = deg(A), e = deg(B);
    int delta = d - e;
    if ((d & 1) && (e & 1)) sign = -sign;
    std::vector<BigInt> R = detail::pseudo_rem(A, B);
    if (R.empty()) return 0;  // common factor
    A = std::move(B);
    BigInt div = gg * detail::pow_big(h, delta);
    for (auto& c : R) c /= div;
    B = std::move(R);
    gg = A.back();
    // h <- h^(1-delta) g^delta
    if (delta > 0) {
      BigInt num = detail::pow_big(gg, delta);
      h = (delta == 1) ? num : num / detail::pow_big(h, delta - 1);
    }
    if (deg(B) == 0) {
      // res = s * t * lc(B)^(deg A) / h^(deg A - 1)
      BigInt num = detail::pow_big(B[0], deg(A));
      BigInt res = num / detail::pow_big(h, deg(A) - 1);
      return sign * t * res;
    }
  }
}

inline BigInt discriminant_quadratic(const IntPoly& f) {
  if (f.degree() != 2) throw usage_error("discriminant_quadratic: degree must be 2");
  return f.coeff(1) * f.coeff(1) - 4 * f.coeff(2) * f.coeff(0);
}

// --- families ---

struct MemberReport {
  bool positive_leading = false;
  IrredVerdict irred;
};

struct AdmissibilityReport {
  std::vector<MemberReport> members;
  bool distinct = true;
  std::vector<std::uint64_t> vanishing;
  BigInt fixed_div = 1;
  std::vector<std::string> warnings;

  bool admissible() const {
    if (!distinct || !vanishing.empty()) return false;
    for (const auto& m : members)
      if (!m.positive_leading || m.irred.status != IrredStatus::irreducible) return false;
    return true;
  }

  std::string failure_reason() const {
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i].irred.status == IrredStatus::reducible)
        return "member " + std::to_string(i + 1) + " is reducible" +
               (members[i].irred.witness ? " (factor " + members[i].irred.witness->str() + ")" : "");
      if (members[i].irred.status == IrredStatus::unknown)
        return "member " + std::to_string(i + 1) + " has no irreducibility certificate";
      if (!members[i].positive_leading)
        return "member " + std::to_string(i + 1) + " has a non-positive leading coefficient";
    }
    if (!distinct) return "members are not distinct";
    if (!vanishing.empty())
      return "product vanishes identically modulo " + std::to_string(vanishing.front());
    return "";
  }
};

class PolyFamily {
 public:
  PolyFamily(std::vector<IntPoly> members, IntPoly product,
             std::map<std::pair<std::size_t, std::size_t>, BigInt> res, AdmissibilityReport report)
      : members_(std::move(members)),
        product_(std::move(product)),
        resultants_(std::move(res)),
        report_(std::move(report)) {
    exceptional_ = 1;
    for (const auto& [ij, r] : resultants_) exceptional_ *= (r < 0 ? BigInt(-r) : r);
    for (const auto& m : members_) {
      BigInt lc = m.leading();
      exceptional_ *= (lc < 0 ? BigInt(-lc) : lc);
    }
  }

  const std::vector<IntPoly>& members() const { return members_; }
  const IntPoly& product() const { return product_; }
  const AdmissibilityReport& report() const { return report_; }
  const std::map<std::pair<std::size_t, std::size_t>, BigInt>& pair_resultants() const {
    return resultants_;
  }
  int k() const { return static_cast<int>(members_.size()); }

  int degree_product() const {
    int d = 1;
    for (const auto& m : members_) d *= m.degree();
    return d;
  }

  // p divides some pairwise resultant or leading coefficient; the
  // member-by-member omega sum is unreliable at such primes.
  bool exceptional(std::uint64_t p) const {
    if (exceptional_ == 0) return true;
    return mod_u64(exceptional_, p) == 0;
  }

  void require_admissible(bool override_flag) const {
    if (!report_.admissible() && !override_flag)
      throw inadmissible_error("family {" + family_str(members_) +
                               "} is inadmissible: " + report_.failure_reason());
  }

 private:
  std::vector<IntPoly> members_;
  IntPoly product_;
  std::map<std::pair<std::size_t, std::size_t>, BigInt> resultants_;
  AdmissibilityReport report_;
  BigInt exceptional_;
};

// Builds product, pairwise resultants and the admissibility report.
// Throws on literal duplicates and on zero members; scalar multiples are a
// warning (the conjecture's "distinct" leaves them ambiguous).
inline PolyFamily check_family(std::vector<IntPoly> members) {
  if (members.empty()) throw usage_error("check_family: need at least one member");
  for (const auto& m : members)
    if (m.is_zero()) throw usage_error("check_family: zero polynomial member");
  AdmissibilityReport report;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j])
        throw usage_error("check_family: duplicate members (" + members[i].str() + ")");
      if (members[i].primitive_part() == members[j].primitive_part())
        report.warnings.push_back("members " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) + " are scalar multiples");
    }
  for (const auto& m : members) {
    MemberReport mr;
    mr.positive_leading = m.leading() > 0;
    if (m.degree() >= 1) mr.irred = irreducibility(m);
    report.members.push_back(std::move(mr));
  }
  IntPoly product = family_product(members);
  std::map<std::pair<std::size_t, std::size_t>, BigInt> res;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      res[{i, j}] = resultant(members[i], members[j]);
  report.fixed_div = fixed_divisor(product);
  report.vanishing = vanishing_primes(product);
  return PolyFamily(std::move(members), std::move(product), std::move(res), std::move(report));
}

inline PolyFamily parse_family(std::string_view text) {
  std::vector<IntPoly> members;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == ';') {
      auto piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t") != std::string_view::npos)
        members.push_back(IntPoly::parse(piece));
      start = i + 1;
    }
  }
  if (members.empty()) throw usage_error("parse_family: no members in '" + std::string(text) + "'");
  return check_family(std::move(members));
}

}  // namespace bateman
