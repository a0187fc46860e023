// Command-line front end: Bateman-Horn constants, empirical prime counts,
// table reproduction, Ulam spiral rasters and Euler-polynomial CRT plans.
//
// Exit codes: 0 success, 1 usage/parse error, 2 inadmissible input,
// 3 resource budget exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bateman/asymptotics.hpp"
#include "bateman/bhconstant.hpp"
#include "bateman/census.hpp"
#include "bateman/eulersearch.hpp"
#include "bateman/polynomial.hpp"
#include "bateman/primes.hpp"
#include "bateman/rootcount.hpp"
#include "bateman/ulam.hpp"

using json = nlohmann::json;
using namespace bateman;

namespace {

struct GlobalOpts {
  std::string format = "table";
  std::uint64_t seed = kDefaultWitnessSeed;
  unsigned threads = 1;
  bool allow_large = false;
  bool override_admissibility = false;
  bool timing = false;
};

std::uint64_t parse_scaled(const std::string& s) {
  try {
    if (s.find_first_of("eE.") != std::string::npos) {
      long double v = std::stold(s);
      if (v < 0 || v > 1.8e19L) throw usage_error("number out of range: " + s);
      return static_cast<std::uint64_t>(v + 0.5L);
    }
    return std::stoull(s);
  } catch (const std::exception&) {
    throw usage_error("cannot parse number '" + s + "'");
  }
}

std::string fmt_sig(double v, int digits = 6) {
  std::ostringstream o;
  o << std::setprecision(digits) << v;
  return o.str();
}

void desk_scale_guard(std::uint64_t x, std::uint64_t cap, bool allow_large, const std::string& what) {
  if (x > cap && !allow_large)
    throw usage_error(what + " " + std::to_string(x) + " exceeds the desk-scale cap " +
                      std::to_string(cap) + "; pass --allow-large to run it anyway");
}

json estimate_json(const ConstantEstimate& est) {
  json cps = json::array();
  for (const auto& c : est.checkpoints) cps.push_back({{"bound", c.bound}, {"value", c.value}});
  json j{{"family", est.family},
         {"k", est.k},
         {"prime_bound", est.prime_bound},
         {"value", est.value},
         {"checkpoints", cps}};
  j["verdict"] = est.verdict ? json(verdict_str(*est.verdict)) : json(nullptr);
  j["tail_bound"] = est.tail_bound ? json(*est.tail_bound) : json(nullptr);
  return j;
}

void print_estimate(const ConstantEstimate& est, const GlobalOpts& g) {
  if (g.format == "json") {
    std::cout << estimate_json(est).dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "family,k,prime_bound,value,verdict,tail_bound\n";
    std::cout << '"' << est.family << "\"," << est.k << ',' << est.prime_bound << ','
              << fmt_sig(est.value) << ',' << (est.verdict ? verdict_str(*est.verdict) : "") << ','
              << (est.tail_bound ? fmt_sig(*est.tail_bound) : "") << "\n";
  } else {
    std::cout << "family:      " << est.family << "\n";
    std::cout << "prime bound: " << est.prime_bound << "\n";
    std::cout << "value:       " << fmt_sig(est.value) << "\n";
    if (!est.checkpoints.empty()) {
      std::cout << "checkpoints:\n";
      for (const auto& c : est.checkpoints)
        std::cout << "  " << std::setw(12) << c.bound << "  " << fmt_sig(c.value) << "\n";
    }
    if (est.verdict) std::cout << "verdict:     " << verdict_str(*est.verdict) << "\n";
    if (est.tail_bound) std::cout << "tail bound:  " << fmt_sig(*est.tail_bound) << "\n";
  }
}

json report_json(const CountReport& r, bool timing) {
  json j{{"family", r.family}, {"x", r.x}, {"count", r.count}};
  if (r.prediction) {
    j["prediction"] = {{"constant", r.prediction->constant},
                       {"degree_product", r.prediction->degree_product},
                       {"k", r.prediction->k},
                       {"x", r.prediction->x},
                       {"predicted", r.prediction->predicted}};
    j["ratio"] = r.ratio ? json(*r.ratio) : json(nullptr);
  } else {
    j["prediction"] = nullptr;
    j["ratio"] = nullptr;
  }
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

void print_report(const CountReport& r, const GlobalOpts& g) {
  if (g.format == "json") {
    std::cout << report_json(r, g.timing).dump() << "\n";
  } else if (g.format == "csv") {
    std::cout << "family,x,count,predicted,ratio\n";
    std::cout << '"' << r.family << "\"," << r.x << ',' << r.count << ','
              << (r.prediction ? fmt_sig(r.prediction->predicted) : "") << ','
              << (r.ratio ? fmt_sig(*r.ratio) : "") << "\n";
  } else {
    std::cout << "family: " << r.family << "\n";
    std::cout << "x:      " << r.x << "\n";
    std::cout << "count:  " << r.count << "\n";
    if (r.prediction)
      std::cout << "predicted: " << fmt_sig(r.prediction->predicted)
                << "  (constant " << fmt_sig(r.prediction->constant) << ", ratio "
                << (r.ratio ? fmt_sig(*r.ratio) : "n/a") << ")\n";
    if (g.timing) std::cout << "wall ms: " << fmt_sig(r.wall_ms, 4) << "\n";
  }
}

// ---- tables ----

std::string table_loglint(std::uint64_t max_x, unsigned threads) {
  std::ostringstream out;
  out << "x,pi,Li,x_over_logx\n";
  for (std::uint64_t x = 1000; x <= max_x; x *= 10) {
    std::uint64_t pi = prime_count(x, threads);
    long long liv = round_half_away(li(static_cast<double>(x)));
    long long xl = round_half_away(static_cast<double>(x) / std::log(static_cast<double>(x)));
    out << x << ',' << pi << ',' << liv << ',' << xl << "\n";
  }
  return out.str();
}

std::string table_disagree(std::uint64_t max_x) {
  std::ostringstream out;
  out << "N,Q,half_Li,ratio\n";
  for (std::uint64_t x = 100; x <= max_x; x *= 10) {
    std::uint64_t q = 0;
    for (std::uint64_t n = 1; n <= x; ++n)
      if (is_prime_u64(n * n + 1)) ++q;
    double half_li = 0.5 * li(static_cast<double>(x));
    out << x << ',' << q << ',' << round_half_away(half_li) << ','
        << fmt_sig(static_cast<double>(q) / half_li) << "\n";
  }
  return out.str();
}

std::string table_divergezero(unsigned max_n) {
  std::ostringstream out;
  out << "n,partial_product\n";
  std::uint64_t limit = 1;
  for (unsigned i = 0; i < max_n; ++i) limit *= 10;
  std::uint64_t p_limit = nth_prime(limit);
  CompensatedSum logsum;
  std::uint64_t index = 0, next_row = 10;
  for_each_prime(2, p_limit + 1, [&](std::uint64_t p) {
    if (p > 2) logsum.add(std::log1p(-1.0 / (static_cast<double>(p) - 1.0)));
    ++index;
    if (index == next_row) {
      out << index << ',' << fmt_sig(std::exp(logsum.value())) << "\n";
      next_row *= 10;
    }
  });
  return out.str();
}

std::string table_ck(std::uint64_t through, std::uint64_t prime_bound) {
  std::ostringstream out;
  out << "k,C_k\n";
  auto primes = primes_up_to(prime_bound);
  for (std::uint64_t k = 2; k <= through; k += 2) {
    CompensatedSum logsum;
    for (std::uint64_t p : primes)
      if (p > 2) logsum.add(ck_log_factor(p, k));
    out << k << ',' << fmt_sig(std::exp(logsum.value())) << "\n";
  }
  return out.str();
}

std::string table_pis(unsigned max_n) {
  static const std::uint64_t ks[] = {2, 4, 6, 8, 10, 12, 30};
  std::ostringstream out;
  out << "n,pi_2,pi_4,pi_6,pi_8,pi_10,pi_12,pi_30\n";
  std::uint64_t N = 1;
  for (unsigned i = 0; i < max_n; ++i) N *= 10;
  std::uint64_t pN = nth_prime(N);
  PrimeRange flags = sieve_range(0, pN + 31);
  std::uint64_t counts[7] = {0, 0, 0, 0, 0, 0, 0};
  std::uint64_t index = 0, row = 100;
  unsigned n = 2;
  flags.for_each([&](std::uint64_t p) {
    if (p > pN) return;
    for (int i = 0; i < 7; ++i)
      if (flags.contains(p + ks[i])) ++counts[i];
    ++index;
    if (index == row) {
      out << n;
      for (int i = 0; i < 7; ++i) out << ',' << counts[i];
      out << "\n";
      row *= 10;
      ++n;
    }
  });
  return out.str();
}

int emit_table(const std::string& text, const std::string& diff_path, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    f << text;
  }
  if (!diff_path.empty()) {
    std::ifstream f(diff_path, std::ios::binary);
    if (!f) throw usage_error("cannot open golden file " + diff_path);
    std::stringstream buf;
    buf << f.rdbuf();
    if (buf.str() == text) {
      std::cout << "MATCH " << diff_path << "\n";
      return 0;
    }
    std::istringstream got(text), want(buf.str());
    std::string a, b;
    int line = 1;
    while (true) {
      bool ga = static_cast<bool>(std::getline(got, a));
      bool gb = static_cast<bool>(std::getline(want, b));
      if (!ga && !gb) break;
      if (!ga || !gb || a != b) {
        std::cout << "DIFFERS at line " << line << ": generated '" << (ga ? a : "<eof>")
                  << "' vs golden '" << (gb ? b : "<eof>") << "'\n";
        return 1;
      }
      ++line;
    }
    return 1;
  }
  if (out_path.empty()) std::cout << text;
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Bateman-Horn constants and empirical prime counts"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--format", g.format, "output format: table, csv, json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  std::string seed_str;
  app.add_option("--seed", seed_str, "witness seed for probabilistic primality");
  app.add_option("--threads", g.threads, "worker-count hint for sieving");
  app.add_flag("--allow-large", g.allow_large, "permit beyond-desk-scale bounds");
  app.add_flag("--override-admissibility", g.override_admissibility,
               "evaluate inadmissible families anyway");
  app.add_flag("--timing", g.timing, "include wall-time in output");

  // constant
  auto* c = app.add_subcommand("constant", "evaluate a Bateman-Horn constant");
  std::string c_family, c_bound = "1e6", c_form = "bh", c_checkpoints;
  std::uint64_t c_k = 2;
  unsigned c_gk = 2;
  std::string c_a = "1", c_b = "0", c_cc = "0";
  c->add_option("-f,--family", c_family, "polynomial family, comma separated");
  c->add_option("--bound", c_bound, "prime bound for the partial product");
  c->add_option("--form", c_form, "closed form: bh, ap, ck, hlf, greentao")
      ->check(CLI::IsMember({"bh", "ap", "ck", "hlf", "greentao"}));
  c->add_option("--checkpoints", c_checkpoints, "comma-separated checkpoint bounds");
  c->add_option("-k", c_k, "k for --form ck");
  c->add_option("--gt-k", c_gk, "k for --form greentao");
  c->add_option("-a", c_a, "a for --form ap/hlf");
  c->add_option("-b", c_b, "b for --form ap/hlf");
  c->add_option("-c", c_cc, "c for --form hlf");

  // count
  auto* n = app.add_subcommand("count", "empirical prime counting");
  std::string n_family, n_x, n_first, n_bound = "100", n_chains, n_constant;
  std::uint64_t n_k = 2, n_minlen = 1;
  bool n_predict = false, n_sophie = false, n_landau = false, n_brun = false, n_pairs = false;
  std::string n_ap_a, n_ap_b, n_prime_bound = "1e6";
  unsigned n_bigint_rounds = 40;
  n->add_option("-f,--family", n_family, "polynomial family");
  n->add_option("-x", n_x, "count arguments n <= x (or primes <= x)");
  n->add_flag("--predict", n_predict, "attach the conjectured count and ratio");
  n->add_option("--constant", n_constant, "constant for --predict (default 1: uncorrected)");
  n->add_option("--prime-bound", n_prime_bound, "prime bound when computing the constant");
  n->add_flag("--pairs", n_pairs, "count prime pairs p, p+k");
  n->add_option("-k", n_k, "pair gap k");
  n->add_option("--first-primes", n_first, "range = the first N primes");
  n->add_flag("--sophie", n_sophie, "count Sophie Germain primes");
  n->add_flag("--landau", n_landau, "count primes of the form n^2+1 at most x");
  n->add_flag("--brun", n_brun, "partial Brun sum over twin pairs");
  n->add_option("--chains", n_chains, "Cunningham chains: first or second")
      ->check(CLI::IsMember({"first", "second"}));
  n->add_option("--bound", n_bound, "chain seed bound");
  n->add_option("--min-len", n_minlen, "minimum chain length");
  n->add_option("--ap-a", n_ap_a, "arithmetic progression modulus a");
  n->add_option("--ap-b", n_ap_b, "arithmetic progression residue b");
  n->add_option("--bigint-rounds", n_bigint_rounds,
                "witness rounds on the arbitrary-precision fallback path");

  // tables
  auto* t = app.add_subcommand("tables", "regenerate the reference tables as CSV");
  std::string t_id, t_max = "1e6", t_diff, t_out, t_prime_bound = "1e6";
  unsigned t_max_n = 4;
  std::uint64_t t_through = 150;
  t->add_option("--id", t_id, "table id: loglint, disagree, divergezero, ck, pis")->required();
  t->add_option("--max", t_max, "largest x (loglint, disagree)");
  t->add_option("--max-n", t_max_n, "largest decade exponent (divergezero, pis)");
  t->add_option("--through", t_through, "largest k (ck)");
  t->add_option("--prime-bound", t_prime_bound, "prime bound for ck");
  t->add_option("--diff", t_diff, "compare against a golden file");
  t->add_option("--out", t_out, "write CSV to a file");

  // ulam
  auto* u = app.add_subcommand("ulam", "Ulam spiral rasters and ray reports");
  std::uint64_t u_side = 0, u_ray = 0;
  std::string u_dir = "E", u_out, u_prime_bound = "1e6";
  std::uint64_t u_count = 1000, u_skip = 0;
  bool u_report = false;
  u->add_option("--side", u_side, "odd raster side length");
  u->add_option("--out", u_out, "PGM output path");
  u->add_option("--ray", u_ray, "spiral value anchoring a ray");
  u->add_option("--dir", u_dir, "ray direction: N NE E SE S SW W NW");
  u->add_option("--count", u_count, "ray values to scan");
  u->add_option("--skip", u_skip, "initial ray values to skip");
  u->add_flag("--report", u_report, "fit the ray quadratic and report");
  u->add_option("--prime-bound", u_prime_bound, "prime bound for the ray constant");

  // euler
  auto* e = app.add_subcommand("euler", "Euler-polynomial CRT constructions");
  std::uint64_t e_through = 0, e_first = 0;
  std::string e_rule = "primitive-root", e_residues, e_streak, e_constant_bound;
  e->add_option("--primes-through", e_through, "use odd primes <= bound");
  e->add_option("--first-odd-primes", e_first, "use the first m odd primes");
  e->add_option("--rule", e_rule, "nonresidue rule: primitive-root, least-nonresidue, explicit")
      ->check(CLI::IsMember({"primitive-root", "least-nonresidue", "explicit"}));
  e->add_option("--nonresidues", e_residues, "comma-separated explicit nonresidues");
  e->add_option("--streak", e_streak, "report the prime streak of t^2+t+k for this k");
  e->add_option("--constant-bound", e_constant_bound,
                "also evaluate the Bateman-Horn constant of t^2+t+k at this bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }
  if (!seed_str.empty()) g.seed = parse_scaled(seed_str);

  const std::uint64_t kDeskX = 1000000000ull;       // 1e9
  const std::uint64_t kDeskBound = 100000000ull;    // 1e8

  if (c->parsed()) {
    std::uint64_t bound = parse_scaled(c_bound);
    desk_scale_guard(bound, kDeskBound, g.allow_large, "prime bound");
    if (c_form == "bh") {
      if (c_family.empty()) throw usage_error("constant: --family is required for --form bh");
      PolyFamily F = parse_family(c_family);
      std::vector<std::uint64_t> schedule;
      if (!c_checkpoints.empty()) {
        std::stringstream ss(c_checkpoints);
        std::string item;
        while (std::getline(ss, item, ',')) schedule.push_back(parse_scaled(item));
      }
      ConstantEstimate est = bh_constant(F, bound, schedule, g.override_admissibility);
      print_estimate(est, g);
    } else if (c_form == "ap") {
      auto r = ap_constant(parse_scaled(c_a), static_cast<std::int64_t>(std::stoll(c_b)));
      if (g.format == "json") {
        std::cout << json{{"a", r.a}, {"phi", r.phi},
                          {"exact", r.exact.str()}, {"value", r.value}}.dump() << "\n";
      } else {
        std::cout << "C(" << r.a << "t+" << c_b << ") = " << r.a << "/phi(" << r.a << ") = "
                  << r.exact.str() << " = " << fmt_sig(r.value) << "\n";
      }
    } else if (c_form == "ck") {
      ConstantEstimate est = ck_constant(c_k, bound);
      print_estimate(est, g);
    } else if (c_form == "hlf") {
      auto r = hlf_constant(BigInt(c_a), BigInt(c_b), BigInt(c_cc), bound);
      if (g.format == "json") {
        std::cout << json{{"epsilon", r.epsilon}, {"value", r.value}}.dump() << "\n";
      } else {
        std::cout << "epsilon = " << r.epsilon << ", value = " << fmt_sig(r.value) << "\n";
      }
    } else {
      double v = greentao_constant(c_gk, bound);
      if (g.format == "json")
        std::cout << json{{"k", c_gk}, {"prime_bound", bound}, {"value", v}}.dump() << "\n";
      else
        std::cout << "C(k=" << c_gk << ", a=p_k#) = " << fmt_sig(v) << "\n";
    }
    return 0;
  }

  if (n->parsed()) {
    if (!n_chains.empty()) {
      std::uint64_t bound = parse_scaled(n_bound);
      desk_scale_guard(bound, kDeskX, g.allow_large, "chain bound");
      auto chains = cunningham_chains(n_chains == "first" ? ChainKind::first : ChainKind::second,
                                      bound, n_minlen);
      if (g.format == "json") {
        // JSON-lines: one chain per line
        for (const auto& ch : chains)
          std::cout << json{{"kind", n_chains}, {"elements", ch.elements}, {"complete", ch.complete}}
                           .dump()
                    << "\n";
      } else if (g.format == "csv") {
        std::cout << "kind,length,complete,elements\n";
        for (const auto& ch : chains) {
          std::cout << n_chains << ',' << ch.elements.size() << ',' << (ch.complete ? 1 : 0) << ",\"";
          for (std::size_t i = 0; i < ch.elements.size(); ++i)
            std::cout << (i ? " " : "") << ch.elements[i];
          std::cout << "\"\n";
        }
      } else {
        for (const auto& ch : chains) {
          std::cout << '(';
          for (std::size_t i = 0; i < ch.elements.size(); ++i)
            std::cout << (i ? ", " : "") << ch.elements[i];
          std::cout << ")" << (ch.complete ? "" : " [extension out of range]") << "\n";
        }
      }
      return 0;
    }
    if (n_brun) {
      std::uint64_t x = parse_scaled(n_x.empty() ? "1e6" : n_x);
      desk_scale_guard(x, kDeskX, g.allow_large, "x");
      double v = brun_partial(x);
      if (g.format == "json")
        std::cout << json{{"x", x}, {"brun_partial", v}}.dump() << "\n";
      else
        std::cout << "brun_partial(" << x << ") = " << std::setprecision(10) << v << "\n";
      return 0;
    }
    if (n_pairs) {
      CountReport r = n_first.empty()
                          ? count_pairs(n_k, PairMode::by_bound, parse_scaled(n_x))
                          : count_pairs(n_k, PairMode::by_first_primes, parse_scaled(n_first));
      print_report(r, g);
      return 0;
    }
    if (n_sophie || n_landau) {
      std::uint64_t x = parse_scaled(n_x);
      desk_scale_guard(x, kDeskX, g.allow_large, "x");
      CountReport r = n_sophie ? count_sophie(x) : count_landau(x);
      print_report(r, g);
      return 0;
    }
    if (!n_ap_a.empty()) {
      CountReport r = count_ap(parse_scaled(n_ap_a), std::stoll(n_ap_b.empty() ? "0" : n_ap_b),
                               parse_scaled(n_x));
      print_report(r, g);
      return 0;
    }
    if (n_family.empty()) throw usage_error("count: nothing to count (see --help)");
    std::uint64_t x = parse_scaled(n_x);
    desk_scale_guard(x, kDeskX, g.allow_large, "x");
    PolyFamily F = parse_family(n_family);
    CountReport r = count_Q(F, x, g.override_admissibility, n_bigint_rounds, g.seed);
    if (n_predict) {
      ConstantEstimate est;
      if (!n_constant.empty()) {
        est.family = family_str(F.members());
        est.k = F.k();
        est.value = std::stod(n_constant);
      } else {
        est.family = family_str(F.members());
        est.k = F.k();
        est.value = 1.0;  // uncorrected prime-number-theorem shape
      }
      attach_prediction(r, predict(F, est, static_cast<double>(x)));
    }
    print_report(r, g);
    return 0;
  }

  if (t->parsed()) {
    std::string text;
    if (t_id == "loglint") {
      std::uint64_t mx = parse_scaled(t_max);
      desk_scale_guard(mx, kDeskX, g.allow_large, "x");
      text = table_loglint(mx, g.threads);
    } else if (t_id == "disagree") {
      std::uint64_t mx = parse_scaled(t_max);
      desk_scale_guard(mx, 1000000ull, g.allow_large, "x");
      text = table_disagree(mx);
    } else if (t_id == "divergezero") {
      if (t_max_n > 6 && !g.allow_large)
        throw usage_error("divergezero: --max-n beyond 6 needs --allow-large");
      text = table_divergezero(t_max_n);
    } else if (t_id == "ck") {
      text = table_ck(t_through, parse_scaled(t_prime_bound));
    } else if (t_id == "pis") {
      if (t_max_n > 6 && !g.allow_large) throw usage_error("pis: --max-n beyond 6 needs --allow-large");
      text = table_pis(t_max_n);
    } else {
      throw usage_error("unknown table id '" + t_id + "'");
    }
    return emit_table(text, t_diff, t_out);
  }

  if (u->parsed()) {
    std::uint64_t prime_bound = parse_scaled(u_prime_bound);
    desk_scale_guard(prime_bound, kDeskBound, g.allow_large, "prime bound");
    if (u_ray != 0) {
      RaySpec spec = ray_through_value(u_ray, parse_direction(u_dir), u_skip);
      if (u_report) {
        RayReport rep = ray_report(spec, u_count, prime_bound);
        const char* cls = rep.cls == RayClass::reducible
                              ? "reducible"
                              : (rep.cls == RayClass::obstructed ? "obstructed" : "irreducible");
        if (g.format == "json") {
          json j{{"anchor", {rep.spec.anchor_x, rep.spec.anchor_y}},
                 {"dir", direction_str(rep.spec.dir)},
                 {"skip", rep.spec.skip},
                 {"A", rep.quad.A},
                 {"b", rep.quad.b},
                 {"c", rep.quad.c},
                 {"primes_found", rep.primes_found},
                 {"values_scanned", rep.values_scanned},
                 {"class", cls}};
          j["constant"] = rep.constant ? json(*rep.constant) : json(nullptr);
          j["epsilon"] = rep.epsilon ? json(*rep.epsilon) : json(nullptr);
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "anchor,dir,A,b,c,primes_found,values_scanned,class,constant\n";
          std::cout << '(' << rep.spec.anchor_x << ' ' << rep.spec.anchor_y << "),"
                    << direction_str(rep.spec.dir) << ',' << rep.quad.A << ',' << rep.quad.b << ','
                    << rep.quad.c << ',' << rep.primes_found << ',' << rep.values_scanned << ','
                    << cls << ',' << (rep.constant ? fmt_sig(*rep.constant) : "") << "\n";
        }
      } else {
        auto values = ray_values(spec, u_count);
        for (std::size_t i = 0; i < values.size(); ++i)
          std::cout << (i ? "," : "") << values[i];
        std::cout << "\n";
      }
      return 0;
    }
    if (u_side == 0) throw usage_error("ulam: give --side for a raster or --ray for a ray");
    if (u_side % 2 == 0) throw usage_error("ulam: side must be odd");
    Raster raster = render_spiral(static_cast<std::uint32_t>(u_side));
    if (u_out.empty()) throw usage_error("ulam: --out is required for rasters");
    std::ofstream f(u_out, std::ios::binary);
    if (!f) throw usage_error("ulam: cannot open " + u_out);
    std::string bytes = raster.to_pgm();
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    std::cout << "wrote " << u_out << " (" << bytes.size() << " bytes)\n";
    return 0;
  }

  if (e->parsed()) {
    if (!e_streak.empty() && e_through == 0 && e_first == 0) {
      BigInt k(e_streak);
      std::uint64_t s = euler_streak(k, 40, g.seed);
      if (g.format == "json")
        std::cout << json{{"k", e_streak}, {"streak", s}}.dump() << "\n";
      else
        std::cout << "streak(" << e_streak << ") = " << s << "\n";
      return 0;
    }
    std::vector<std::uint64_t> primes;
    if (e_through != 0)
      primes = odd_primes_through(e_through);
    else if (e_first != 0)
      primes = first_odd_primes(e_first);
    else
      throw usage_error("euler: give --primes-through, --first-odd-primes, or --streak");
    NonresidueRule rule = NonresidueRule::least_primitive_root;
    std::vector<std::uint64_t> residues;
    if (e_rule == "least-nonresidue") rule = NonresidueRule::least_nonresidue;
    if (e_rule == "explicit") {
      rule = NonresidueRule::explicit_list;
      std::stringstream ss(e_residues);
      std::string item;
      while (std::getline(ss, item, ',')) residues.push_back(parse_scaled(item));
    }
    CrtPlan plan = build_plan(primes, rule, residues);
    bool verified = verify_plan(plan);
    json j{{"primes", plan.primes},
           {"nonresidues", plan.nonresidues},
           {"modulus", plan.modulus.str()},
           {"k", plan.k.str()},
           {"verified", verified}};
    if (!e_streak.empty()) j["streak"] = euler_streak(plan.k, 40, g.seed);
    if (!e_constant_bound.empty()) {
      std::uint64_t bound = parse_scaled(e_constant_bound);
      desk_scale_guard(bound, kDeskBound, g.allow_large, "prime bound");
      PolyFamily F = check_family({plan_polynomial(plan)});
      j["constant"] = estimate_json(bh_constant(F, bound));
    }
    if (g.format == "json" || g.format == "csv") {
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "primes:   " << plan.primes.size() << " (through " << plan.primes.back() << ")\n";
      std::cout << "modulus:  " << plan.modulus.str() << "\n";
      std::cout << "k:        " << plan.k.str() << "\n";
      std::cout << "verified: " << (verified ? "true" : "false") << "\n";
      if (j.contains("streak")) std::cout << "streak:   " << j["streak"] << "\n";
      if (j.contains("constant"))
        std::cout << "constant: " << fmt_sig(j["constant"]["value"].get<double>()) << "\n";
    }
    return 0;
  }
  return 0;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const inadmissible_error& e) {
    std::cerr << "inadmissible: " << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
