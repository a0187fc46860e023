#pragma once

#include <cmath>
#include <queue>

#include "bateman/bhconstant.hpp"
#include "bateman/common.hpp"

namespace bateman {

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1].
inline constexpr double kK15Nodes[8] = {
    0.000000000000000000000000000000000,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};
inline constexpr double kK15Weights[8] = {
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
inline constexpr double kG7Weights[4] = {
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

template <class F>
inline void gk15(const F& f, double a, double b, double& kronrod, double& err) {
  double h = 0.5 * (b - a), mid = 0.5 * (a + b);
  double fk = 0.0, fg = 0.0;
  double f0 = f(mid);
  fk += kK15Weights[0] * f0;
  fg += kG7Weights[0] * f0;
  for (int i = 1; i < 8; ++i) {
    double x = h * kK15Nodes[i];
    double s = f(mid - x) + f(mid + x);
    fk += kK15Weights[i] * s;
    if (i % 2 == 0) fg += kG7Weights[i / 2] * s;
  }
  kronrod = fk * h;
  err = std::abs((fk - fg) * h);
}

struct Panel {
  double a, b, value, err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

// Adaptive bisection on log-spaced initial panels; the integrands are smooth
// but the domain spans many decades.
template <class F>
inline double adaptive_quadrature(const F& f, double a, double b, double rel_tol = 1e-9) {
  if (b <= a) return 0.0;
  std::priority_queue<Panel> q;
  double total = 0.0, total_err = 0.0;
  double lo = a;
  while (lo < b) {
    double hi = std::min(b, lo * lo);
    if (hi <= lo) hi = b;
    Panel p{lo, hi, 0, 0};
    gk15(f, lo, hi, p.value, p.err);
    total += p.value;
    total_err += p.err;
    q.push(p);
    lo = hi;
  }
  for (int iter = 0; iter < 200000 && total_err > rel_tol * std::max(1.0, std::abs(total));
       ++iter) {
    Panel p = q.top();
    q.pop();
    double mid = 0.5 * (p.a + p.b);
    Panel l{p.a, mid, 0, 0}, r{mid, p.b, 0, 0};
    gk15(f, l.a, l.b, l.value, l.err);
    gk15(f, r.a, r.b, r.value, r.err);
    total += l.value + r.value - p.value;
    total_err += l.err + r.err - p.err;
    q.push(l);
    q.push(r);
  }
  return total;
}

}  // namespace detail

// int_2^x dt / (log t)^k by adaptive quadrature.
inline double log_integral_k(double x, unsigned k, double rel_tol = 1e-9) {
  if (k < 1) throw usage_error("log_integral_k: k must be >= 1");
  if (x < 2) throw usage_error("log_integral_k: x must be >= 2");
  if (x == 2) return 0.0;
  auto f = [k](double t) { return 1.0 / std::pow(std::log(t), static_cast<double>(k)); };
  return detail::adaptive_quadrature(f, 2.0, x, rel_tol);
}

// Offset logarithmic integral Li(x) = int_2^x dt / log t.
inline double li(double x, double rel_tol = 1e-9) {
  if (x < 2) throw usage_error("li: x must be >= 2");
  if (x == 2) return 0.0;
  auto f = [](double t) { return 1.0 / std::log(t); };
  return detail::adaptive_quadrature(f, 2.0, x, rel_tol);
}

struct Prediction {
  std::string family;
  double constant = 1.0;
  int degree_product = 1;
  double x = 0.0;
  int k = 1;
  double predicted = 0.0;
};

// Conjectured count: C / (prod deg f_i) * int_2^x dt/(log t)^k.
inline Prediction predict(const PolyFamily& F, const ConstantEstimate& est, double x) {
  if (est.family != family_str(F.members()))
    throw usage_error("predict: estimate belongs to a different family (" + est.family + ")");
  if (x < 2) throw usage_error("predict: x must be >= 2");
  Prediction p;
  p.family = est.family;
  p.constant = est.value;
  p.degree_product = F.degree_product();
  p.x = x;
  p.k = F.k();
  p.predicted = est.value / p.degree_product * log_integral_k(x, p.k);
  return p;
}

}  // namespace bateman
