#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bateman/bhconstant.hpp"
#include "bateman/polynomial.hpp"
#include "bateman/primes.hpp"

namespace bateman {

// Counterclockwise square spiral, 1 at the origin, 2 at (1,0), y up.
// Closed form over the ring index m = max(|x|,|y|); ring m holds
// (2m-1)^2+1 .. (2m+1)^2.
inline std::pair<std::int64_t, std::int64_t> spiral_coords(std::uint64_t n) {
  if (n == 0) throw usage_error("spiral_coords: n must be >= 1");
  if (n == 1) return {0, 0};
  std::uint64_t m = (isqrt_u64(n - 1) + 1) / 2;
  std::int64_t mi = static_cast<std::int64_t>(m);
  std::uint64_t t = n - (2 * m - 1) * (2 * m - 1);  // 1..8m
  if (t <= 2 * m) return {mi, -mi + static_cast<std::int64_t>(t)};
  if (t <= 4 * m) return {3 * mi - static_cast<std::int64_t>(t), mi};
  if (t <= 6 * m) return {-mi, 5 * mi - static_cast<std::int64_t>(t)};
  return {static_cast<std::int64_t>(t) - 7 * mi, -mi};
}

inline std::uint64_t spiral_value(std::int64_t x, std::int64_t y) {
  if (x == 0 && y == 0) return 1;
  std::uint64_t m = static_cast<std::uint64_t>(std::max(x < 0 ? -x : x, y < 0 ? -y : y));
  std::int64_t mi = static_cast<std::int64_t>(m);
  std::uint64_t base = (2 * m - 1) * (2 * m - 1);
  std::uint64_t t;
  if (x == mi && y > -mi)
    t = static_cast<std::uint64_t>(y + mi);
  else if (y == mi)
    t = 2 * m + static_cast<std::uint64_t>(mi - x);
  else if (x == -mi)
    t = 4 * m + static_cast<std::uint64_t>(mi - y);
  else
    t = 6 * m + static_cast<std::uint64_t>(x + mi);
  return base + t;
}

// Compass names follow the rendered raster (N = toward the top row, which is
// decreasing lattice y); the ray through 7, 23, 47, ... is NE.
enum class Direction { N, NE, E, SE, S, SW, W, NW };

inline Direction parse_direction(const std::string& s) {
  if (s == "N") return Direction::N;
  if (s == "NE") return Direction::NE;
  if (s == "E") return Direction::E;
  if (s == "SE") return Direction::SE;
  if (s == "S") return Direction::S;
  if (s == "SW") return Direction::SW;
  if (s == "W") return Direction::W;
  if (s == "NW") return Direction::NW;
  throw usage_error("unknown direction '" + s + "' (use N NE E SE S SW W NW)");
}

inline const char* direction_str(Direction d) {
  static const char* names[] = {"N", "NE", "E", "SE", "S", "SW", "W", "NW"};
  return names[static_cast<int>(d)];
}

inline std::pair<std::int64_t, std::int64_t> direction_step(Direction d) {
  switch (d) {
    case Direction::N: return {0, -1};
    case Direction::NE: return {1, -1};
    case Direction::E: return {1, 0};
    case Direction::SE: return {1, 1};
    case Direction::S: return {0, 1};
    case Direction::SW: return {-1, 1};
    case Direction::W: return {-1, 0};
    default: return {-1, -1};
  }
}

inline bool is_diagonal(Direction d) {
  return d == Direction::NE || d == Direction::SE || d == Direction::SW || d == Direction::NW;
}

struct RaySpec {
  std::int64_t anchor_x = 0;
  std::int64_t anchor_y = 0;
  Direction dir = Direction::E;
  std::uint64_t skip = 0;
};

inline RaySpec ray_through_value(std::uint64_t n, Direction dir, std::uint64_t skip = 0) {
  auto [x, y] = spiral_coords(n);
  return RaySpec{x, y, dir, skip};
}

// Spiral values at anchor + n*dir for n = skip .. skip+count-1.
inline std::vector<std::uint64_t> ray_values(const RaySpec& spec, std::size_t count) {
  if (count < 3) throw usage_error("ray_values: need at least 3 values");
  auto [dx, dy] = direction_step(spec.dir);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (std::uint64_t n = spec.skip; n < spec.skip + count; ++n) {
    std::int64_t x = spec.anchor_x + static_cast<std::int64_t>(n) * dx;
    std::int64_t y = spec.anchor_y + static_cast<std::int64_t>(n) * dy;
    out.push_back(spiral_value(x, y));
  }
  return out;
}

struct RayQuadratic {
  std::int64_t A = 0, b = 0, c = 0;  // value at step n (n = 1 first value)
};

// Exact integer quadratic through the first three values, verified against
// every remaining one; the pre-asymptotic stretch at a ray's start makes
// this fail, in which case the caller increases skip.
inline RayQuadratic fit_ray_quadratic(const std::vector<std::uint64_t>& values) {
  if (values.size() < 4) throw usage_error("fit_ray_quadratic: need at least 4 values");
  std::int64_t v1 = static_cast<std::int64_t>(values[0]);
  std::int64_t v2 = static_cast<std::int64_t>(values[1]);
  std::int64_t v3 = static_cast<std::int64_t>(values[2]);
  std::int64_t second = v3 - 2 * v2 + v1;
  if (second % 2 != 0) throw usage_error("fit_ray_quadratic: non-quadratic sequence");
  RayQuadratic q;
  q.A = second / 2;
  q.b = (v2 - v1) - 3 * q.A;
  q.c = v1 - q.A - q.b;
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::int64_t n = static_cast<std::int64_t>(i) + 1;
    if (q.A * n * n + q.b * n + q.c != static_cast<std::int64_t>(values[i]))
      throw usage_error("fit_ray_quadratic: non-quadratic sequence");
  }
  return q;
}

enum class RayClass { reducible, obstructed, irreducible };

struct RayReport {
  RaySpec spec;  // with the effective skip after retries
  RayQuadratic quad;
  std::uint64_t primes_found = 0;
  std::uint64_t values_scanned = 0;
  RayClass cls = RayClass::irreducible;
  std::optional<double> constant;  // Bateman-Horn constant of the fitted quadratic
  std::optional<double> epsilon;
};

// Fits the ray (retrying skip+1..skip+4 over the initial consecutive-integer
// stretch), counts primes among the kept values, and classifies: reducible
// or congruence-obstructed rays expect at most one prime, irreducible rays
// carry the Hardy-Littlewood constant of the fitted quadratic.
inline RayReport ray_report(const RaySpec& spec0, std::size_t count,
                            std::uint64_t constant_bound = 1000000) {
  RayReport rep;
  RaySpec spec = spec0;
  std::string last_err;
  bool fitted = false;
  for (std::uint64_t extra = 0; extra <= 4 && !fitted; ++extra) {
    spec.skip = spec0.skip + extra;
    auto values = ray_values(spec, std::max<std::size_t>(count, 8));
    try {
      rep.quad = fit_ray_quadratic(values);
      fitted = true;
      rep.values_scanned = count;
      rep.primes_found = 0;
      auto kept = ray_values(spec, count);
      for (std::uint64_t v : kept)
        if (is_prime_u64(v)) ++rep.primes_found;
    } catch (const usage_error& e) {
      last_err = e.what();
    }
  }
  if (!fitted) throw usage_error("ray_report: " + last_err);
  rep.spec = spec;
  IntPoly f{rep.quad.c, rep.quad.b, rep.quad.A};
  auto verdict = irreducibility(f);
  if (verdict.status == IrredStatus::reducible) {
    rep.cls = RayClass::reducible;
  } else if (!vanishing_primes(f).empty()) {
    rep.cls = RayClass::obstructed;
  } else {
    rep.cls = RayClass::irreducible;
    auto hlf = hlf_constant(rep.quad.A, rep.quad.b, rep.quad.c, constant_bound);
    rep.constant = hlf.value;
    rep.epsilon = hlf.epsilon;
  }
  return rep;
}

struct Raster {
  std::uint32_t side = 0;
  std::vector<std::uint8_t> px;  // row-major, row 0 at the top (north)

  std::string to_pgm() const {
    std::string out = "P5\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
    out.append(reinterpret_cast<const char*>(px.data()), px.size());
    return out;
  }
};

inline constexpr std::uint8_t kPrimeShade = 0;
inline constexpr std::uint8_t kCompositeShade = 255;
inline constexpr std::uint8_t kOverlayShade = 128;

// One pixel per lattice cell, primes dark, optional ray overlay at a second
// gray level (composites on the ray only; primes stay dark). Deterministic
// bytes for fixed inputs.
inline Raster render_spiral(std::uint32_t side, const std::optional<RaySpec>& overlay = {},
                            std::uint64_t budget = default_memory_budget()) {
  if (side % 2 == 0) throw usage_error("render_spiral: side must be odd");
  std::uint64_t cells = std::uint64_t(side) * side;
  if (cells + cells / 16 > budget) throw budget_error("render_spiral: raster exceeds memory budget");
  PrimeRange flags = sieve_range(0, cells + 1, budget);
  Raster r;
  r.side = side;
  r.px.resize(cells);
  std::int64_t half = side / 2;
  auto on_overlay = [&](std::int64_t x, std::int64_t y) {
    if (!overlay) return false;
    auto [dx, dy] = direction_step(overlay->dir);
    std::int64_t nx = x - overlay->anchor_x, ny = y - overlay->anchor_y;
    std::int64_t n;
    if (dx != 0) {
      if (nx % dx != 0) return false;
      n = nx / dx;
    } else {
      if (nx != 0 || dy == 0 || ny % dy != 0) return false;
      n = ny / dy;
    }
    if (n < static_cast<std::int64_t>(overlay->skip)) return false;
    return overlay->anchor_x + n * dx == x && overlay->anchor_y + n * dy == y;
  };
  for (std::uint32_t row = 0; row < side; ++row) {
    for (std::uint32_t col = 0; col < side; ++col) {
      std::int64_t x = static_cast<std::int64_t>(col) - half;
      std::int64_t y = static_cast<std::int64_t>(row) - half;
      std::uint64_t v = spiral_value(x, y);
      std::uint8_t shade = flags.contains(v) ? kPrimeShade : kCompositeShade;
      if (shade == kCompositeShade && on_overlay(x, y)) shade = kOverlayShade;
      r.px[std::uint64_t(row) * side + col] = shade;
    }
  }
  return r;
}

}  // namespace bateman
