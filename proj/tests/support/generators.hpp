#pragma once

#include "geopack/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace geopack::testing {

using Rng = std::mt19937_64;

// Uniform rational in [lo, hi] on the grid 1/den.
inline Rational grid_rational(Rng& g, double lo, double hi, long long den = 10000) {
  std::uniform_int_distribution<long long> u(static_cast<long long>(std::ceil(lo * den)),
                                             static_cast<long long>(std::floor(hi * den)));
  return Rational(u(g)) / den;
}

inline Rational random_profit(Rng& g, int max_profit = 10) {
  std::uniform_int_distribution<int> u(1, max_profit);
  return Rational(u(g));
}

inline std::vector<Item> random_spheres(Rng& g, int n, double rmin, double rmax, int d = 2, bool unit_profit = false) {
  std::vector<Item> out;
  for (int i = 0; i < n; ++i)
    out.push_back(Item::sphere("s" + std::to_string(i), d, grid_rational(g, rmin, rmax),
                               unit_profit ? Rational(1) : random_profit(g)));
  return out;
}

// Convex k-gon: vertices on a circle of radius R at jittered angles, snapped to
// the 1/den grid. The jitter stays small enough that every interior angle is
// close to the regular one.
inline std::vector<Point2> random_convex_vertices(Rng& g, int k, double R, double cx = 0.0, double cy = 0.0,
                                                  double jitter = 0.25, long long den = 100000) {
  std::uniform_real_distribution<double> u(-jitter, jitter), rot(0.0, 2 * std::numbers::pi);
  const double step = 2 * std::numbers::pi / k, base = rot(g);
  std::vector<Point2> vs;
  for (int i = 0; i < k; ++i) {
    const double a = base + step * (i + u(g));
    vs.push_back({Rational(std::llround((cx + R * std::cos(a)) * den)) / den,
                  Rational(std::llround((cy + R * std::sin(a)) * den)) / den});
  }
  return vs;
}

inline Item random_polygon(Rng& g, const std::string& id, int k, double R, Rational profit) {
  for (;;) {
    try {
      // keep about 10^4 grid steps across the polygon
      const long long den = std::max(100000LL, static_cast<long long>(std::ceil(1e4 / R)));
      return Item::make_polygon(id, random_convex_vertices(g, k, R, 0.0, 0.0, 0.25, den), profit);
    } catch (const std::invalid_argument&) {
    }
  }
}

inline std::vector<Item> random_polygons(Rng& g, int n, double Rmin, double Rmax, int kmin = 5, int kmax = 6) {
  std::uniform_int_distribution<int> kk(kmin, kmax);
  std::uniform_real_distribution<double> rr(Rmin, Rmax);
  std::vector<Item> out;
  for (int i = 0; i < n; ++i) out.push_back(random_polygon(g, "p" + std::to_string(i), kk(g), rr(g), random_profit(g)));
  return out;
}

inline Item regular_polygon(const std::string& id, int k, double R, Rational profit = 1, long long den = 1000000) {
  std::vector<Point2> vs;
  for (int i = 0; i < k; ++i) {
    const double a = 2 * std::numbers::pi * i / k;
    vs.push_back({Rational(std::llround(R * std::cos(a) * den)) / den, Rational(std::llround(R * std::sin(a) * den)) / den});
  }
  return Item::make_polygon(id, vs, profit);
}

}  // namespace geopack::testing
