#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace geopack {

// Closed double interval. Arithmetic widens each bound by one ulp outward,
// which keeps the enclosure sound without switching rounding modes.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double v) : lo(v), hi(v) {}
  Interval(double l, double h) : lo(l), hi(h) {}

  bool empty() const { return !(lo <= hi); }
  double width() const { return hi - lo; }
  double mid() const { return lo + 0.5 * (hi - lo); }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

inline Interval operator+(Interval a, Interval b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }
inline Interval operator-(Interval a, Interval b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }
inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator*(Interval a, Interval b) {
  double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
}

inline Interval sqr(Interval a) {
  if (a.lo >= 0) return {down(a.lo * a.lo), up(a.hi * a.hi)};
  if (a.hi <= 0) return {down(a.hi * a.hi), up(a.lo * a.lo)};
  double m = std::max(-a.lo, a.hi);
  return {0.0, up(m * m)};
}

// Enclosure of sqrt over the nonnegative part.
inline Interval sqrt_nonneg(Interval a) {
  double l = std::max(0.0, a.lo), h = std::max(0.0, a.hi);
  return {std::max(0.0, down(std::sqrt(l))), up(std::sqrt(h))};
}

inline Interval intersect(Interval a, Interval b) { return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)}; }
inline Interval hull(Interval a, Interval b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

}  // namespace geopack
