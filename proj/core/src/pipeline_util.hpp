#pragma once

#include "geopack/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace geopack::detail {

inline int common_dimension(const std::vector<Item>& items, int fallback) {
  if (items.empty()) return fallback;
  int d = items[0].dimension;
  for (const auto& it : items)
    if (it.dimension != d) throw std::invalid_argument("items of mixed dimension");
  return d;
}

inline std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Size class per item against rho_c = eps^(exponent^c): 0 above rho_0, c for
// (rho_c, rho_{c-1}], K + 1 below rho_K.
inline std::vector<int> size_classes(const std::vector<Item>& items, const Rational& eps, unsigned exponent) {
  const int K = inverse_eps(eps);
  std::vector<int> cls(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    int c = 0;
    while (c <= K && !key_above(items[i], Scale{eps, boost::multiprecision::pow(BigInt(exponent), static_cast<unsigned>(c))}))
      ++c;
    cls[i] = c;
  }
  return cls;
}

inline Scale class_threshold(const Rational& eps, unsigned exponent, int c) {
  return Scale{eps, boost::multiprecision::pow(BigInt(exponent), static_cast<unsigned>(c))};
}

// Grid resolution N (cells of side 1/N) so that the largest pooled item still
// fits a level-one DP slot of a cell.
inline int grid_resolution(const std::vector<Item>& items, const std::vector<std::size_t>& pool, int max_cells,
                           const Rational& eps) {
  double rmax = 0.0;
  for (std::size_t i : pool) rmax = std::max(rmax, items[i].r_out());
  if (rmax <= 0) return std::max(1, max_cells);
  double e = to_double(eps);
  double need = 2.0 * rmax * (1 + e) / (1 + e / 2) * 1.0001;
  int n = static_cast<int>(std::floor(1.0 / need));
  return std::clamp(n, 1, std::max(1, max_cells));
}

inline std::vector<std::vector<Rational>> white_corners(const CellMap& map) {
  std::vector<std::vector<Rational>> out;
  for (const auto& c : map.cells_with(CellLabel::White)) {
    std::vector<Rational> corner;
    for (long long x : c) corner.push_back(map.eps_cell * Rational(x));
    out.push_back(std::move(corner));
  }
  return out;
}

inline Rational volume_bound_sum(const std::vector<Item>& items, const std::vector<std::size_t>& subset) {
  Rational s = 0;
  for (std::size_t i : subset) s += from_double(items[i].volume());
  return s;
}

}  // namespace geopack::detail
