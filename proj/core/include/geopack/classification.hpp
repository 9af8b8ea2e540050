#pragma once

#include "geopack/geometry.hpp"

#include <map>
#include <optional>
#include <vector>

namespace geopack {

// base^power with base in (0,1). Thresholds of the size gap reach eps^(24^10),
// far below double range, so the exponent is kept symbolically.
struct Scale {
  Rational base = 1;
  BigInt power = 0;

  double log() const;    // natural logarithm
  double value() const;  // may underflow to 0
  // Exact value when the power is small enough to materialize.
  std::optional<Rational> exact(unsigned max_power = 1u << 14) const;
  // threshold < r, decided exactly when the logarithms are too close to call.
  bool below(const Rational& r) const;
  bool below(double r) const;
  Scale pow(unsigned e) const { return {base, power * e}; }
};

struct ShiftResult {
  int tau = 1;
  std::vector<std::size_t> members;  // indices of the class C_tau
  Rational class_weight;
  Rational total_weight;
};

// Items with key > rho[0] are class 0; key in (rho[k], rho[k-1]] is class k.
// Returns the smallest tau in 1..ceil(1/eps) whose class weight is <= eps * total.
ShiftResult shifting_partition(const std::vector<double>& keys, const std::vector<Rational>& weights,
                               const std::vector<double>& rho, const Rational& eps);
// Same rule on precomputed class indices.
ShiftResult shifting_by_class(const std::vector<int>& class_index, const std::vector<Rational>& weights,
                              const Rational& eps);
// Double weights (volumes).
int shifting_by_class(const std::vector<int>& class_index, const std::vector<double>& weights, double eps,
                      int num_classes);

int inverse_eps(const Rational& eps);  // ceil(1/eps)

struct SizeClasses {
  Rational eps;
  unsigned exponent = 24;
  int tau = 1;
  Scale eps_large, eps_small;
  std::vector<std::size_t> large, medium, small;
};

// Size key: radius for disks/spheres, inradius for polygons.
double size_key(const Item& item);
bool key_above(const Item& item, const Scale& s);

SizeClasses size_gap(const std::vector<Item>& items, const Rational& eps, unsigned exponent);

struct LevelSplit {
  Rational eps;
  double f = 1.0;
  bool paper = false;
  double beta = 0.0, gamma = 0.0;
  int k = 0;  // chosen candidate index
  // Ratios. In desk mode dc = 1/g exactly and cells are rational.
  double dl = 0.0, dc = 0.0, ds = 0.0;
  int g = 2;
  Rational unit = 1;  // side of the level-0 cell
  std::vector<double> delta_large, delta_small, delta_cell;  // index = level, absolute lengths
  std::map<int, std::vector<std::size_t>> L, M;
  std::vector<std::array<double, 3>> D;  // (dl, dc, ds) candidates
  double medium_area = 0.0;
  int depth = 0;  // deepest level with items

  Rational cell_side(int level) const;  // desk mode
};

// Paper constants: beta = eps^2/16, gamma = eps/(72 f). Range check eps < 1/(10 f^2) when enforce_range.
LevelSplit level_split_fat(const std::vector<Item>& items, const Rational& eps, double f, bool enforce_range = true,
                           const Rational& unit = 1);

// Desk candidates: dc = 1/g, the band (dc^2/(2f), dc/(2f)] cut into ceil(1/eps) slices.
std::vector<std::array<double, 3>> desk_candidates(const Rational& eps, double f, int g);
LevelSplit level_split_desk(const std::vector<Item>& items, const Rational& eps, double f, int g, std::size_t candidate,
                            const Rational& unit = 1);

}  // namespace geopack
