#pragma once

#include "geopack/geometry.hpp"

#include <optional>
#include <vector>

namespace geopack {

struct LPResult {
  enum class Kind { Optimal, Infeasible, Unbounded } kind = Kind::Infeasible;
  std::vector<Rational> x;
  Rational value;
};

// max c.x subject to A x <= b, x >= 0. Exact tableau simplex with Bland's rule.
LPResult simplex_max(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                     const std::vector<Rational>& c);

// Which supporting line separates a pair (i < j): an edge of i (owner 0) or of j (owner 1).
struct SideChoice {
  int owner = 0;
  std::size_t edge = 0;
};

// Per-polygon extents of the container constraints.
struct ContainerExtents {
  Rational a, b, c;  // right, down, up from the anchor vertex
};
ContainerExtents container_extents(const PolygonShape& p);

struct PolygonLPSystem {
  std::vector<std::vector<Rational>> A;  // variables: x_0, y_0, x_1, y_1, ...
  std::vector<Rational> b;
};

// Packing constraints for the pairs in `pairs` (same order as `guess`) plus container bounds.
PolygonLPSystem build_polygon_lp(const std::vector<const PolygonShape*>& polys,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                 const std::vector<SideChoice>& guess, const KnapsackSpec& k);

// Anchor coordinates per polygon, or nullopt when the guessed system is infeasible.
// `guess` lists one choice per pair (i, j), i < j, in lexicographic order.
std::optional<std::vector<std::vector<Rational>>> polygon_lp_place(const std::vector<Item>& polys,
                                                                   const std::vector<SideChoice>& guess,
                                                                   const KnapsackSpec& k);

struct PolygonSearch {
  std::optional<std::vector<std::vector<Rational>>> anchors;
  std::vector<SideChoice> guess;
  std::size_t lp_calls = 0;
  bool exhausted = false;  // budget ran out before the guess tree was closed
};

// Backtracking over side assignments with prefix feasibility checks.
PolygonSearch search_polygon_placement(const std::vector<Item>& polys, const KnapsackSpec& k,
                                       std::size_t lp_budget = 20000);

}  // namespace geopack
