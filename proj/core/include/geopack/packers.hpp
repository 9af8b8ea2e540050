#pragma once

#include "geopack/geometry.hpp"

#include <vector>

namespace geopack {

struct SquarePlacement {
  std::size_t index;   // into the input side list
  std::vector<Rational> corner;  // lower-left corner
};

struct NfdhResult {
  std::vector<SquarePlacement> placed;
  std::vector<std::size_t> unpackable;  // side larger than the container
  std::vector<std::size_t> left_out;    // stopped when no new shelf fit
  Rational packed_area;                 // sum of side^d over placed squares
  bool all_packed() const { return unpackable.empty() && left_out.empty(); }
};

// Next-fit decreasing height shelves in a box with the given sides (d = 2, or
// d = 3 with shelves stacked into layers). Squares are cubes in d = 3.
NfdhResult nfdh_pack_squares(const std::vector<Rational>& box, const std::vector<Rational>& sides);

struct MediumPacking {
  std::vector<std::size_t> selected;  // item indices
  std::vector<Placement> placements;
  std::vector<std::size_t> skipped;   // selected by density but not placed
  Rational area;                      // total bounding-square area of the selected prefix
};

// Profit-density prefix with area <= 2 eps, bounding squares of side 2 r_out,
// NFDH into the strip [origin, origin + strip]. Equal densities keep input order.
MediumPacking pack_medium_greedy(const std::vector<Item>& items, const std::vector<std::size_t>& medium,
                                 const Rational& eps, const std::vector<Rational>& strip_origin,
                                 const std::vector<Rational>& strip_size);

// Exact bounding square side: smallest rational upper bound on 2 r_out used for packing.
Rational bounding_side(const Item& item);
// Offset from the lower-left corner of the bounding square to the placement coordinate.
std::vector<Rational> placement_in_square(const Item& item, const std::vector<Rational>& corner, const Rational& side);

struct StripPruneResult {
  std::vector<std::size_t> survivors;              // indices into the cell's item list
  std::vector<std::vector<Rational>> positions;    // new placement coordinates of survivors
  std::vector<std::size_t> removed;
  std::vector<int> strip_index;                    // chosen strip per axis
  std::vector<Rational> removed_weight;            // per axis
  std::vector<std::vector<Rational>> candidate_weight;  // [axis][j]
};

// Derandomized strip removal inside the cell [origin, origin + s]^d. Candidate
// strips are [origin + j eps s, origin + (j+1) eps s) for j < 1/eps; an item is
// removed when its open extent meets the strip. Survivors right of the strip
// shift by -eps s, so everything fits in a box of side (1 - eps) s per axis.
StripPruneResult strip_prune(const std::vector<Item>& items, const std::vector<std::vector<Rational>>& positions,
                             const std::vector<Rational>& origin, const Rational& s, const Rational& eps);

}  // namespace geopack
