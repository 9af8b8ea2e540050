#pragma once

#include "geopack/feasibility.hpp"

#include <optional>
#include <vector>

namespace geopack {

struct TwoPack {
  bool feasible = false;
  std::vector<Rational> first, second;  // corner centers
};

// Spheres at (r1, ..., r1) and (1 - r2, ..., 1 - r2); feasible iff they do not overlap.
TwoPack two_pack_check(const Rational& r1, const Rational& r2, int d);

enum class OracleMethod { CornerHeuristic, SubsetSearch };
const char* to_string(OracleMethod m);

struct OracleResult {
  Rational profit = 0;
  std::vector<std::size_t> subset;
  std::vector<Placement> witness;
  OracleMethod method = OracleMethod::SubsetSearch;
  std::vector<std::vector<std::size_t>> unknown;  // subsets the solver could not decide
};

// Subsets by decreasing profit, each decided by branch-and-prune over full
// boxes in the unit cube; the first feasible one wins.
OracleResult brute_force_opt(const std::vector<Item>& items, std::size_t cap = 8, std::size_t budget = 400000);

// Disks in the unit square, up to three: one disk rests on the bottom wall and
// one on the left wall (the same disk when it sits in the corner), their free
// coordinates run over a lattice of the given step, and the third disk is
// decided exactly from the candidate vertices of its free region.
std::optional<std::vector<std::vector<double>>> lattice_search(const std::vector<double>& radii, double step = 1e-3);

}  // namespace geopack
