#pragma once

#include "geopack/classification.hpp"

#include <functional>
#include <vector>

namespace geopack {

struct LargeCandidate {
  std::vector<std::size_t> subset;               // item indices
  std::vector<std::vector<Rational>> guesses;    // lattice point per subset member
};

struct CandidateCaps {
  std::size_t max_subset = 4;
  std::size_t max_candidates = 1'000'000;
};

// Lattice {0, step, 2 step, ...} intersected with [0, side].
std::vector<Rational> lattice_points(const Rational& step, const Rational& side = 1);

// floor(1 / (pi * eps_large^2)), the area bound on how many large circles fit.
std::size_t area_subset_cap(double eps_large, int d = 2);

// Subsets of `pool` with at most `cap` members, ordered by nonincreasing total
// profit; ties keep lexicographic index order. Stops after `limit` subsets.
std::vector<std::vector<std::size_t>> subsets_by_profit(const std::vector<Item>& items,
                                                        const std::vector<std::size_t>& pool, std::size_t cap,
                                                        std::size_t limit = static_cast<std::size_t>(-1));

// Streams every (subset, guess) pair of the large class; returns the number emitted.
// Members with identical radii receive nondecreasing guesses, which removes
// duplicates under identical (radius, guess) multisets. The visitor returns false to stop.
std::size_t enumerate_large_candidates(const std::vector<Item>& items, const SizeClasses& classes, const Rational& eps,
                                       std::size_t n, const CandidateCaps& caps,
                                       const std::function<bool(const LargeCandidate&)>& visit, int d = 2);

}  // namespace geopack
