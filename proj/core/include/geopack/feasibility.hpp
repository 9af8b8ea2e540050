#pragma once

#include "geopack/geometry.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace geopack {

// Center boxes and pairwise separation constraints for t large circles/spheres.
struct QuadraticSystem {
  int d = 2;
  std::vector<Rational> radii;
  std::vector<std::vector<RationalInterval>> boxes;  // [circle][axis]
  std::vector<Rational> sides;
  bool trivially_infeasible = false;
  std::string reason;

  std::size_t size() const { return radii.size(); }
  Rational threshold(std::size_t i, std::size_t j) const {
    Rational s = radii[i] + radii[j];
    return s * s;
  }
  std::size_t constraint_count() const { return size() * (size() - 1) / 2 + 2 * size() * static_cast<std::size_t>(d); }
};

// Box per axis: [max(g, r), min(g + eps/n, side - r)].
QuadraticSystem build_quadratic_system(const std::vector<Rational>& radii, const std::vector<std::vector<Rational>>& guesses,
                                       const Rational& eps, std::size_t n, const KnapsackSpec& k);
// Unrestricted boxes [r, side - r].
QuadraticSystem full_box_system(const std::vector<Rational>& radii, const KnapsackSpec& k);

enum class Status { Feasible, Infeasible, Unknown };
const char* to_string(Status s);

struct FeasibilityVerdict {
  Status status = Status::Unknown;
  std::vector<std::vector<RationalInterval>> witness;  // boxes of width <= alpha, exact midpoint certified
  bool exact_certified = false;
  std::size_t explored = 0;
  std::string note;

  std::vector<std::vector<Rational>> centers() const;
  double max_width() const;
};

struct SolverOptions {
  double certtol = 1e-12;
  bool symmetry_breaking = true;
  bool heuristic_start = true;
  double min_width = 1e-13;  // smaller undecided boxes count toward Unknown
};

FeasibilityVerdict solve_branch_and_prune(const QuadraticSystem& sys, double alpha, std::size_t budget = 1'000'000,
                                          const SolverOptions& opt = {});

// Shrinks witness boxes concentrically around the certified midpoint.
FeasibilityVerdict refine_placement(const FeasibilityVerdict& v, const Rational& alpha_target);
// min(1e-12, 2^(-n/eps)) as an exact dyadic.
Rational default_alpha_target(std::size_t n, const Rational& eps);

// Exact check of centers against the system (containment in boxes and separations).
bool certify_centers(const QuadraticSystem& sys, const std::vector<std::vector<Rational>>& centers);

}  // namespace geopack
