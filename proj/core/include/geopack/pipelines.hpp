#pragma once

#include "geopack/dp.hpp"
#include "geopack/feasibility.hpp"
#include "geopack/grid.hpp"
#include "geopack/packers.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace geopack {

enum class Mode { Paper, Desk };

struct Diagnostics {
  std::size_t candidates_tried = 0;
  std::size_t unknown_verdicts = 0;
  std::size_t strips_removed = 0;
  Rational strip_loss = 0;
  std::optional<LabelCounts> cell_counts;  // of the winning candidate's grid
  Rational cell_volume = 0;
  std::vector<std::string> notes;
};

struct PackingSolution {
  std::string pipeline;
  KnapsackSpec knapsack;
  std::vector<std::size_t> selected;  // indices into the input items, placement order
  std::vector<Placement> placements;
  Rational profit = 0;
  ValidityReport validity;
  Diagnostics diag;
  std::optional<CellMap> cells;  // winning grid, kept for rendering
};

struct PipelineOptions {
  Rational eps{1, 10};
  Mode mode = Mode::Desk;
  int d = 2;
  std::uint64_t seed = 0;
  unsigned gap_exponent = 0;        // 0: 24 for circles, 20 for polygons in paper mode, 2 in desk mode
  std::size_t max_subset = 4;       // large subset cap
  std::size_t subset_budget = 48;   // feasibility calls per gap index
  std::size_t bp_budget = 20000;    // boxes per branch-and-prune call
  int grid_cells = 32;              // desk grid resolution bound per axis
  std::size_t desk_candidates = 4;  // level splits tried by the DP
  bool keep_cells = false;
  bool allow_3d = false;            // ptas_circles on spheres
};

// Fills profit and validity for the given knapsack.
void finalize(PackingSolution& sol, const std::vector<Item>& items, double tol = 1e-9);

// Max r_out / r_in over the items (1 for disks and spheres).
double fatness(const std::vector<Item>& items);

struct RaResult {
  std::vector<std::size_t> selected;  // indices into the caller's items
  std::vector<Placement> placements;
  Rational profit = 0;
  std::size_t dp_levels = 0;
};

// Resource-augmented packing of items[pool] into the cubes [c, c + side]^d for
// each corner c: the hierarchical DP runs on root cells of side
// side (1 + eps/2)/(1 + eps) and mediums fill the remaining top slab.
RaResult ra_pack_multi(const std::vector<Item>& items, const std::vector<std::size_t>& pool,
                       const std::vector<std::vector<Rational>>& corners, const Rational& side, const PipelineOptions& opt);

PackingSolution ra_ptas_fat(const std::vector<Item>& items, const PipelineOptions& opt);
PackingSolution small_objects_ptas(const std::vector<Item>& items, const PipelineOptions& opt);
PackingSolution ptas_circles(const std::vector<Item>& items, const PipelineOptions& opt);

struct PolygonClass {
  double f = 1.0;
  double alpha = 0.0;  // angles are at least pi/2 + alpha
  int q = 3;
  double t = 1.0;      // longest over shortest edge
};
// Tightest class containing every polygon.
PolygonClass polygon_class(const std::vector<Item>& items);
// min{1/(8f), pi^2 sin^2(alpha) / (q^2 t^2 (2 + 80 f))}
double polygon_eps_bound(const PolygonClass& c);
PackingSolution ptas_polygons(const std::vector<Item>& items, const PipelineOptions& opt,
                              const std::optional<PolygonClass>& cls = {});

PackingSolution augmented_pack(const std::vector<Item>& items, const PipelineOptions& opt);

enum class SphereType { Type1, Type2, Type2p, Type3, Type3p, Huge };
const char* to_string(SphereType t);

struct SphereTypeSplit {
  Rational plane_left, plane_right;   // eps and 1 on axis 0
  Rational slab_lo, slab_hi;          // mid-slab D = [1/2, 1/2 + eps]
  std::vector<SphereType> labels;     // parallel to the solution's placements
  std::size_t huge_count = 0;
};
SphereTypeSplit split_sphere_types(const std::vector<Item>& items, const PackingSolution& aug, const Rational& eps);

PackingSolution approx3_spheres(const std::vector<Item>& items, const PipelineOptions& opt);
PackingSolution approx2eps_spheres(const std::vector<Item>& items, const PipelineOptions& opt);
PackingSolution unweighted_52(const std::vector<Item>& items, const PipelineOptions& opt);

// Largest radius of a second sphere next to a sphere of diameter 1 - eps in the
// (1 + eps) x 1^(d-1) bin, from the corner-to-corner configuration.
double second_radius_bound(double eps, int d);
// Closed forms checked by the acceptance run: 3/2 (1 + eps) - sqrt(2 + 3 eps)
// for d = 2 and the general-d expression. Neither solves the tangency
// equation; second_radius_bound does.
double second_radius_closed_form_2d(double eps);
double second_radius_closed_form(double eps, int d);

}  // namespace geopack
