#pragma once

#include "geopack/classification.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace geopack {

enum class CellLabel : std::uint8_t { White, Gray, Black };
const char* to_string(CellLabel l);

// A large circle/sphere with the box of its legal centers.
struct LegalRegion {
  Rational radius;
  std::vector<RationalInterval> centers;
};

// A large polygon at an exact anchor position.
struct PlacedPolygon {
  std::vector<Point2> vertices;  // absolute coordinates, CCW
};

struct LabelCounts {
  BigInt white = 0, gray = 0, black = 0;
};

// Uniform grid with labels computed on demand against the large objects.
// Nothing dense is stored, so resolutions far beyond memory stay usable.
struct CellMap {
  int d = 2;
  Rational eps_cell;
  std::vector<long long> cells_per_axis;
  std::vector<LegalRegion> circles;
  std::vector<PlacedPolygon> polygons;

  BigInt cell_count() const;
  RationalInterval cell_interval(long long index) const;
  CellLabel label(const std::vector<long long>& cell) const;
  // Lowest-index large object making the cell non-white.
  std::optional<std::size_t> provenance(const std::vector<long long>& cell) const;

  // Exact counts over all cells, or over the index box [lo, hi) per axis.
  LabelCounts counts() const;
  LabelCounts counts_in(const std::vector<long long>& lo, const std::vector<long long>& hi) const;
  Rational cell_volume() const;

  // All cells with the given label (only for modest grids).
  std::vector<std::vector<long long>> cells_with(CellLabel l, std::size_t limit = 1u << 22) const;
};

struct GridBoundCheck {
  Rational eps;
  double eps_large = 0.0;
};

// Errors unless every side / eps_cell is an integer. With a bound check, also
// requires eps_cell <= eps * eps_large^3 / 240.
CellMap build_grid(const KnapsackSpec& k, const Rational& eps_cell, const std::optional<GridBoundCheck>& check = {});

CellMap classify_cells_circles(CellMap map, std::vector<LegalRegion> large);
// Polygon cells are non-white only when their interiors meet a polygon.
CellMap classify_cells_polygons(CellMap map, std::vector<PlacedPolygon> large);

struct CornerBox {
  std::vector<Rational> lo, hi;
};

// Circles/spheres: cubes of side eps_large/4 at the 2^d corners of the unit cube.
std::vector<CornerBox> corner_white_regions(const Rational& eps_large, int d);
// Polygons of an (f, alpha, q, t) class: squares of side l* sin(alpha)/2, l* = 2 pi eps_large/(q t).
double polygon_corner_side(double eps_large, double alpha, int q, double t);
std::vector<CornerBox> corner_white_regions_polygons(double eps_large, double alpha, int q, double t);

}  // namespace geopack
