#pragma once

#include "geopack/rational.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace geopack {

using Point2 = std::array<Rational, 2>;

enum class ItemKind { Disk, Sphere, Polygon };

// Convex polygon in counterclockwise order with derived exact quantities.
struct PolygonShape {
  std::vector<Point2> vertices;
  std::size_t anchor = 0;  // least x, ties broken by least y
  Rational area;
  Point2 mec_center;       // minimum enclosing circle, exact
  Rational r_out_sq;
  double r_out = 0.0;
  double r_in = 0.0;
  // Extents relative to the anchor vertex: max(x_v - x_a), max(y_a - y_v), max(y_v - y_a).
  Rational extent_right, extent_down, extent_up;
  std::vector<double> interior_angles;
  double min_edge = 0.0, max_edge = 0.0;
};

struct PolygonBuild {
  PolygonShape shape;
  bool reversed = false;  // input was clockwise
};

// Validates convexity and positive area; reverses clockwise input.
PolygonBuild build_polygon(std::vector<Point2> vertices);

struct Item {
  std::string id;
  ItemKind kind = ItemKind::Disk;
  int dimension = 2;
  Rational radius;  // Disk / Sphere
  std::shared_ptr<const PolygonShape> polygon;
  Rational profit;

  static Item disk(std::string id, Rational radius, Rational profit);
  static Item sphere(std::string id, int d, Rational radius, Rational profit);
  static Item make_polygon(std::string id, std::vector<Point2> vertices, Rational profit);

  bool is_round() const { return kind != ItemKind::Polygon; }
  double r_in() const;
  double r_out() const;
  // Exact square of the enclosing-ball radius.
  Rational r_out_sq() const;
  double volume() const;
  double profit_value() const { return to_double(profit); }
};

struct KnapsackSpec {
  int dimension = 2;
  std::vector<Rational> sides;

  static KnapsackSpec unit(int d) { return {d, std::vector<Rational>(static_cast<std::size_t>(d), Rational(1))}; }
  double side(int axis) const { return to_double(sides[static_cast<std::size_t>(axis)]); }
};

struct RationalInterval {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

struct ExactCoords {
  std::vector<Rational> x;
};
struct FloatCoords {
  std::vector<double> x;
  double tolerance = 0.0;
};
struct BoxCoords {
  std::vector<RationalInterval> x;
};

// Center of a disk/sphere, or position of the anchor vertex of a polygon.
struct Placement {
  std::string item_id;
  std::variant<ExactCoords, FloatCoords, BoxCoords> coords;

  static Placement exact(std::string id, std::vector<Rational> x);
  static Placement floating(std::string id, std::vector<double> x, double tol = 0.0);
  static Placement box(std::string id, std::vector<RationalInterval> x);

  std::size_t dimension() const;
  bool is_exact() const { return std::holds_alternative<ExactCoords>(coords); }
  bool is_box() const { return std::holds_alternative<BoxCoords>(coords); }
  std::vector<double> point() const;  // box midpoint for Box
  // Exact point; Float coordinates convert exactly, Box gives the midpoint.
  std::vector<Rational> exact_point() const;
  // Box midpoint as a Float placement certified to half the widest box side.
  Placement as_point() const;
  Placement translated(const std::vector<Rational>& delta) const;
};

struct ValidityReport {
  bool valid = true;
  double max_boundary_violation = 0.0;
  double max_overlap_depth = 0.0;
  std::vector<std::pair<std::string, std::string>> offending_pairs;
  std::vector<std::string> out_of_bounds;
};

std::pair<double, double> polygon_radii(const PolygonShape& p);

// Vertex coordinates of a placed polygon.
std::vector<Point2> placed_vertices(const PolygonShape& p, const std::vector<Rational>& anchor);

bool overlap(const Item& a, const Placement& pa, const Item& b, const Placement& pb, double tol = 1e-9);
// Penetration depth; 0 when the pair does not overlap at tolerance 0.
double overlap_depth(const Item& a, const Placement& pa, const Item& b, const Placement& pb);

bool contained_in_knapsack(const Item& item, const Placement& p, const KnapsackSpec& k, double tol = 1e-9);
double boundary_violation(const Item& item, const Placement& p, const KnapsackSpec& k);

ValidityReport validate_packing(const std::vector<Item>& items, const std::vector<Placement>& placements,
                                const KnapsackSpec& k, double tol = 1e-9);

// Axis extent [lo, hi] of a placed item along one axis (double, for sweeps and strips).
std::pair<double, double> axis_extent(const Item& item, const std::vector<double>& x, int axis);
std::pair<Rational, Rational> axis_extent_exact(const Item& item, const std::vector<Rational>& x, int axis);

double ball_volume(int d, double r);

}  // namespace geopack
