#include "doctest.h"

#include "generators.hpp"
#include "oracles.hpp"

#include "geopack/oracle.hpp"
#include "geopack/pipelines.hpp"

#include <cmath>

using namespace geopack;
using namespace geopack::testing;

namespace {

Rational q(const char* s) { return parse_rational(s); }

PipelineOptions options(const char* eps, int d = 2) {
  PipelineOptions o;
  o.eps = q(eps);
  o.d = d;
  return o;
}

// Exact recheck of a solution, independent of the report it carries.
void check_solution(const std::vector<Item>& items, const PackingSolution& s, double tol = 1e-9) {
  CHECK(s.validity.valid);
  REQUIRE(s.selected.size() == s.placements.size());
  std::vector<Item> chosen;
  Rational p = 0;
  for (auto i : s.selected) {
    chosen.push_back(items.at(i));
    p += items[i].profit;
  }
  CHECK(p == s.profit);
  CHECK(validate_packing(chosen, s.placements, s.knapsack, tol).valid);
}

// The cell holding the point, and whether the axis box [lo, hi] stays inside it.
bool inside_white_cell(const CellMap& m, const std::vector<double>& lo, const std::vector<double>& hi) {
  const double e = to_double(m.eps_cell);
  std::vector<long long> cell;
  for (std::size_t a = 0; a < lo.size(); ++a) {
    const long long k = static_cast<long long>(std::floor((lo[a] + hi[a]) / 2 / e));
    if (lo[a] < k * e - 1e-12 || hi[a] > (k + 1) * e + 1e-12) return false;
    cell.push_back(k);
  }
  return m.label(cell) == CellLabel::White;
}

std::vector<Item> items_of(const std::vector<Rational>& radii, const std::vector<int>& profits, int d = 2) {
  std::vector<Item> out;
  for (std::size_t i = 0; i < radii.size(); ++i)
    out.push_back(Item::sphere("s" + std::to_string(i), d, radii[i], profits.empty() ? 1 : profits[i]));
  return out;
}

}  // namespace

TEST_SUITE("pipelines") {

TEST_CASE("resource augmentation: trivial instances and a hand packing") {
  auto one = items_of({q("0.5")}, {7});
  auto s = ra_ptas_fat(one, options("0.1"));
  CHECK(s.profit == 7);
  CHECK(s.knapsack.sides[0] == q("1.1"));
  check_solution(one, s);

  auto empty = ra_ptas_fat({}, options("0.1"));
  CHECK(empty.selected.empty());
  CHECK(empty.validity.valid);

  // four quarter disks tile the unit square as a 2 x 2 grid
  auto four = items_of({q("0.25"), q("0.25"), q("0.25"), q("0.25")}, {1, 2, 3, 4});
  auto f = ra_ptas_fat(four, options("0.1"));
  CHECK(f.profit >= 10);
  check_solution(four, f);

  auto polys = random_polygons(*std::make_unique<Rng>(61), 12, 0.05, 0.2);
  auto fp = ra_ptas_fat(polys, options("0.1"));
  check_solution(polys, fp);
  CHECK(fp.profit > 0);
}

TEST_CASE("small objects") {
  auto one = items_of({q("0.01")}, {1});
  auto s = small_objects_ptas(one, options("0.1"));
  CHECK(s.profit == 1);
  check_solution(one, s);
  CHECK(small_objects_ptas({}, options("0.1")).selected.empty());

  std::vector<Rational> r(100, q("0.04"));
  auto grid = items_of(r, {});
  auto g = small_objects_ptas(grid, options("0.1"));
  check_solution(grid, g);
  // the disks occupy half of the square; NFDH alone would place all hundred
  CHECK(g.profit >= Rational(100) * (1 - 4 * q("0.1")));

  auto too_big = items_of({q("0.2")}, {1});
  CHECK_THROWS_WITH_AS(small_objects_ptas(too_big, options("0.1")), doctest::Contains("s0"), std::invalid_argument);
}

TEST_CASE("circle PTAS on small cases") {
  auto one = items_of({q("0.4")}, {5});
  auto s = ptas_circles(one, options("0.25"));
  CHECK(s.profit == 5);
  CHECK(s.placements[0].is_exact());
  check_solution(one, s);

  auto pair = items_of({q("0.3"), q("0.3")}, {1, 1});
  auto p = ptas_circles(pair, options("0.25"));
  CHECK(p.selected.size() == 1);
  check_solution(pair, p);

  CHECK_THROWS_AS(ptas_circles(one, options("0.6")), std::invalid_argument);
  CHECK_THROWS_AS(ptas_circles(items_of({q("0.2")}, {1}, 3), options("0.25", 3)), std::invalid_argument);
}

TEST_CASE("circle PTAS keeps small disks in white cells") {
  Rng g(62);
  std::vector<Item> items{Item::disk("L", q("0.26"), 50)};
  for (int i = 0; i < 50; ++i) items.push_back(Item::disk("s" + std::to_string(i), q("0.01"), 1));
  auto o = options("0.25");
  o.keep_cells = true;
  auto s = ptas_circles(items, o);
  check_solution(items, s);
  bool has_large = false;
  std::size_t smalls = 0;
  for (std::size_t k = 0; k < s.selected.size(); ++k) {
    if (s.selected[k] == 0) {
      has_large = true;
      continue;
    }
    ++smalls;
    REQUIRE(s.cells);
    auto c = s.placements[k].point();
    CHECK(inside_white_cell(*s.cells, {c[0] - 0.01, c[1] - 0.01}, {c[0] + 0.01, c[1] + 0.01}));
  }
  CHECK(has_large);
  CHECK(smalls > 0);
  REQUIRE(s.diag.cell_counts);
  CHECK(s.diag.cell_counts->gray > 0);
}

TEST_CASE("polygon PTAS") {
  auto pent = regular_polygon("pent", 5, 0.4, 3);
  auto one = ptas_polygons({pent}, options("0.25"));
  CHECK(one.profit == 3);
  CHECK(one.placements[0].is_exact());
  check_solution({pent}, one, 0);

  const double R = 0.35 / std::cos(std::numbers::pi / 6);
  std::vector<Item> hexes{regular_polygon("h0", 6, R, 2), regular_polygon("h1", 6, R, 1)};
  auto two = ptas_polygons(hexes, options("0.25"));
  CHECK(two.selected == std::vector<std::size_t>{0});
  check_solution(hexes, two, 0);

  Rng g(63);
  std::vector<Item> mix{regular_polygon("L", 5, 0.3, 40)};
  // smalls two classes below L, so the candidate with L large sends them to the white cells
  for (int i = 0; i < 30; ++i) mix.push_back(random_polygon(g, "s" + std::to_string(i), 5, 0.004, 1));
  auto o = options("0.25");
  o.keep_cells = true;
  auto s = ptas_polygons(mix, o);
  check_solution(mix, s, 0);
  REQUIRE(s.cells);
  std::size_t smalls = 0;
  for (std::size_t k = 0; k < s.selected.size(); ++k) {
    CHECK(s.placements[k].is_exact());
    if (k < s.cells->polygons.size()) continue;  // large block, placed by the LP
    ++smalls;
    auto vs = to_double_poly(placed_vertices(*mix[s.selected[k]].polygon, s.placements[k].exact_point()));
    std::vector<double> lo{1e9, 1e9}, hi{-1e9, -1e9};
    for (const auto& v : vs)
      for (std::size_t a = 0; a < 2; ++a) lo[a] = std::min(lo[a], v[a]), hi[a] = std::max(hi[a], v[a]);
    CHECK(inside_white_cell(*s.cells, lo, hi));
  }
  CHECK(smalls > 0);
  CHECK(s.selected.front() == 0u);

  CHECK_THROWS_AS(ptas_polygons(items_of({q("0.1")}, {1}), options("0.25")), std::invalid_argument);
  auto p = options("0.25");
  p.mode = Mode::Paper;
  CHECK_THROWS_AS(ptas_polygons({pent}, p), std::invalid_argument);
}

TEST_CASE("polygon classes") {
  auto hex = regular_polygon("h", 6, 0.3);
  auto c = polygon_class({hex});
  CHECK(c.q == 6);
  CHECK(c.f == doctest::Approx(1 / std::cos(std::numbers::pi / 6)).epsilon(1e-5));
  CHECK(c.t == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(c.alpha == doctest::Approx(std::numbers::pi / 6).epsilon(1e-5));
  const double b = polygon_eps_bound(c);
  const double s = std::sin(c.alpha);
  CHECK(b == doctest::Approx(std::min(1 / (8 * c.f), std::numbers::pi * std::numbers::pi * s * s /
                                                          (c.q * c.q * c.t * c.t * (2 + 80 * c.f)))));
  CHECK(fatness({hex, Item::disk("d", q("0.1"), 1)}) == doctest::Approx(c.f));
}

TEST_CASE("augmented packing") {
  auto one = items_of({q("0.5")}, {3});
  auto s = augmented_pack(one, options("0.1"));
  CHECK(s.profit == 3);
  check_solution(one, s);
  CHECK(s.knapsack.sides[0] == q("1.1"));
  CHECK(s.knapsack.sides[1] == 1);

  Rng g(64);
  for (int rep = 0; rep < 15; ++rep) {
    auto items = random_spheres(g, 3, 0.1, 0.45);
    auto a = augmented_pack(items, options("0.1"));
    check_solution(items, a);
    auto opt = brute_force_opt(items);
    if (opt.unknown.empty()) CHECK(a.profit >= opt.profit);
  }

  // volume about 0.3 of radii at most 0.05
  std::vector<Item> many;
  double vol = 0;
  for (int i = 0; vol < 0.29; ++i) {
    many.push_back(Item::disk("m" + std::to_string(i), grid_rational(g, 0.02, 0.05, 1000), 1));
    vol += many.back().volume();
  }
  auto m = augmented_pack(many, options("0.1"));
  check_solution(many, m);
  CHECK(m.selected.size() == many.size());
}

TEST_CASE("three-way split") {
  // no huge sphere: bin B2 stays empty
  auto items = items_of({q("0.2"), q("0.2"), q("0.1")}, {1, 1, 1});
  auto aug = augmented_pack(items, options("0.1"));
  auto split = split_sphere_types(items, aug, q("0.1"));
  CHECK(split.huge_count == 0);
  for (auto t : split.labels) CHECK(t != SphereType::Huge);
  auto s = approx3_spheres(items, options("0.1"));
  check_solution(items, s);
  CHECK(3 * s.profit >= aug.profit);
  CHECK_THROWS_AS(approx3_spheres(items, options("0.2")), std::invalid_argument);

  // closed form of the second radius next to the huge sphere
  for (double e : {0.001, 0.01, 0.05, 0.125}) CHECK(second_radius_bound(e, 2) == doctest::Approx(corner_second_radius(e, 2)).epsilon(1e-12));
  for (int d = 3; d <= 5; ++d) CHECK(second_radius_bound(0.01, d) == doctest::Approx(corner_second_radius(0.01, d)).epsilon(1e-12));
  CHECK(second_radius_bound(0.01, 2) == doctest::Approx(1.5 * 1.01 - std::sqrt(2.02)).epsilon(1e-12));
  CHECK(second_radius_closed_form_2d(0.01) == doctest::Approx(0.09022).epsilon(1e-4));
}

TEST_CASE("three-way split against the oracle") {
  Rng g(65);
  int compared = 0;
  for (int rep = 0; rep < 12; ++rep) {
    auto items = random_spheres(g, 5, 0.1, 0.4);
    auto s = approx3_spheres(items, options("0.1"));
    check_solution(items, s);
    auto opt = brute_force_opt(items);
    if (!opt.unknown.empty()) continue;
    ++compared;
    CHECK(3 * s.profit >= opt.profit);
  }
  CHECK(compared > 0);
}

TEST_CASE("two-bin split with a huge sphere") {
  Rng g(66);
  std::vector<Item> items{Item::disk("H", q("0.4975"), 5)};
  for (int i = 0; i < 12; ++i) items.push_back(Item::disk("s" + std::to_string(i), grid_rational(g, 0.01, 0.04, 1000), 1));
  const Rational eps = q("0.01");
  auto s = approx2eps_spheres(items, options("0.01"));
  check_solution(items, s);
  auto aug = augmented_pack(items, options("0.01"));
  auto split = split_sphere_types(items, aug, eps);
  CHECK(split.huge_count <= 1);
  CHECK(split.slab_hi - split.slab_lo == eps);
  std::size_t t2 = 0;
  for (std::size_t k = 0; k < aug.placements.size(); ++k) {
    if (split.labels[k] != SphereType::Type2 && split.labels[k] != SphereType::Type2p) continue;
    ++t2;
    const auto& it = items[aug.selected[k]];
    const auto c = aug.placements[k].exact_point();
    CHECK((c[0] + it.radius <= split.slab_lo || c[0] - it.radius >= split.slab_hi));
  }
  MESSAGE("type 2 and 2' spheres audited: " << t2);
  auto opt2 = options("0.01");
  opt2.mode = Mode::Paper;
  CHECK_THROWS_AS(approx2eps_spheres(items, opt2), std::invalid_argument);
  CHECK_THROWS_AS(approx2eps_spheres(items_of({q("0.1")}, {1}, 9), options("0.001", 9)), std::invalid_argument);
}

TEST_CASE("unweighted 5/2") {
  auto both = items_of({q("0.25"), q("0.25")}, {});
  auto b = unweighted_52(both, options("0.01"));
  CHECK(b.profit == 2);
  check_solution(both, b);

  auto one = items_of({q("0.3"), q("0.3")}, {});
  CHECK(unweighted_52(one, options("0.01")).profit == 1);

  Rng g(67);
  auto seven = random_spheres(g, 7, 0.05, 0.15, 2, true);
  auto aug = augmented_pack(seven, options("0.01"));
  REQUIRE(aug.profit == 7);
  auto s = unweighted_52(seven, options("0.01"));
  check_solution(seven, s);
  CHECK(s.profit >= 3);

  CHECK_THROWS_WITH_AS(unweighted_52(items_of({q("0.1")}, {2}), options("0.01")), doctest::Contains("unit profits"),
                       std::invalid_argument);
}

TEST_CASE("every pipeline returns a valid packing on random instances") {
  Rng g(68);
  for (int rep = 0; rep < 6; ++rep) {
    auto disks = random_spheres(g, 10, 0.02, 0.3);
    auto unit = random_spheres(g, 8, 0.02, 0.3, 2, true);
    auto small = random_spheres(g, 30, 0.01, 0.05);
    auto polys = random_polygons(g, 8, 0.03, 0.25);
    check_solution(disks, ptas_circles(disks, options("0.25")));
    check_solution(disks, ra_ptas_fat(disks, options("0.1")));
    check_solution(small, small_objects_ptas(small, options("0.05")));
    check_solution(disks, augmented_pack(disks, options("0.1")));
    check_solution(disks, approx3_spheres(disks, options("0.1")));
    check_solution(disks, approx2eps_spheres(disks, options("0.01")));
    check_solution(unit, unweighted_52(unit, options("0.01")));
    check_solution(polys, ptas_polygons(polys, options("0.25")), 0);
  }
}

TEST_CASE("spheres in three dimensions") {
  Rng g(69);
  auto balls = random_spheres(g, 8, 0.05, 0.3, 3);
  check_solution(balls, augmented_pack(balls, options("0.05", 3)));
  check_solution(balls, approx3_spheres(balls, options("1/18", 3)));
  check_solution(balls, ra_ptas_fat(balls, options("0.1", 3)));
  auto o = options("0.25", 3);
  o.allow_3d = true;
  check_solution(balls, ptas_circles(balls, o));
}

}  // TEST_SUITE
