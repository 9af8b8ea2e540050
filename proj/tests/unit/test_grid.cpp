#include "doctest.h"

#include "generators.hpp"
#include "oracles.hpp"

#include "geopack/grid.hpp"

#include <cmath>
#include <numbers>

using namespace geopack;
using namespace geopack::testing;

namespace {

Rational q(const char* s) { return parse_rational(s); }

LegalRegion region(const Rational& r, const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1) {
  return {r, {RationalInterval{x0, x1}, RationalInterval{y0, y1}}};
}

LegalRegion point_region(const Rational& r, const Rational& x, const Rational& y) { return region(r, x, x, y, y); }

// Label of a cell from a dense sample of its interior against one disk.
CellLabel sampled_label(const CellMap& m, const std::vector<long long>& cell, double cx, double cy, double r, int k) {
  auto ix = m.cell_interval(cell[0]), iy = m.cell_interval(cell[1]);
  const double x0 = to_double(ix.lo), y0 = to_double(iy.lo), w = to_double(m.eps_cell);
  int in = 0, out = 0;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) {
      const double x = x0 + w * i / k, y = y0 + w * j / k;
      (std::hypot(x - cx, y - cy) < r ? in : out)++;
    }
  if (out == 0) return CellLabel::Black;
  if (in == 0) return CellLabel::White;
  return CellLabel::Gray;
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("grid sizes and the resolution checks") {
  CHECK(build_grid(KnapsackSpec::unit(2), q("0.25")).cell_count() == 16);
  CHECK(build_grid(KnapsackSpec::unit(3), q("0.1")).cell_count() == 1000);
  CHECK(build_grid(KnapsackSpec::unit(2), q("1/3")).cell_count() == 9);
  CHECK_THROWS_AS(build_grid(KnapsackSpec::unit(2), q("0.3")), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(KnapsackSpec::unit(2), q("0")), std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_grid(KnapsackSpec::unit(2), q("1/3"), GridBoundCheck{q("0.1"), 0.5}),
                       doctest::Contains("eps*eps_large^3/240"), std::invalid_argument);
  CHECK_NOTHROW(build_grid(KnapsackSpec::unit(2), Rational(1, 30720), GridBoundCheck{q("0.5"), 0.25}));
  CHECK(build_grid(KnapsackSpec::unit(2), q("0.25")).cell_volume() == q("1/16"));
}

TEST_CASE("no large objects leaves every cell white") {
  auto m = classify_cells_circles(build_grid(KnapsackSpec::unit(2), q("0.25")), {});
  auto c = m.counts();
  CHECK(c.white == 16);
  CHECK(c.gray == 0);
  CHECK(c.black == 0);
  auto p = classify_cells_polygons(build_grid(KnapsackSpec::unit(2), q("0.125")), {});
  CHECK(p.counts().white == 64);
}

TEST_CASE("one centered disk on the 4 x 4 grid") {
  auto m = classify_cells_circles(build_grid(KnapsackSpec::unit(2), q("0.25")), {point_region(q("0.5"), q("0.5"), q("0.5"))});
  auto c = m.counts();
  CHECK(c.black == 4);
  CHECK(c.gray == 12);
  CHECK(c.white == 0);
  for (long long i = 0; i < 4; ++i)
    for (long long j = 0; j < 4; ++j) {
      CHECK(m.label({i, j}) == sampled_label(m, {i, j}, 0.5, 0.5, 0.5, 400));
      CHECK(m.provenance({i, j}) == std::optional<std::size_t>(0));
    }
  CHECK(m.cells_with(CellLabel::Black).size() == 4);
  CHECK_THROWS_AS(m.label({0}), std::invalid_argument);
}

TEST_CASE("white and black cells hold for sampled legal centers") {
  Rng g(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<LegalRegion> large;
    for (int i = 0; i < 3; ++i) {
      const Rational r = grid_rational(g, 0.1, 0.25, 1000);
      const Rational x = grid_rational(g, to_double(r), 0.9 - to_double(r), 100);
      const Rational y = grid_rational(g, to_double(r), 0.9 - to_double(r), 100);
      large.push_back(region(r, x, x + q("0.05"), y, y + q("0.05")));
    }
    auto m = classify_cells_circles(build_grid(KnapsackSpec::unit(2), Rational(1, 40)), large);
    auto c = m.counts();
    CHECK(c.white + c.gray + c.black == 1600);
    CHECK(m.cells_with(CellLabel::Gray).size() == c.gray.convert_to<std::size_t>());
    for (auto want : {CellLabel::White, CellLabel::Black})
      for (const auto& cell : m.cells_with(want)) {
        auto ix = m.cell_interval(cell[0]), iy = m.cell_interval(cell[1]);
        const double x0 = to_double(ix.lo), x1 = to_double(ix.hi), y0 = to_double(iy.lo), y1 = to_double(iy.hi);
        for (int s = 0; s < 100; ++s) {
          if (want == CellLabel::White) {
            for (const auto& L : large) {
              const double cx = to_double(L.centers[0].lo) + u(g) * to_double(L.centers[0].width());
              const double cy = to_double(L.centers[1].lo) + u(g) * to_double(L.centers[1].width());
              const double nx = std::clamp(cx, x0, x1), ny = std::clamp(cy, y0, y1);
              CHECK(std::hypot(nx - cx, ny - cy) > to_double(L.radius) - 1e-12);
            }
          } else {
            const auto& L = large[*m.provenance(cell)];
            const double cx = to_double(L.centers[0].lo) + u(g) * to_double(L.centers[0].width());
            const double cy = to_double(L.centers[1].lo) + u(g) * to_double(L.centers[1].width());
            const double fx = std::max(std::abs(cx - x0), std::abs(cx - x1));
            const double fy = std::max(std::abs(cy - y0), std::abs(cy - y1));
            CHECK(std::hypot(fx, fy) <= to_double(L.radius) + 1e-12);
          }
        }
      }
  }
}

TEST_CASE("shrinking a legal box never turns a white cell gray") {
  Rng g(32);
  const Rational eps_large = q("0.2");
  for (int rep = 0; rep < 10; ++rep) {
    const Rational x = grid_rational(g, 0.2, 0.7, 100), y = grid_rational(g, 0.2, 0.7, 100);
    auto wide = classify_cells_circles(build_grid(KnapsackSpec::unit(2), Rational(1, 50)),
                                       {region(eps_large, x, x + q("0.1"), y, y + q("0.1"))});
    auto narrow = classify_cells_circles(build_grid(KnapsackSpec::unit(2), Rational(1, 50)),
                                         {region(eps_large, x + q("0.02"), x + q("0.07"), y, y + q("0.03"))});
    for (const auto& cell : wide.cells_with(CellLabel::White)) CHECK(narrow.label(cell) == CellLabel::White);
    for (const auto& cell : wide.cells_with(CellLabel::Black)) CHECK(narrow.label(cell) == CellLabel::Black);
  }
}

TEST_CASE("polygon cells: an aligned square and random hexagons") {
  PlacedPolygon sq{{{q("0.25"), q("0.25")}, {q("0.5"), q("0.25")}, {q("0.5"), q("0.5")}, {q("0.25"), q("0.5")}}};
  auto m = classify_cells_polygons(build_grid(KnapsackSpec::unit(2), q("0.125")), {sq});
  auto c = m.counts();
  CHECK(c.black == 4);
  CHECK(c.gray == 0);
  CHECK(c.white == 60);

  Rng g(33);
  for (int rep = 0; rep < 5; ++rep) {
    PlacedPolygon hex{random_convex_vertices(g, 6, 0.3, 0.5, 0.5)};
    auto hm = classify_cells_polygons(build_grid(KnapsackSpec::unit(2), Rational(1, 32)), {hex});
    auto poly = to_double_poly(hex.vertices);
    const int k = 30;
    for (long long i = 0; i < 32; ++i)
      for (long long j = 0; j < 32; ++j) {
        const double x0 = i / 32.0, y0 = j / 32.0, w = 1 / 32.0;
        int in = 0, out = 0;
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            (strictly_inside(poly, x0 + w * (a + 0.5) / k, y0 + w * (b + 0.5) / k) ? in : out)++;
        const CellLabel l = hm.label({i, j});
        if (in > 0 && out > 0) CHECK(l == CellLabel::Gray);
        if (l == CellLabel::Black) CHECK(out == 0);
        if (l == CellLabel::White) CHECK(in == 0);
      }
  }
}

TEST_CASE("white corner regions") {
  auto two = corner_white_regions(q("0.2"), 2);
  REQUIRE(two.size() == 4);
  Rational area = 0;
  for (const auto& b : two) {
    Rational a = 1;
    for (std::size_t k = 0; k < 2; ++k) a *= b.hi[k] - b.lo[k];
    CHECK(a == q("0.0025"));
    area += a;
  }
  CHECK(area == q("0.01"));

  auto three = corner_white_regions(q("0.2"), 3);
  REQUIRE(three.size() == 8);
  Rational vol = 0;
  for (const auto& b : three) vol += (b.hi[0] - b.lo[0]) * (b.hi[1] - b.lo[1]) * (b.hi[2] - b.lo[2]);
  CHECK(vol == q("0.001"));

  const double side = polygon_corner_side(0.1, std::numbers::pi / 10, 5, 1.0);
  CHECK(side == doctest::Approx(2 * std::numbers::pi * 0.1 / 5 * std::sin(std::numbers::pi / 10) / 2).epsilon(1e-14));
  CHECK(side == doctest::Approx(0.01942).epsilon(1e-3));
  auto pc = corner_white_regions_polygons(0.1, std::numbers::pi / 10, 5, 1.0);
  REQUIRE(pc.size() == 4);
  CHECK(to_double(pc[0].hi[0] - pc[0].lo[0]) == doctest::Approx(side));
}

TEST_CASE("corner regions are white for large disks at any legal centers") {
  Rng g(34);
  const Rational eps_large = q("0.2");
  const Rational cell = eps_large / 4 / 5;  // divides the corner side
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<LegalRegion> large;
    for (int i = 0; i < 4; ++i) {
      const Rational r = grid_rational(g, 0.2, 0.3, 1000);
      large.push_back(region(r, r, 1 - r, r, 1 - r));
    }
    auto m = classify_cells_circles(build_grid(KnapsackSpec::unit(2), cell), large);
    const long long n = m.cells_per_axis[0], k = 5;
    for (auto [x, y] : {std::pair{0LL, 0LL}, {n - k, 0LL}, {0LL, n - k}, {n - k, n - k}}) {
      auto c = m.counts_in({x, y}, {x + k, y + k});
      CHECK(c.white == k * k);
    }
  }
}

TEST_CASE("gray area stays under the bound at the required resolution") {
  const Rational eps(1, 2), eps_large(1, 4);
  Rng g(35);
  auto m = build_grid(KnapsackSpec::unit(2), Rational(1, 30720), GridBoundCheck{eps, to_double(eps_large)});
  std::vector<LegalRegion> large;
  const Rational h = m.eps_cell;
  for (int i = 0; i < 2; ++i) {
    const Rational r = grid_rational(g, 0.25, 0.3, 1000);
    const Rational x = grid_rational(g, to_double(r), 1 - to_double(r) - to_double(h), 100);
    const Rational y = grid_rational(g, to_double(r), 1 - to_double(r) - to_double(h), 100);
    large.push_back(region(r, x, x + h, y, y + h));
  }
  m = classify_cells_circles(std::move(m), large);
  auto c = m.counts();
  CHECK(c.white + c.gray + c.black == BigInt(30720) * 30720);
  const Rational gray = Rational(c.gray) * m.cell_volume();
  CHECK(gray <= eps * eps_large * eps_large / 5);
}

TEST_CASE("small disks cut by grid lines have bounded total area") {
  Rng g(36);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double eps_small = 0.01;
  for (long long cells : {10LL, 20LL}) {
    const double ec = 1.0 / cells;
    std::vector<std::array<double, 3>> disks;
    for (int tries = 0; tries < 20000 && disks.size() < 1500; ++tries) {
      const double r = eps_small * (0.3 + 0.7 * u(g));
      const double x = r + (1 - 2 * r) * u(g), y = r + (1 - 2 * r) * u(g);
      bool ok = true;
      for (const auto& d : disks) ok = ok && std::hypot(d[0] - x, d[1] - y) >= d[2] + r;
      if (ok) disks.push_back({x, y, r});
    }
    double cut = 0;
    for (const auto& d : disks) {
      const bool cx = std::floor((d[0] - d[2]) / ec) != std::floor((d[0] + d[2]) / ec);
      const bool cy = std::floor((d[1] - d[2]) / ec) != std::floor((d[1] + d[2]) / ec);
      if (cx || cy) cut += std::numbers::pi * d[2] * d[2];
    }
    CHECK(cut <= 8 * eps_small / ec);
    CHECK(cut > 0);
  }
}

}  // TEST_SUITE
