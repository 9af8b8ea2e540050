#include "doctest.h"

#include "generators.hpp"
#include "oracles.hpp"

#include "geopack/candidates.hpp"
#include "geopack/feasibility.hpp"
#include "geopack/oracle.hpp"
#include "geopack/polygon_lp.hpp"

#include <cmath>

using namespace geopack;
using namespace geopack::testing;

namespace {

const KnapsackSpec unit2 = KnapsackSpec::unit(2);

Rational q(const char* s) { return parse_rational(s); }

// Lattice point of step h at or below x.
Rational snap(const Rational& x, const Rational& h) { return Rational(floor_ll(x / h)) * h; }

std::vector<Placement> disks_at(const std::vector<std::vector<Rational>>& c) {
  std::vector<Placement> out;
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(Placement::exact("c" + std::to_string(i), c[i]));
  return out;
}

std::vector<Item> disks(const std::vector<Rational>& r) {
  std::vector<Item> out;
  for (std::size_t i = 0; i < r.size(); ++i) out.push_back(Item::disk("c" + std::to_string(i), r[i], 1));
  return out;
}

}  // namespace

TEST_SUITE("feasibility") {

TEST_CASE("quadratic system boxes clamp to the container") {
  const Rational eps(1, 10);
  auto one = build_quadratic_system({q("0.5")}, {{q("0.49"), q("0.49")}}, eps, 10, unit2);
  CHECK_FALSE(one.trivially_infeasible);
  for (const auto& iv : one.boxes[0]) {
    CHECK(iv.lo == q("0.5"));
    CHECK(iv.hi == q("0.5"));
  }
  auto v = solve_branch_and_prune(one, 1e-9);
  CHECK(v.status == Status::Feasible);
  CHECK(v.centers()[0] == std::vector<Rational>{q("0.5"), q("0.5")});

  auto two = build_quadratic_system({q("0.3"), q("0.3")}, {{q("0.3"), q("0.3")}, {q("0.6"), q("0.6")}}, eps, 10, unit2);
  CHECK(two.threshold(0, 1) == q("0.36"));
  CHECK(two.constraint_count() == 1 + 8);

  auto big = build_quadratic_system({q("0.6")}, {{q("0.5"), q("0.5")}}, eps, 10, unit2);
  CHECK(big.trivially_infeasible);
  CHECK(solve_branch_and_prune(big, 1e-9).status == Status::Infeasible);
}

TEST_CASE("three disks guessed near three corners") {
  const Rational eps(1, 10), h(1, 100);
  const std::vector<std::vector<Rational>> packing{{q("0.2"), q("0.2")}, {q("0.8"), q("0.2")}, {q("0.2"), q("0.8")}};
  std::vector<std::vector<Rational>> guesses;
  for (const auto& c : packing) guesses.push_back({snap(c[0], h), snap(c[1], h)});
  auto sys = build_quadratic_system({q("0.2"), q("0.2"), q("0.2")}, guesses, eps, 10, unit2);
  CHECK_FALSE(sys.trivially_infeasible);
  CHECK(sys.size() * (sys.size() - 1) / 2 == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < 2; ++a) {
      CHECK(sys.boxes[i][a].lo <= packing[i][a]);
      CHECK(packing[i][a] <= sys.boxes[i][a].hi);
    }
  CHECK(certify_centers(sys, packing));
  auto v = solve_branch_and_prune(sys, 1e-9);
  REQUIRE(v.status == Status::Feasible);
  CHECK(validate_packing(disks({q("0.2"), q("0.2"), q("0.2")}), disks_at(v.centers()), unit2, 0).valid);
}

TEST_CASE("two disks around the diagonal threshold") {
  auto thirty = full_box_system({q("0.3"), q("0.3")}, unit2);
  CHECK(solve_branch_and_prune(thirty, 1e-9).status == Status::Infeasible);

  const Rational eps(1, 10), h(1, 100);
  auto sys = build_quadratic_system({q("0.29"), q("0.29")}, {{q("0.29"), q("0.29")}, {q("0.71"), q("0.71")}}, eps, 10,
                                    unit2);
  auto v = solve_branch_and_prune(sys, 1e-9);
  REQUIRE(v.status == Status::Feasible);
  CHECK(v.max_width() <= 1e-9);
  CHECK(validate_packing(disks({q("0.29"), q("0.29")}), disks_at(v.centers()), unit2, 0).valid);

  CHECK_THROWS_AS(solve_branch_and_prune(sys, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_branch_and_prune(sys, -1.0), std::invalid_argument);
}

TEST_CASE("refinement narrows witnesses and keeps them nested") {
  auto sys = full_box_system({q("0.25"), q("0.25")}, unit2);
  auto v = solve_branch_and_prune(sys, 1e-3);
  REQUIRE(v.status == Status::Feasible);
  auto r = refine_placement(v, Rational(1, 1000000000000LL));
  CHECK(r.max_width() <= 1e-12);
  auto c = r.centers();
  const double dx = to_double(c[0][0] - c[1][0]), dy = to_double(c[0][1] - c[1][1]);
  CHECK(std::hypot(dx, dy) >= 0.5 - 1e-11);
  CHECK(certify_centers(sys, c));

  auto r2 = refine_placement(r, Rational(1, 2000000000000LL));
  auto r4 = refine_placement(r2, Rational(1, 4000000000000LL));
  CHECK(r4.max_width() <= 0.25e-12);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t a = 0; a < 2; ++a) {
      CHECK(r.witness[i][a].lo <= r2.witness[i][a].lo);
      CHECK(r2.witness[i][a].hi <= r.witness[i][a].hi);
      CHECK(r2.witness[i][a].lo <= r4.witness[i][a].lo);
      CHECK(r4.witness[i][a].hi <= r2.witness[i][a].hi);
    }

  // a point witness stays put
  auto one = solve_branch_and_prune(build_quadratic_system({q("0.5")}, {{q("0.5"), q("0.5")}}, 1, 1, unit2), 1e-9);
  auto same = refine_placement(one, Rational(1, 1000));
  CHECK(same.centers() == one.centers());

  CHECK(default_alpha_target(10, Rational(1, 10)) == Rational(1) / Rational(boost::multiprecision::pow(BigInt(2), 100)));
  CHECK(to_double(default_alpha_target(1, Rational(1, 2))) == doctest::Approx(1e-12));
}

TEST_CASE("verdicts agree with the lattice oracle and validate") {
  Rng g(21);
  std::size_t feasible = 0, infeasible = 0;
  for (int rep = 0; rep < 60; ++rep) {
    std::uniform_int_distribution<int> tt(2, 3);
    const int t = tt(g);
    std::vector<Rational> r;
    std::vector<double> rd;
    for (int i = 0; i < t; ++i) {
      r.push_back(grid_rational(g, 0.15, t == 2 ? 0.34 : 0.26, 1000));
      rd.push_back(to_double(r.back()));
    }
    auto v = solve_branch_and_prune(full_box_system(r, unit2), 1e-9, 200000);
    auto lat = lattice_search(rd, 2e-3);
    if (v.status == Status::Feasible) {
      ++feasible;
      CHECK(validate_packing(disks(r), disks_at(v.centers()), unit2, 1e-9).valid);
    } else if (v.status == Status::Infeasible) {
      ++infeasible;
      CHECK_FALSE(lat.has_value());
    }
    if (lat) CHECK(v.status != Status::Infeasible);
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}

TEST_CASE("widening the guess boxes never loses feasibility") {
  Rng g(22);
  const Rational eps(1, 5);
  for (int rep = 0; rep < 30; ++rep) {
    std::vector<Rational> r{grid_rational(g, 0.1, 0.3, 100), grid_rational(g, 0.1, 0.3, 100)};
    std::vector<std::vector<Rational>> guess;
    for (int i = 0; i < 2; ++i) guess.push_back({grid_rational(g, 0, 1, 10), grid_rational(g, 0, 1, 10)});
    auto narrow = solve_branch_and_prune(build_quadratic_system(r, guess, eps, 2, unit2), 1e-9);
    auto wide = solve_branch_and_prune(build_quadratic_system(r, guess, eps, 1, unit2), 1e-9);
    auto full = solve_branch_and_prune(full_box_system(r, unit2), 1e-9);
    if (narrow.status == Status::Feasible) {
      CHECK(wide.status != Status::Infeasible);
      CHECK(full.status != Status::Infeasible);
    }
  }
}

TEST_CASE("large candidates: counts over subsets and guesses") {
  std::vector<Item> items{Item::disk("a", q("0.3"), 2), Item::disk("b", q("0.25"), 1)};
  SizeClasses sc;
  sc.eps_large = Scale{Rational(1, 10), BigInt(1)};
  const Rational eps(1, 2);
  CandidateCaps caps;
  auto count = [&](const SizeClasses& c) {
    return enumerate_large_candidates(items, c, eps, 1, caps, [](const LargeCandidate&) { return true; });
  };

  std::vector<LargeCandidate> seen;
  auto n0 = enumerate_large_candidates(items, sc, eps, 1, caps, [&](const LargeCandidate& c) {
    seen.push_back(c);
    return true;
  });
  CHECK(n0 == 1);
  CHECK(seen.at(0).subset.empty());

  sc.large = {0};
  CHECK(count(sc) == 1 + 9);
  CHECK(lattice_points(Rational(1, 2)).size() == 3);

  sc.large = {0, 1};
  CHECK(count(sc) == 1 + 9 + 9 + 81);
  seen.clear();
  enumerate_large_candidates(items, sc, eps, 1, caps, [&](const LargeCandidate& c) {
    seen.push_back(c);
    return true;
  });
  Rational prev = 100;
  for (const auto& c : seen) {
    Rational p = 0;
    for (auto i : c.subset) p += items[i].profit;
    CHECK(p <= prev);
    prev = p;
  }

  items[1].radius = items[0].radius;
  CHECK(count(sc) == 1 + 9 + 9 + 45);

  caps.max_candidates = 7;
  CHECK(count(sc) == 7);
  CHECK(area_subset_cap(0.5) == 1);
}

TEST_CASE("polygon placement by exact linear programming") {
  auto pent = regular_polygon("p", 5, 0.3);
  auto one = search_polygon_placement({pent}, unit2);
  REQUIRE(one.anchors);
  auto vs = placed_vertices(*pent.polygon, (*one.anchors)[0]);
  CHECK(inside_unit_box(vs));

  auto h0 = regular_polygon("h0", 6, 0.25), h1 = regular_polygon("h1", 6, 0.25);
  auto ok = polygon_lp_place({h0, h1}, {SideChoice{0, 0}}, unit2);
  auto found = search_polygon_placement({h0, h1}, unit2);
  REQUIRE(found.anchors);
  auto a = placed_vertices(*h0.polygon, (*found.anchors)[0]);
  auto b = placed_vertices(*h1.polygon, (*found.anchors)[1]);
  CHECK_FALSE(exact_sat_overlap(a, b));
  CHECK(inside_unit_box(a));
  CHECK(inside_unit_box(b));
  if (ok) {
    CHECK_FALSE(exact_sat_overlap(placed_vertices(*h0.polygon, (*ok)[0]), placed_vertices(*h1.polygon, (*ok)[1])));
  }

  // inradius 0.35: every direction needs 1.4 of width, the square offers at most sqrt 2
  const double R = 0.35 / std::cos(std::numbers::pi / 6);
  auto H0 = regular_polygon("H0", 6, R), H1 = regular_polygon("H1", 6, R);
  REQUIRE(H0.r_in() > 0.3);
  auto none = search_polygon_placement({H0, H1}, unit2);
  CHECK_FALSE(none.anchors);
  CHECK_FALSE(none.exhausted);
  for (std::size_t e = 0; e < 6; ++e)
    for (int owner = 0; owner < 2; ++owner) CHECK_FALSE(polygon_lp_place({H0, H1}, {SideChoice{owner, e}}, unit2));
}

TEST_CASE("exact simplex") {
  // max x + y subject to x + 2y <= 4, 3x + y <= 6
  auto r = simplex_max({{1, 2}, {3, 1}}, {4, 6}, {1, 1});
  REQUIRE(r.kind == LPResult::Kind::Optimal);
  CHECK(r.value == Rational(14, 5));
  CHECK(r.x == std::vector<Rational>{Rational(8, 5), Rational(6, 5)});
  CHECK(simplex_max({{-1, 0}}, {-1}, {0, 0}).kind == LPResult::Kind::Optimal);
  CHECK(simplex_max({{1, 0}, {-1, 0}}, {1, -2}, {1, 0}).kind == LPResult::Kind::Infeasible);
  CHECK(simplex_max({{-1, 1}}, {1}, {1, 0}).kind == LPResult::Kind::Unbounded);
}

}  // TEST_SUITE
