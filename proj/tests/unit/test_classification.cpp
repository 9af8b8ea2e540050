#include "doctest.h"

#include "generators.hpp"

#include "geopack/classification.hpp"

#include <cmath>

using namespace geopack;
using namespace geopack::testing;

namespace {

// First class k in 1..K with weight <= eps * total, by a plain scan.
int scan_tau(const std::vector<int>& cls, const std::vector<Rational>& w, const Rational& eps, int K) {
  Rational total = 0;
  for (const auto& x : w) total += x;
  for (int k = 1; k <= K; ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i < cls.size(); ++i)
      if (cls[i] == k) s += w[i];
    if (s <= eps * total) return k;
  }
  return -1;
}

}  // namespace

TEST_SUITE("classification") {

TEST_CASE("shifting picks the first light class") {
  // four equal items in classes 1..4, eps = 1/2: class 1 holds a quarter
  auto r = shifting_by_class({1, 2, 3, 4}, {1, 1, 1, 1}, Rational(1, 2));
  CHECK(r.tau == 1);
  CHECK(r.members == std::vector<std::size_t>{0});
  CHECK(r.class_weight == 1);
  CHECK(r.total_weight == 4);

  // all weight in class 1: class 2 is empty and wins
  auto s = shifting_by_class({1, 1, 1}, {2, 3, 5}, Rational(1, 2));
  CHECK(s.tau == 2);
  CHECK(s.members.empty());
  CHECK(s.class_weight == 0);

  CHECK_THROWS_AS(shifting_by_class({1}, {1, 2}, Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(inverse_eps(Rational(0)), std::invalid_argument);
  CHECK(inverse_eps(Rational(3, 10)) == 4);
  CHECK(inverse_eps(Rational(1, 4)) == 4);
}

TEST_CASE("shifting agrees with a direct scan on random classes") {
  Rng g(11);
  for (int rep = 0; rep < 200; ++rep) {
    std::uniform_int_distribution<int> den(2, 12), c(0, 14);
    const Rational eps(1, den(g));
    const int K = inverse_eps(eps);
    std::vector<int> cls;
    std::vector<Rational> w;
    for (int i = 0; i < 1000 / 20; ++i) {
      cls.push_back(c(g));
      w.push_back(random_profit(g, 50));
    }
    auto r = shifting_by_class(cls, w, eps);
    CHECK(r.tau == scan_tau(cls, w, eps, K));
    CHECK(r.tau <= K);
    CHECK(r.class_weight <= eps * r.total_weight);
  }
}

TEST_CASE("shifting partition over explicit thresholds") {
  Rng g(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Rational eps(1, 10);
  std::vector<double> rho;
  for (int k = 0; k <= 10; ++k) rho.push_back(std::pow(0.5, k + 1));
  std::vector<double> keys;
  std::vector<Rational> w;
  for (int i = 0; i < 1000; ++i) {
    keys.push_back(std::pow(u(g), 4));
    w.push_back(random_profit(g));
  }
  auto r = shifting_partition(keys, w, rho, eps);
  std::vector<int> cls;
  for (double k : keys) {
    int c = 0;
    while (c < static_cast<int>(rho.size()) && !(k > rho[static_cast<std::size_t>(c)])) ++c;
    cls.push_back(c);
  }
  CHECK(r.tau == scan_tau(cls, w, eps, 10));
  for (auto m : r.members) CHECK(cls[m] == r.tau);

  CHECK_THROWS_AS(shifting_partition(keys, w, {0.5, 0.25}, eps), std::invalid_argument);
  std::vector<double> bad = rho;
  bad[3] = bad[2];
  CHECK_THROWS_AS(shifting_partition(keys, w, bad, eps), std::invalid_argument);
}

TEST_CASE("symbolic scales compare against tiny radii") {
  Scale s{Rational(1, 2), BigInt(24)};
  CHECK(s.value() == doctest::Approx(std::ldexp(1.0, -24)).epsilon(1e-12));
  CHECK(s.exact() == Rational(1, 1 << 24));
  CHECK(s.below(1e-7));
  CHECK_FALSE(s.below(1e-8));
  CHECK(s.below(Rational(1, (1 << 24) - 1)));
  CHECK_FALSE(s.below(Rational(1, 1 << 24)));  // equal is not below
  Scale huge = s.pow(24 * 24);
  CHECK(huge.value() == 0.0);
  CHECK(huge.below(1e-300));
  CHECK_FALSE(huge.below(0.0));
}

TEST_CASE("size gap with the circle exponent") {
  const Rational eps(1, 2);
  // 0.4 lies in (2^-24, 1/2], 1e-9 in the next class
  std::vector<Item> items{Item::disk("a", parse_rational("0.4"), 1), Item::disk("b", parse_rational("0.000000001"), 1)};
  auto sc = size_gap(items, eps, 24);
  CHECK(sc.tau == 1);
  CHECK(sc.large.empty());
  CHECK(sc.medium == std::vector<std::size_t>{0});
  CHECK(sc.small == std::vector<std::size_t>{1});
  CHECK(sc.eps_large.exact() == Rational(1, 2));
  CHECK(sc.eps_small.exact() == Rational(1, 1 << 24));

  // a heavy 0.4 pushes tau to class 2, which holds 1e-9
  items[0].profit = 3;
  auto heavy = size_gap(items, eps, 24);
  CHECK(heavy.tau == 2);
  CHECK(heavy.large == std::vector<std::size_t>{0});
  CHECK(heavy.medium == std::vector<std::size_t>{1});
  CHECK(heavy.small.empty());

  CHECK_THROWS_AS(size_gap(items, eps, 1), std::invalid_argument);
}

TEST_CASE("size gap leaves medium empty when tau lands between the items") {
  // exponent 2: thresholds 1/2, 1/4, 1/16, ... and 1e-9 sits several classes down
  std::vector<Item> items{Item::disk("a", parse_rational("0.4"), 3), Item::disk("b", parse_rational("0.000000001"), 1)};
  auto sc = size_gap(items, Rational(1, 2), 2);
  CHECK(sc.tau == 2);
  CHECK(sc.large == std::vector<std::size_t>{0});
  CHECK(sc.medium.empty());
  CHECK(sc.small == std::vector<std::size_t>{1});
}

TEST_CASE("size gap partitions every item once and respects the thresholds") {
  Rng g(13);
  for (int rep = 0; rep < 20; ++rep) {
    auto items = random_spheres(g, 100, 0.0001, 0.5);
    for (unsigned e : {2u, 3u, 24u}) {
      auto sc = size_gap(items, Rational(1, 5), e);
      CHECK(sc.large.size() + sc.medium.size() + sc.small.size() == items.size());
      for (auto i : sc.large) CHECK(key_above(items[i], sc.eps_large));
      for (auto i : sc.medium) {
        CHECK_FALSE(key_above(items[i], sc.eps_large));
        CHECK(key_above(items[i], sc.eps_small));
      }
      for (auto i : sc.small) CHECK_FALSE(key_above(items[i], sc.eps_small));
      Rational med = 0, total = 0;
      for (auto i : sc.medium) med += items[i].profit;
      for (const auto& it : items) total += it.profit;
      CHECK(med <= Rational(1, 5) * total);
    }
  }
}

TEST_CASE("fat level split picks the lightest of the candidate classes") {
  Rng g(14);
  const Rational eps(1, 10);
  const double f = 2.0;
  CHECK_THROWS_WITH_AS(level_split_fat({}, eps, f), doctest::Contains("1/(10 f^2)"), std::invalid_argument);
  auto empty = level_split_fat({}, Rational(1, 50), f);
  CHECK(empty.k == 51);
  CHECK(empty.medium_area == 0.0);

  for (int rep = 0; rep < 10; ++rep) {
    auto items = random_polygons(g, 200, 1e-6, 0.02);
    auto s = level_split_fat(items, eps, f, false);
    CHECK(s.beta == doctest::Approx(0.01 / 16));
    CHECK(s.gamma == doctest::Approx(0.1 / 144));
    CHECK(s.dc == doctest::Approx(s.gamma * s.dl));
    CHECK(s.ds == doctest::Approx(s.beta * s.dc));
    CHECK(s.ds < s.dc);
    CHECK(s.dc < s.dl);
    CHECK(s.D.size() == 10);

    // class areas recomputed from the radii
    const double P = std::log(s.beta * s.gamma);
    std::vector<double> area(21, 0.0);
    double total = 0;
    for (const auto& it : items) {
      total += it.volume();
      const long long fl = static_cast<long long>(std::floor(std::log(it.r_in()) / P));
      area[static_cast<std::size_t>(((fl % 20) + 20) % 20 + 1)] += it.volume();
    }
    int best = 11;
    for (int k = 11; k <= 20; ++k)
      if (area[static_cast<std::size_t>(k)] < area[static_cast<std::size_t>(best)]) best = k;
    CHECK(s.k == best);
    CHECK(area[static_cast<std::size_t>(best)] <= 0.1 * total + 1e-15);
  }
}

TEST_CASE("desk candidates slice the band below dc / 2f") {
  auto D = desk_candidates(Rational(1, 4), 1.5, 2);
  REQUIRE(D.size() == 4);
  const double hi = 0.5 / 3.0, lo = 0.25 / 3.0;
  CHECK(D.front()[0] == doctest::Approx(hi));
  CHECK(D.back()[2] == doctest::Approx(lo));
  for (std::size_t j = 0; j < D.size(); ++j) {
    CHECK(D[j][1] == 0.5);
    CHECK(D[j][2] < D[j][0]);
    if (j > 0) CHECK(D[j][0] == doctest::Approx(D[j - 1][2]));
  }
  CHECK_THROWS_AS(desk_candidates(Rational(1, 4), 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(desk_candidates(Rational(1, 4), 0.5, 2), std::invalid_argument);
}

TEST_CASE("desk level split places each item at exactly one level") {
  Rng g(15);
  for (int rep = 0; rep < 20; ++rep) {
    auto items = random_spheres(g, 60, 0.0005, 0.2);
    for (std::size_t c = 0; c < 4; ++c) {
      auto s = level_split_desk(items, Rational(1, 4), 1.0, 2, c);
      std::vector<int> seen(items.size(), 0);
      for (const auto& [l, v] : s.L)
        for (auto i : v) {
          ++seen[i];
          CHECK(items[i].r_in() > s.delta_large[static_cast<std::size_t>(l)]);
          CHECK(to_double(s.cell_side(l)) == doctest::Approx(s.delta_cell[static_cast<std::size_t>(l)]));
          if (l > 1) CHECK(items[i].r_in() <= s.delta_small[static_cast<std::size_t>(l - 1)]);
        }
      for (const auto& [l, v] : s.M)
        for (auto i : v) {
          ++seen[i];
          CHECK(items[i].r_in() <= s.delta_large[static_cast<std::size_t>(l)]);
          CHECK(items[i].r_in() > s.delta_small[static_cast<std::size_t>(l)]);
        }
      for (int x : seen) CHECK(x == 1);
    }
  }
  CHECK_THROWS_AS(level_split_desk({}, Rational(1, 4), 1.0, 2, 4), std::invalid_argument);
}

}  // TEST_SUITE
