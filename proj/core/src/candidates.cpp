#include "geopack/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geopack {

std::vector<Rational> lattice_points(const Rational& step, const Rational& side) {
  if (step <= 0) throw std::invalid_argument("lattice step must be positive");
  std::vector<Rational> pts;
  for (Rational x = 0; x <= side; x += step) pts.push_back(x);
  return pts;
}

std::size_t area_subset_cap(double eps_large, int d) {
  double v = ball_volume(d, eps_large);
  if (!(v > 0)) return static_cast<std::size_t>(-1);
  double c = std::floor(1.0 / v);
  return c > 1e9 ? static_cast<std::size_t>(1e9) : static_cast<std::size_t>(c);
}

std::vector<std::vector<std::size_t>> subsets_by_profit(const std::vector<Item>& items,
                                                        const std::vector<std::size_t>& pool, std::size_t cap,
                                                        std::size_t limit) {
  struct Entry {
    Rational profit;
    std::vector<std::size_t> members;
  };
  std::vector<Entry> all;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start, Rational p) -> void {
    all.push_back({p, cur});
    if (cur.size() == cap) return;
    for (std::size_t k = start; k < pool.size(); ++k) {
      cur.push_back(pool[k]);
      self(self, k + 1, p + items[pool[k]].profit);
      cur.pop_back();
    }
  };
  rec(rec, 0, Rational(0));
  std::stable_sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) {
    if (a.profit != b.profit) return a.profit > b.profit;
    return a.members < b.members;
  });
  std::vector<std::vector<std::size_t>> out;
  for (auto& e : all) {
    if (out.size() >= limit) break;
    out.push_back(std::move(e.members));
  }
  return out;
}

std::size_t enumerate_large_candidates(const std::vector<Item>& items, const SizeClasses& classes, const Rational& eps,
                                       std::size_t n, const CandidateCaps& caps,
                                       const std::function<bool(const LargeCandidate&)>& visit, int d) {
  if (n == 0) n = 1;
  const auto lat = lattice_points(eps / Rational(static_cast<long long>(n)));
  std::size_t cap = std::min(caps.max_subset, area_subset_cap(classes.eps_large.value(), d));
  auto subsets = subsets_by_profit(items, classes.large, cap);
  std::size_t emitted = 0;
  for (const auto& sub : subsets) {
    const std::size_t t = sub.size();
    // one lattice index per coordinate, encoded as a flat counter
    std::vector<std::size_t> idx(t * static_cast<std::size_t>(d), 0);
    auto point_key = [&](std::size_t m) {
      return std::vector<std::size_t>(idx.begin() + static_cast<long>(m * static_cast<std::size_t>(d)),
                                      idx.begin() + static_cast<long>((m + 1) * static_cast<std::size_t>(d)));
    };
    for (;;) {
      bool canonical = true;
      for (std::size_t a = 0; a < t && canonical; ++a)
        for (std::size_t b = a + 1; b < t && canonical; ++b)
          if (items[sub[a]].radius == items[sub[b]].radius && items[sub[a]].kind == items[sub[b]].kind &&
              point_key(b) < point_key(a))
            canonical = false;
      if (canonical) {
        LargeCandidate c;
        c.subset = sub;
        for (std::size_t m = 0; m < t; ++m) {
          std::vector<Rational> g;
          for (int a = 0; a < d; ++a) g.push_back(lat[idx[m * static_cast<std::size_t>(d) + static_cast<std::size_t>(a)]]);
          c.guesses.push_back(std::move(g));
        }
        ++emitted;
        if (!visit(c) || emitted >= caps.max_candidates) return emitted;
      }
      std::size_t p = 0;
      while (p < idx.size() && ++idx[p] == lat.size()) idx[p++] = 0;
      if (p == idx.size()) break;
    }
  }
  return emitted;
}

}  // namespace geopack
