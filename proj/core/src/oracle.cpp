#include "geopack/oracle.hpp"

#include "geopack/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geopack {

TwoPack two_pack_check(const Rational& r1, const Rational& r2, int d) {
  if (r1 <= 0 || r2 <= 0 || 2 * r1 > 1 || 2 * r2 > 1) throw std::invalid_argument("radii must lie in (0, 1/2]");
  TwoPack t;
  t.first.assign(static_cast<std::size_t>(d), r1);
  t.second.assign(static_cast<std::size_t>(d), 1 - r2);
  Rational gap = 1 - r1 - r2, s = r1 + r2;
  t.feasible = gap >= 0 && s * s <= Rational(d) * gap * gap;
  return t;
}

const char* to_string(OracleMethod m) {
  return m == OracleMethod::CornerHeuristic ? "corner-heuristic" : "subset-enumeration+branch-and-prune";
}

OracleResult brute_force_opt(const std::vector<Item>& items, std::size_t cap, std::size_t budget) {
  if (items.size() > cap)
    throw std::invalid_argument("brute force is capped at " + std::to_string(cap) + " items, got " +
                                std::to_string(items.size()));
  OracleResult out;
  if (items.empty()) return out;
  const int d = items[0].dimension;
  for (const auto& it : items)
    if (!it.is_round() || it.dimension != d) throw std::invalid_argument("brute force takes spheres of one dimension");
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < items.size(); ++i) pool.push_back(i);
  const KnapsackSpec unit = KnapsackSpec::unit(d);
  for (const auto& sub : subsets_by_profit(items, pool, items.size())) {
    if (sub.empty()) break;
    double vol = 0.0;
    bool fits = true;
    std::vector<Rational> radii;
    for (std::size_t i : sub) {
      vol += items[i].volume();
      fits = fits && 2 * items[i].radius <= 1;
      radii.push_back(items[i].radius);
    }
    if (!fits || vol > 1.0 + 1e-12) continue;
    if (sub.size() == 2) {
      // two spheres: the corner placement decides exactly
      auto t = two_pack_check(radii[0], radii[1], d);
      if (!t.feasible) continue;
      out.method = OracleMethod::CornerHeuristic;
      out.subset = sub;
      out.witness = {Placement::exact(items[sub[0]].id, t.first), Placement::exact(items[sub[1]].id, t.second)};
      for (std::size_t i : sub) out.profit += items[i].profit;
      return out;
    }
    auto v = solve_branch_and_prune(full_box_system(radii, unit), 1e-9, budget);
    if (v.status == Status::Unknown) {
      out.unknown.push_back(sub);
      continue;
    }
    if (v.status == Status::Infeasible) continue;
    out.method = OracleMethod::SubsetSearch;
    out.subset = sub;
    auto c = v.centers();
    for (std::size_t m = 0; m < sub.size(); ++m) out.witness.push_back(Placement::exact(items[sub[m]].id, c[m]));
    for (std::size_t i : sub) out.profit += items[i].profit;
    return out;
  }
  return out;
}

namespace {

struct Disk {
  double x, y, r;
};

bool clear_of(double x, double y, double r, const std::vector<Disk>& obs) {
  for (const auto& o : obs) {
    double dx = x - o.x, dy = y - o.y, s = r + o.r;
    if (dx * dx + dy * dy < s * s * (1 - 1e-12)) return false;
  }
  return true;
}

// A center for a disk of radius r in the unit square avoiding the obstacles.
std::optional<std::pair<double, double>> free_point(double r, const std::vector<Disk>& obs) {
  const double lo = r, hi = 1 - r;
  if (lo > hi) return std::nullopt;
  std::vector<std::pair<double, double>> cand{{lo, lo}, {lo, hi}, {hi, lo}, {hi, hi}};
  for (const auto& o : obs) {
    const double R = o.r + r;
    for (double line : {lo, hi}) {
      double h = R * R - (line - o.x) * (line - o.x);
      if (h >= 0) {
        double s = std::sqrt(h);
        cand.emplace_back(line, o.y - s);
        cand.emplace_back(line, o.y + s);
      }
      h = R * R - (line - o.y) * (line - o.y);
      if (h >= 0) {
        double s = std::sqrt(h);
        cand.emplace_back(o.x - s, line);
        cand.emplace_back(o.x + s, line);
      }
    }
  }
  for (std::size_t a = 0; a < obs.size(); ++a)
    for (std::size_t b = a + 1; b < obs.size(); ++b) {
      const double R1 = obs[a].r + r, R2 = obs[b].r + r;
      const double dx = obs[b].x - obs[a].x, dy = obs[b].y - obs[a].y, D = std::hypot(dx, dy);
      if (D == 0 || D > R1 + R2 || D < std::abs(R1 - R2)) continue;
      const double t = (R1 * R1 - R2 * R2 + D * D) / (2 * D), h = std::sqrt(std::max(0.0, R1 * R1 - t * t));
      const double mx = obs[a].x + t * dx / D, my = obs[a].y + t * dy / D;
      cand.emplace_back(mx - h * dy / D, my + h * dx / D);
      cand.emplace_back(mx + h * dy / D, my - h * dx / D);
    }
  for (auto [x, y] : cand) {
    if (x < lo - 1e-12 || x > hi + 1e-12 || y < lo - 1e-12 || y > hi + 1e-12) continue;
    x = std::clamp(x, lo, hi);
    y = std::clamp(y, lo, hi);
    if (clear_of(x, y, r, obs)) return std::make_pair(x, y);
  }
  return std::nullopt;
}

std::vector<double> axis_lattice(double lo, double hi, double step) {
  std::vector<double> v;
  if (lo > hi) return v;
  for (long long k = 0;; ++k) {
    double x = lo + static_cast<double>(k) * step;
    if (x > hi) break;
    v.push_back(x);
  }
  if (v.back() < hi) v.push_back(hi);
  return v;
}

}  // namespace

std::optional<std::vector<std::vector<double>>> lattice_search(const std::vector<double>& radii, double step) {
  const std::size_t n = radii.size();
  if (n > 3) throw std::invalid_argument("lattice search handles at most three disks");
  if (!(step > 0)) throw std::invalid_argument("lattice step must be positive");
  for (double r : radii)
    if (!(r > 0) || 2 * r > 1) return std::nullopt;
  std::vector<std::vector<double>> centers(n, std::vector<double>(2, 0.0));
  if (n == 0) return centers;
  auto finish = [&](const std::vector<std::size_t>& placed, const std::vector<Disk>& obs,
                    const std::vector<std::size_t>& rest) -> bool {
    if (rest.empty()) {
      for (std::size_t k = 0; k < placed.size(); ++k) centers[placed[k]] = {obs[k].x, obs[k].y};
      return true;
    }
    auto p = free_point(radii[rest[0]], obs);
    if (!p) return false;
    for (std::size_t k = 0; k < placed.size(); ++k) centers[placed[k]] = {obs[k].x, obs[k].y};
    centers[rest[0]] = {p->first, p->second};
    return true;
  };
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < n; ++k)
        if (k != b && k != l) rest.push_back(k);
      const double rb = radii[b], rl = radii[l];
      if (b == l) {
        Disk corner{rb, rb, rb};
        if (rest.size() <= 1) {
          if (finish({b}, {corner}, rest)) return centers;
          continue;
        }
        const double r0 = radii[rest[0]];
        auto xs = axis_lattice(r0, 1 - r0, step);
        for (double x : xs)
          for (double y : xs) {
            if (!clear_of(x, y, r0, {corner})) continue;
            if (finish({b, rest[0]}, {corner, {x, y, r0}}, {rest[1]})) return centers;
          }
      } else {
        auto xs = axis_lattice(rb, 1 - rb, step);
        auto ys = axis_lattice(rl, 1 - rl, step);
        for (double x : xs) {
          Disk db{x, rb, rb};
          for (double y : ys) {
            if (!clear_of(rl, y, rl, {db})) continue;
            if (finish({b, l}, {db, {rl, y, rl}}, rest)) return centers;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace geopack
