#include "geopack/pipelines.hpp"

#include "pipeline_util.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace geopack {

void finalize(PackingSolution& sol, const std::vector<Item>& items, double tol) {
  sol.profit = 0;
  for (std::size_t i : sol.selected) sol.profit += items[i].profit;
  sol.validity = validate_packing(items, sol.placements, sol.knapsack, tol);
}

double fatness(const std::vector<Item>& items) {
  double f = 1.0;
  for (const auto& it : items)
    if (!it.is_round()) f = std::max(f, it.r_out() / it.r_in());
  return f;
}

using detail::common_dimension;

namespace {
std::vector<std::size_t> all_indices(std::size_t n) { return detail::iota_indices(n); }
}  // namespace

RaResult ra_pack_multi(const std::vector<Item>& items, const std::vector<std::size_t>& pool,
                       const std::vector<std::vector<Rational>>& corners, const Rational& side,
                       const PipelineOptions& opt) {
  RaResult best;
  if (pool.empty() || corners.empty()) return best;
  if (side <= 0) throw std::invalid_argument("cell side must be positive");
  const Rational& eps = opt.eps;
  const std::size_t d = corners[0].size();
  const Rational unit = side * (2 + eps) / (2 * (1 + eps));
  std::vector<Item> sub;
  for (std::size_t i : pool) sub.push_back(items[i]);
  const double f = fatness(sub);

  std::vector<LevelSplit> splits;
  if (opt.mode == Mode::Paper) {
    splits.push_back(level_split_fat(sub, eps, f, false, unit));
  } else {
    const std::size_t nc = desk_candidates(eps, f, 2).size();
    std::vector<LevelSplit> all;
    for (std::size_t c = 0; c < nc; ++c) all.push_back(level_split_desk(sub, eps, f, 2, c, unit));
    std::vector<std::size_t> order = all_indices(all.size());
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return all[a].medium_area < all[b].medium_area; });
    for (std::size_t k = 0; k < std::min(order.size(), std::max<std::size_t>(1, opt.desk_candidates)); ++k)
      splits.push_back(all[order[k]]);
  }

  const Rational side_vol = rational_pow(side, static_cast<unsigned>(d));
  for (const auto& split : splits) {
    RaResult cur;
    auto dp = hierarchical_dp_pack(sub, split, corners);
    cur.dp_levels = static_cast<std::size_t>(split.depth);
    for (std::size_t k = 0; k < dp.selected.size(); ++k) {
      cur.selected.push_back(pool[dp.selected[k]]);
      cur.placements.push_back(dp.placements[k]);
      cur.profit += sub[dp.selected[k]].profit;
    }
    std::vector<std::size_t> remaining;
    for (const auto& [l, v] : split.M) remaining.insert(remaining.end(), v.begin(), v.end());
    std::sort(remaining.begin(), remaining.end());
    for (const auto& c : corners) {
      if (remaining.empty()) break;
      std::vector<Rational> origin = c, size(d, side);
      origin[d - 1] += unit;
      size[d - 1] = side - unit;
      auto med = pack_medium_greedy(sub, remaining, eps * side_vol, origin, size);
      for (std::size_t k = 0; k < med.selected.size(); ++k) {
        cur.selected.push_back(pool[med.selected[k]]);
        cur.placements.push_back(med.placements[k]);
        cur.profit += sub[med.selected[k]].profit;
      }
      std::vector<std::size_t> next;
      for (std::size_t i : remaining)
        if (std::find(med.selected.begin(), med.selected.end(), i) == med.selected.end()) next.push_back(i);
      remaining = std::move(next);
    }
    if (cur.profit > best.profit) best = std::move(cur);
  }
  return best;
}

PackingSolution ra_ptas_fat(const std::vector<Item>& items, const PipelineOptions& opt) {
  const int d = common_dimension(items, opt.d);
  const double f = fatness(items);
  if (opt.mode == Mode::Paper && !(to_double(opt.eps) < 1.0 / (10.0 * f * f)))
    throw std::invalid_argument("eps must be below 1/(10 f^2) = " + std::to_string(1.0 / (10.0 * f * f)));
  PackingSolution sol;
  sol.pipeline = "ra-ptas";
  sol.knapsack = {d, std::vector<Rational>(static_cast<std::size_t>(d), 1 + opt.eps)};
  auto r = ra_pack_multi(items, all_indices(items.size()), {std::vector<Rational>(static_cast<std::size_t>(d), Rational(0))},
                         1 + opt.eps, opt);
  sol.selected = r.selected;
  sol.placements = r.placements;
  finalize(sol, items);
  return sol;
}

PackingSolution small_objects_ptas(const std::vector<Item>& items, const PipelineOptions& opt) {
  const int d = common_dimension(items, opt.d);
  for (const auto& it : items)
    if (it.r_out_sq() > opt.eps * opt.eps)
      throw std::invalid_argument("item '" + it.id + "' has outer radius above eps");
  PackingSolution sol;
  sol.pipeline = "small-ptas";
  sol.knapsack = KnapsackSpec::unit(d);
  auto r = ra_pack_multi(items, all_indices(items.size()), {std::vector<Rational>(static_cast<std::size_t>(d), Rational(0))},
                         Rational(1), opt);
  sol.selected = r.selected;
  sol.placements = r.placements;
  finalize(sol, items);
  return sol;
}

}  // namespace geopack
