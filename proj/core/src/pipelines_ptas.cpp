#include "geopack/pipelines.hpp"

#include "geopack/candidates.hpp"
#include "geopack/polygon_lp.hpp"
#include "pipeline_util.hpp"

#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace geopack {

namespace {

struct LargeOutcome {
  bool feasible = false;
  std::vector<Placement> placements;
  std::vector<LegalRegion> regions;
  std::vector<PlacedPolygon> polygons;
};

// Best candidate over the gap index scan. `place_large` decides a subset.
template <class PlaceLarge, class Classify>
PackingSolution scan_gap_indices(const std::vector<Item>& items, const PipelineOptions& opt, unsigned exponent,
                                 const std::string& name, int d, PlaceLarge&& place_large, Classify&& classify) {
  PackingSolution best;
  best.pipeline = name;
  best.knapsack = KnapsackSpec::unit(d);
  bool have = false;
  const int K = inverse_eps(opt.eps);
  const auto cls = detail::size_classes(items, opt.eps, exponent);
  std::map<std::vector<std::size_t>, LargeOutcome> cache;
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> seen_partitions;
  Diagnostics diag;
  bool capped = false;
  for (int k = 1; k <= K; ++k) {
    std::vector<std::size_t> large, small;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (cls[i] < k) large.push_back(i);
      else if (cls[i] > k) small.push_back(i);
    }
    if (!seen_partitions.insert({large, small}).second) continue;
    Rational small_total = 0;
    for (std::size_t i : small) small_total += items[i].profit;
    const double eps_large = detail::class_threshold(opt.eps, exponent, k - 1).value();
    std::size_t cap = std::min(opt.max_subset, area_subset_cap(eps_large, d));
    // the area cap is a packing bound; max_subset is not
    capped = capped || (large.size() > cap && opt.max_subset < area_subset_cap(eps_large, d));
    auto subsets = subsets_by_profit(items, large, cap);
    std::size_t tried = 0;
    for (const auto& sub : subsets) {
      Rational sub_profit = 0;
      for (std::size_t i : sub) sub_profit += items[i].profit;
      if (have && sub_profit + small_total <= best.profit) break;
      if (detail::volume_bound_sum(items, sub) > 1) continue;
      auto it = cache.find(sub);
      if (it == cache.end()) {
        if (!sub.empty()) {
          if (tried >= opt.subset_budget) {
            capped = true;
            continue;
          }
          ++tried;
          ++diag.candidates_tried;
        }
        it = cache.emplace(sub, place_large(sub, diag)).first;
      }
      const LargeOutcome& lo = it->second;
      if (!lo.feasible) continue;
      const int N = detail::grid_resolution(items, small, opt.grid_cells, opt.eps);
      CellMap map = classify(build_grid(KnapsackSpec::unit(d), Rational(1, N)), lo);
      auto corners = detail::white_corners(map);
      auto ra = ra_pack_multi(items, small, corners, Rational(1, N), opt);
      Rational total = sub_profit + ra.profit;
      if (have && total <= best.profit) continue;
      have = true;
      best.selected = sub;
      best.placements = lo.placements;
      best.selected.insert(best.selected.end(), ra.selected.begin(), ra.selected.end());
      best.placements.insert(best.placements.end(), ra.placements.begin(), ra.placements.end());
      best.profit = total;
      best.diag.cell_counts = map.counts();
      best.diag.cell_volume = map.cell_volume();
      if (opt.keep_cells) best.cells = map;
      best.diag.notes.clear();
      best.diag.notes.push_back("gap index " + std::to_string(k) + ", " + std::to_string(sub.size()) + " large, " +
                                std::to_string(corners.size()) + " white cells of side 1/" + std::to_string(N));
    }
  }
  best.diag.candidates_tried = diag.candidates_tried;
  best.diag.unknown_verdicts = diag.unknown_verdicts;
  for (auto& n : diag.notes) best.diag.notes.push_back(n);
  if (diag.unknown_verdicts > 0 && !have) best.diag.notes.push_back("every candidate was undecided");
  if (capped || diag.unknown_verdicts > 0) best.diag.notes.push_back("large subsets not searched exhaustively: best-found");
  return best;
}

}  // namespace

PackingSolution ptas_circles(const std::vector<Item>& items, const PipelineOptions& opt) {
  for (const auto& it : items)
    if (!it.is_round()) throw std::invalid_argument("ptas_circles takes disks or spheres only");
  const int d = detail::common_dimension(items, opt.d);
  if (d != 2 && !opt.allow_3d) throw std::invalid_argument("ptas_circles runs in d = 2 unless 3-d is enabled");
  if (opt.eps > Rational(1, 2)) throw std::invalid_argument("eps must be at most 1/2");
  const unsigned exponent = opt.gap_exponent ? opt.gap_exponent : (opt.mode == Mode::Paper ? 24u : 2u);
  const std::size_t n = std::max<std::size_t>(1, items.size());
  const KnapsackSpec unit = KnapsackSpec::unit(d);

  auto place = [&](const std::vector<std::size_t>& sub, Diagnostics& diag) {
    LargeOutcome out;
    if (sub.empty()) {
      out.feasible = true;
      return out;
    }
    std::vector<Rational> radii;
    for (std::size_t i : sub) radii.push_back(items[i].radius);
    auto full = solve_branch_and_prune(full_box_system(radii, unit), 1e-9, opt.bp_budget);
    if (full.status == Status::Unknown) ++diag.unknown_verdicts;
    if (full.status != Status::Feasible) return out;
    // lattice guess of step eps/n below the witness, then the guessed system
    const Rational step = opt.eps / Rational(static_cast<long long>(n));
    std::vector<std::vector<Rational>> guesses;
    for (const auto& c : full.centers()) {
      std::vector<Rational> g;
      for (const auto& x : c) g.push_back(step * Rational(floor_ll(x / step)));
      guesses.push_back(std::move(g));
    }
    auto sys = build_quadratic_system(radii, guesses, opt.eps, n, unit);
    auto v = solve_branch_and_prune(sys, 1e-9, opt.bp_budget);
    if (v.status == Status::Unknown) ++diag.unknown_verdicts;
    if (v.status != Status::Feasible) return out;
    v = refine_placement(v, default_alpha_target(n, opt.eps));
    out.feasible = true;
    const auto mids = v.centers();
    for (std::size_t m = 0; m < sub.size(); ++m) {
      out.placements.push_back(v.exact_certified ? Placement::exact(items[sub[m]].id, mids[m])
                                                 : Placement::box(items[sub[m]].id, v.witness[m]));
      out.regions.push_back({radii[m], sys.boxes[m]});
    }
    return out;
  };
  auto classify = [](CellMap map, const LargeOutcome& lo) { return classify_cells_circles(std::move(map), lo.regions); };
  auto sol = scan_gap_indices(items, opt, exponent, "ptas-circles", d, place, classify);
  finalize(sol, items);
  return sol;
}

PolygonClass polygon_class(const std::vector<Item>& items) {
  PolygonClass c;
  c.alpha = std::numbers::pi;
  bool any = false;
  for (const auto& it : items) {
    if (it.is_round()) continue;
    any = true;
    const auto& p = *it.polygon;
    c.f = std::max(c.f, p.r_out / p.r_in);
    for (double a : p.interior_angles) c.alpha = std::min(c.alpha, a - std::numbers::pi / 2);
    c.q = std::max(c.q, static_cast<int>(p.vertices.size()));
    c.t = std::max(c.t, p.max_edge / p.min_edge);
  }
  if (!any) c.alpha = 0.0;
  return c;
}

double polygon_eps_bound(const PolygonClass& c) {
  if (c.alpha <= 0) return 0.0;
  double s = std::sin(c.alpha);
  double b = std::numbers::pi * std::numbers::pi * s * s / (c.q * c.q * c.t * c.t * (2 + 80 * c.f));
  return std::min(1.0 / (8 * c.f), b);
}

PackingSolution ptas_polygons(const std::vector<Item>& items, const PipelineOptions& opt,
                              const std::optional<PolygonClass>& given) {
  for (const auto& it : items)
    if (it.is_round()) throw std::invalid_argument("ptas_polygons takes polygons only");
  const PolygonClass measured = polygon_class(items);
  const PolygonClass cls = given.value_or(measured);
  if (given) {
    for (const auto& it : items) {
      const auto& p = *it.polygon;
      bool ok = p.r_out / p.r_in <= cls.f * (1 + 1e-12) && static_cast<int>(p.vertices.size()) <= cls.q &&
                p.max_edge / p.min_edge <= cls.t * (1 + 1e-12);
      for (double a : p.interior_angles) ok = ok && a >= std::numbers::pi / 2 + cls.alpha - 1e-12;
      if (!ok) throw std::invalid_argument("polygon '" + it.id + "' is outside the given (f, alpha, q, t) class");
    }
  }
  const double bound = polygon_eps_bound(cls);
  std::vector<std::string> pre_notes;
  if (!(to_double(opt.eps) < bound)) {
    std::string msg = "eps is not below the class bound " + std::to_string(bound);
    if (opt.mode == Mode::Paper) throw std::invalid_argument(msg);
    pre_notes.push_back(msg);
  }
  const unsigned exponent = opt.gap_exponent ? opt.gap_exponent : (opt.mode == Mode::Paper ? 20u : 2u);
  const KnapsackSpec unit = KnapsackSpec::unit(2);

  auto place = [&](const std::vector<std::size_t>& sub, Diagnostics& diag) {
    LargeOutcome out;
    if (sub.empty()) {
      out.feasible = true;
      return out;
    }
    std::vector<Item> polys;
    for (std::size_t i : sub) polys.push_back(items[i]);
    auto res = search_polygon_placement(polys, unit);
    if (!res.anchors) {
      if (res.exhausted) ++diag.unknown_verdicts;
      return out;
    }
    out.feasible = true;
    for (std::size_t m = 0; m < sub.size(); ++m) {
      const auto& anchor = (*res.anchors)[m];
      out.placements.push_back(Placement::exact(items[sub[m]].id, anchor));
      out.polygons.push_back({placed_vertices(*items[sub[m]].polygon, anchor)});
    }
    return out;
  };
  auto classify = [](CellMap map, const LargeOutcome& lo) { return classify_cells_polygons(std::move(map), lo.polygons); };
  auto sol = scan_gap_indices(items, opt, exponent, "ptas-polygons", 2, place, classify);
  sol.diag.notes.insert(sol.diag.notes.begin(), pre_notes.begin(), pre_notes.end());
  finalize(sol, items, 0.0);
  return sol;
}

}  // namespace geopack
