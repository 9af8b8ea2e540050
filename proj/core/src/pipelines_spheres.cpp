#include "geopack/pipelines.hpp"

#include "geopack/candidates.hpp"
#include "pipeline_util.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace geopack {

namespace {

void require_round(const std::vector<Item>& items, const char* who) {
  for (const auto& it : items)
    if (!it.is_round()) throw std::invalid_argument(std::string(who) + " takes spheres only");
}

KnapsackSpec box_of(int d, const Rational& first) {
  KnapsackSpec k = KnapsackSpec::unit(d);
  k.sides[0] = first;
  return k;
}

Rational axis0(const Placement& p) { return p.exact_point()[0]; }

}  // namespace

PackingSolution augmented_pack(const std::vector<Item>& items, const PipelineOptions& opt) {
  require_round(items, "augmented_pack");
  const int d = detail::common_dimension(items, opt.d);
  const Rational& eps = opt.eps;
  const Rational width = 1 + eps / 2;
  PackingSolution sol;
  sol.pipeline = "augmented";
  sol.knapsack = box_of(d, 1 + eps);

  // double shifting over 2 ceil(1/eps) classes: weight and volume both <= eps of the total
  const unsigned exponent = opt.gap_exponent ? opt.gap_exponent : (opt.mode == Mode::Paper ? 24u : 2u);
  const int K2 = 2 * inverse_eps(eps);
  std::vector<int> cls(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    int c = 0;
    while (c <= K2 && !key_above(items[i], detail::class_threshold(eps, exponent, c))) ++c;
    cls[i] = c;
  }
  Rational W = 0;
  double V = 0.0;
  std::vector<Rational> w(static_cast<std::size_t>(K2) + 2, Rational(0));
  std::vector<double> v(static_cast<std::size_t>(K2) + 2, 0.0);
  for (std::size_t i = 0; i < items.size(); ++i) {
    W += items[i].profit;
    V += items[i].volume();
    if (cls[i] >= 1 && cls[i] <= K2) {
      w[static_cast<std::size_t>(cls[i])] += items[i].profit;
      v[static_cast<std::size_t>(cls[i])] += items[i].volume();
    }
  }
  int tau = 1;
  for (int k = 1; k <= K2; ++k)
    if (w[static_cast<std::size_t>(k)] <= eps * W && v[static_cast<std::size_t>(k)] <= to_double(eps) * V) {
      tau = k;
      break;
    }

  std::vector<std::size_t> large, medium, small;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (2 * items[i].radius > 1) continue;
    if (cls[i] < tau) large.push_back(i);
    else if (cls[i] == tau) medium.push_back(i);
    else small.push_back(i);
  }

  // peeled class: NFDH of bounding cubes into the slab [1 + eps/2, 1 + eps]
  std::vector<Rational> sides;
  for (std::size_t i : medium) sides.push_back(2 * items[i].radius);
  std::vector<Rational> slab(static_cast<std::size_t>(d), Rational(1));
  slab[0] = eps / 2;
  std::vector<std::size_t> med_sel;
  std::vector<Placement> med_pl;
  Rational med_profit = 0;
  if (!sides.empty() && (d == 2 || d == 3)) {
    auto nf = nfdh_pack_squares(slab, sides);
    for (const auto& sp : nf.placed) {
      const Item& it = items[medium[sp.index]];
      std::vector<Rational> corner = sp.corner;
      corner[0] += width;
      med_sel.push_back(medium[sp.index]);
      med_pl.push_back(Placement::exact(it.id, placement_in_square(it, corner, sides[sp.index])));
      med_profit += it.profit;
    }
  }
  Rational small_total = 0;
  for (std::size_t i : small) small_total += items[i].profit;

  const std::size_t cap = large.size() <= 10 ? large.size() : opt.max_subset;
  const std::size_t budget = large.size() <= 10 ? std::max<std::size_t>(opt.subset_budget, 1024) : opt.subset_budget;
  auto subsets = subsets_by_profit(items, large, cap);
  const KnapsackSpec unit = KnapsackSpec::unit(d);
  const KnapsackSpec wide = box_of(d, width);
  bool have = false;
  std::size_t tried = 0;
  for (const auto& sub : subsets) {
    Rational sub_profit = 0;
    for (std::size_t i : sub) sub_profit += items[i].profit;
    if (have && sub_profit + small_total + med_profit <= sol.profit) break;
    if (detail::volume_bound_sum(items, sub) > width) continue;
    std::vector<std::vector<Rational>> centers;
    if (!sub.empty()) {
      if (tried >= budget) continue;
      ++tried;
      ++sol.diag.candidates_tried;
      std::vector<Rational> radii;
      for (std::size_t i : sub) radii.push_back(items[i].radius);
      auto verdict = solve_branch_and_prune(full_box_system(radii, unit), 1e-9, opt.bp_budget);
      if (verdict.status != Status::Feasible)
        verdict = solve_branch_and_prune(full_box_system(radii, wide), 1e-9, opt.bp_budget);
      if (verdict.status == Status::Unknown) ++sol.diag.unknown_verdicts;
      if (verdict.status != Status::Feasible) continue;
      centers = verdict.centers();
    }
    std::vector<LegalRegion> regions;
    for (std::size_t m = 0; m < sub.size(); ++m) {
      LegalRegion r{items[sub[m]].radius, {}};
      for (const auto& x : centers[m]) r.centers.push_back({x, x});
      regions.push_back(std::move(r));
    }
    RaResult ra;
    CellMap map;
    if (!small.empty()) {
      const int N = detail::grid_resolution(items, small, opt.grid_cells, eps);
      map = classify_cells_circles(build_grid(unit, Rational(1, N)), regions);
      ra = ra_pack_multi(items, small, detail::white_corners(map), Rational(1, N), opt);
    }
    Rational total = sub_profit + ra.profit + med_profit;
    if (have && total <= sol.profit) continue;
    have = true;
    sol.profit = total;
    sol.selected.clear();
    sol.placements.clear();
    for (std::size_t m = 0; m < sub.size(); ++m) {
      sol.selected.push_back(sub[m]);
      sol.placements.push_back(Placement::exact(items[sub[m]].id, centers[m]));
    }
    sol.selected.insert(sol.selected.end(), ra.selected.begin(), ra.selected.end());
    sol.placements.insert(sol.placements.end(), ra.placements.begin(), ra.placements.end());
    sol.selected.insert(sol.selected.end(), med_sel.begin(), med_sel.end());
    sol.placements.insert(sol.placements.end(), med_pl.begin(), med_pl.end());
    if (opt.keep_cells && !small.empty()) sol.cells = map;
  }
  // whole-pool candidates: every non-peeled item through ra_pack_multi on the unit cube, and
  // NFDH of bounding cubes in [0, 1 + eps/2] x 1^(d-1)
  std::vector<std::size_t> rest = large;
  rest.insert(rest.end(), small.begin(), small.end());
  auto consider = [&](std::vector<std::size_t> sel, std::vector<Placement> pl, Rational profit) {
    profit += med_profit;
    if (have && profit <= sol.profit) return;
    have = true;
    sol.profit = profit;
    sol.selected = std::move(sel);
    sol.placements = std::move(pl);
    sol.selected.insert(sol.selected.end(), med_sel.begin(), med_sel.end());
    sol.placements.insert(sol.placements.end(), med_pl.begin(), med_pl.end());
    sol.cells.reset();
  };
  if (!rest.empty()) {
    auto ra = ra_pack_multi(items, rest, {std::vector<Rational>(static_cast<std::size_t>(d), Rational(0))},
                            Rational(1), opt);
    consider(ra.selected, ra.placements, ra.profit);
  }
  if (!rest.empty() && (d == 2 || d == 3)) {
    std::vector<Rational> cube;
    for (std::size_t i : rest) cube.push_back(2 * items[i].radius);
    std::vector<Rational> box(static_cast<std::size_t>(d), Rational(1));
    box[0] = width;
    auto nf = nfdh_pack_squares(box, cube);
    std::vector<std::size_t> sel;
    std::vector<Placement> pl;
    Rational profit = 0;
    for (const auto& sp : nf.placed) {
      const Item& it = items[rest[sp.index]];
      sel.push_back(rest[sp.index]);
      pl.push_back(Placement::exact(it.id, placement_in_square(it, sp.corner, cube[sp.index])));
      profit += it.profit;
    }
    consider(sel, pl, profit);
  }

  sol.diag.notes.push_back("shift class " + std::to_string(tau) + ": " + std::to_string(large.size()) + " large, " +
                           std::to_string(medium.size()) + " peeled, " + std::to_string(small.size()) + " small");
  if (large.size() > 10 || tried >= budget || sol.diag.unknown_verdicts > 0)
    sol.diag.notes.push_back("large subsets not searched exhaustively: best-found");
  finalize(sol, items);
  return sol;
}

const char* to_string(SphereType t) {
  switch (t) {
    case SphereType::Type1: return "type1";
    case SphereType::Type2: return "type2";
    case SphereType::Type2p: return "type2'";
    case SphereType::Type3: return "type3";
    case SphereType::Type3p: return "type3'";
    case SphereType::Huge: return "huge";
  }
  return "?";
}

SphereTypeSplit split_sphere_types(const std::vector<Item>& items, const PackingSolution& aug, const Rational& eps) {
  SphereTypeSplit s;
  s.plane_left = eps;
  s.plane_right = 1;
  s.slab_lo = Rational(1, 2);
  s.slab_hi = Rational(1, 2) + eps;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i].id, i);
  for (const auto& p : aug.placements) {
    const Item& it = items.at(index.at(p.item_id));
    Rational x = axis0(p);
    Rational lo = x - it.radius, hi = x + it.radius;
    bool hit_l = lo < s.plane_left && s.plane_left < hi;
    bool hit_r = lo < s.plane_right && s.plane_right < hi;
    SphereType t;
    // diameter of at least 1 - eps is huge wherever it sits; a wall-flush one crosses only one plane
    if ((hit_l && hit_r) || it.radius * 2 >= 1 - eps) t = SphereType::Huge;
    else if (hit_l) t = SphereType::Type2;
    else if (hit_r) t = SphereType::Type2p;
    else if (hi <= s.plane_left) t = SphereType::Type3;
    else if (lo >= s.plane_right) t = SphereType::Type3p;
    else t = SphereType::Type1;
    if (t == SphereType::Huge) ++s.huge_count;
    s.labels.push_back(t);
  }
  return s;
}

namespace {

struct Bin {
  std::string name;
  std::vector<std::size_t> selected;
  std::vector<Placement> placements;
};

std::size_t index_of(const std::vector<Item>& items, const std::string& id) {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].id == id) return i;
  throw std::invalid_argument("unknown item id '" + id + "'");
}

void add(Bin& b, std::size_t item, Placement p) {
  b.selected.push_back(item);
  b.placements.push_back(std::move(p));
}

Placement shifted(const Placement& p, const Rational& dx) {
  std::vector<Rational> delta(p.dimension(), Rational(0));
  delta[0] = -dx;
  return Placement::exact(p.item_id, p.translated(delta).exact_point());
}

// The huge sphere alone, moved inside [r, 1 - r] along the augmented axis.
Placement clamp_huge(const Item& it, const Placement& p) {
  auto x = p.exact_point();
  if (x[0] > 1 - it.radius) x[0] = 1 - it.radius;
  if (x[0] < it.radius) x[0] = it.radius;
  return Placement::exact(p.item_id, x);
}

PackingSolution best_bin(const std::vector<Item>& items, const std::vector<Bin>& bins, const std::string& pipeline,
                         int d, Diagnostics diag) {
  PackingSolution best;
  bool have = false;
  for (const auto& b : bins) {
    PackingSolution s;
    s.pipeline = pipeline;
    s.knapsack = KnapsackSpec::unit(d);
    s.selected = b.selected;
    s.placements = b.placements;
    finalize(s, items);
    if (!s.validity.valid) {
      diag.notes.push_back("bin " + b.name + " failed validation and was skipped");
      continue;
    }
    if (!have || s.profit > best.profit) {
      best = std::move(s);
      best.diag.notes.clear();
      best.diag.notes.push_back("returned bin " + b.name);
      have = true;
    }
  }
  if (!have) {
    best.pipeline = pipeline;
    best.knapsack = KnapsackSpec::unit(d);
    finalize(best, items);
  }
  auto notes = best.diag.notes;
  best.diag = std::move(diag);
  best.diag.notes.insert(best.diag.notes.end(), notes.begin(), notes.end());
  return best;
}

void check_uniqueness_range(const Rational& eps, int d) {
  if (eps * 2 * d * d > 1) throw std::invalid_argument("eps must be at most 1/(2 d^2) = 1/" + std::to_string(2 * d * d));
}

// Bins of the three-way split: B1 = types 2', 3' shifted left by eps; B3 = types 1, 2, 3; B2 = the huge sphere.
std::vector<Bin> three_way(const std::vector<Item>& items, const PackingSolution& aug, const SphereTypeSplit& split,
                           const Rational& eps) {
  Bin b1{"B1", {}, {}}, b2{"B2", {}, {}}, b3{"B3", {}, {}};
  for (std::size_t k = 0; k < aug.placements.size(); ++k) {
    const Placement& p = aug.placements[k];
    std::size_t i = index_of(items, p.item_id);
    switch (split.labels[k]) {
      case SphereType::Type2p:
      case SphereType::Type3p: add(b1, i, shifted(p, eps)); break;
      case SphereType::Huge: add(b2, i, clamp_huge(items[i], p)); break;
      default: add(b3, i, Placement::exact(p.item_id, p.exact_point())); break;
    }
  }
  return {b1, b2, b3};
}

}  // namespace

PackingSolution approx3_spheres(const std::vector<Item>& items, const PipelineOptions& opt) {
  require_round(items, "approx3_spheres");
  const int d = detail::common_dimension(items, opt.d);
  check_uniqueness_range(opt.eps, d);
  PackingSolution aug = augmented_pack(items, opt);
  auto split = split_sphere_types(items, aug, opt.eps);
  if (split.huge_count > 1) throw std::logic_error("more than one huge sphere in the augmented packing");
  Diagnostics diag = aug.diag;
  diag.notes.push_back("augmented profit " + to_string(aug.profit));
  return best_bin(items, three_way(items, aug, split, opt.eps), "approx3", d, diag);
}

PackingSolution approx2eps_spheres(const std::vector<Item>& items, const PipelineOptions& opt) {
  require_round(items, "approx2eps_spheres");
  const int d = detail::common_dimension(items, opt.d);
  if (d > 8) throw std::invalid_argument("the (2+eps) split needs d <= 8");
  check_uniqueness_range(opt.eps, d);
  if (opt.mode == Mode::Paper) {
    double bound = 1.0 / (4.0 * d * d * std::pow(5.0, 2 * d + 3));
    if (!(to_double(opt.eps) < bound)) throw std::invalid_argument("eps must be below 1/(4 d^2 5^(2d+3))");
  }
  PackingSolution aug = augmented_pack(items, opt);
  auto split = split_sphere_types(items, aug, opt.eps);
  if (split.huge_count > 1) throw std::logic_error("more than one huge sphere in the augmented packing");
  Diagnostics diag = aug.diag;
  diag.notes.push_back("augmented profit " + to_string(aug.profit));
  auto bins = three_way(items, aug, split, opt.eps);
  if (split.huge_count == 1) {
    // B2' = huge + type 1; B1' = types 2, 3, 2', 3' with the mid-slab removed
    Bin hb{"huge+type1", {}, {}}, cut{"slab-cut", {}, {}};
    std::vector<std::pair<std::size_t, Placement>> type1;
    for (std::size_t k = 0; k < aug.placements.size(); ++k) {
      const Placement& p = aug.placements[k];
      std::size_t i = index_of(items, p.item_id);
      const Rational x = axis0(p), lo = x - items[i].radius, hi = x + items[i].radius;
      switch (split.labels[k]) {
        case SphereType::Huge: add(hb, i, clamp_huge(items[i], p)); break;
        case SphereType::Type1: type1.emplace_back(i, Placement::exact(p.item_id, p.exact_point())); break;
        default:
          if (hi <= split.slab_lo) add(cut, i, Placement::exact(p.item_id, p.exact_point()));
          else if (lo >= split.slab_hi) add(cut, i, shifted(p, opt.eps));
          else diag.notes.push_back("sphere '" + p.item_id + "' meets the mid-slab");
      }
    }
    const Item& huge = items[hb.selected[0]];
    for (auto& [i, p] : type1) {
      if (overlap(huge, hb.placements[0], items[i], p, 0.0)) {
        diag.notes.push_back("type1 sphere '" + items[i].id + "' dropped next to the moved huge sphere");
        continue;
      }
      add(hb, i, p);
    }
    bins.push_back(hb);
    bins.push_back(cut);
  }
  return best_bin(items, bins, "approx2eps", d, diag);
}

PackingSolution unweighted_52(const std::vector<Item>& items, const PipelineOptions& opt) {
  require_round(items, "unweighted_52");
  for (const auto& it : items)
    if (it.profit != 1) throw std::invalid_argument("unweighted_52 needs unit profits; item '" + it.id + "' differs");
  const int d = detail::common_dimension(items, opt.d);
  check_uniqueness_range(opt.eps, d);
  PackingSolution aug = augmented_pack(items, opt);
  auto split = split_sphere_types(items, aug, opt.eps);
  if (split.huge_count > 1) throw std::logic_error("more than one huge sphere in the augmented packing");
  Diagnostics diag = aug.diag;
  diag.notes.push_back("augmented count " + to_string(aug.profit));

  std::vector<Bin> bins;
  // corner packings of one or two spheres
  Bin corner{"corner", {}, {}};
  std::optional<std::pair<std::size_t, std::size_t>> pair;
  std::optional<std::size_t> single;
  for (std::size_t i = 0; i < items.size() && !pair; ++i) {
    const Rational& r1 = items[i].radius;
    if (2 * r1 > 1) continue;
    if (!single) single = i;
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      const Rational& r2 = items[j].radius;
      Rational gap = 1 - r1 - r2, s = r1 + r2;
      if (2 * r2 <= 1 && gap >= 0 && s * s <= Rational(d) * gap * gap) {
        pair = std::make_pair(i, j);
        break;
      }
    }
  }
  if (pair) {
    add(corner, pair->first, Placement::exact(items[pair->first].id, std::vector<Rational>(static_cast<std::size_t>(d), items[pair->first].radius)));
    add(corner, pair->second,
        Placement::exact(items[pair->second].id, std::vector<Rational>(static_cast<std::size_t>(d), 1 - items[pair->second].radius)));
  } else if (single) {
    add(corner, *single, Placement::exact(items[*single].id, std::vector<Rational>(static_cast<std::size_t>(d), items[*single].radius)));
  }
  bins.push_back(corner);
  if (aug.profit > 5) {
    // drop the huge sphere, keep the two unit bins
    auto three = three_way(items, aug, split, opt.eps);
    bins.push_back(three[0]);
    bins.push_back(three[2]);
  } else {
    for (auto& b : three_way(items, aug, split, opt.eps)) bins.push_back(b);
  }
  return best_bin(items, bins, "unweighted52", d, diag);
}

double second_radius_bound(double eps, int d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  const double a = (1 + 3 * eps) / 2, b = (1 + eps) / 2, c = (1 - eps) / 2;
  const double m = d - 1;
  const double S = a + m * b + c;
  const double C = a * a + m * b * b - c * c;
  return (S - std::sqrt(S * S - m * C)) / m;
}

double second_radius_closed_form_2d(double eps) { return 1.5 * (1 + eps) - std::sqrt(2 + 3 * eps); }

double second_radius_closed_form(double eps, int d) {
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  const double m = d - 1;
  return 0.5 + 1 / m + eps * (0.5 + 2 / m) - std::sqrt((1 + eps) * (1 + eps) / (m * m) + (1 - eps * eps) / m);
}

}  // namespace geopack
