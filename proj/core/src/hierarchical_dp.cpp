#include "geopack/dp.hpp"

#include "geopack/packers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace geopack {

namespace {

// Axis extents of the item's fit box: the bounding square, or the exact
// bounding box of a polygon when box_fit is set.
std::vector<Rational> fit_extent(const Item& item, int d, bool box_fit) {
  if (box_fit && !item.is_round()) {
    const auto& p = *item.polygon;
    return {p.extent_right, p.extent_down + p.extent_up};
  }
  return std::vector<Rational>(static_cast<std::size_t>(d), bounding_side(item));
}

int ceil_div(const Rational& a, const Rational& b) {
  long long k = ceil_ll(a / b);
  if (k < 1) k = 1;
  if (k > (1 << 20)) k = 1 << 20;
  return static_cast<int>(k);
}

// Placement coordinate for an item put at the low corner of a slot.
std::vector<Rational> place_in_slot(const Item& item, const std::vector<Rational>& lo, const std::vector<Rational>& hi,
                                    bool box_fit) {
  if (!box_fit) return placement_in_square(item, lo, bounding_side(item));
  if (item.is_round()) {
    std::vector<Rational> c;
    for (std::size_t a = 0; a < lo.size(); ++a) c.push_back(lo[a] + item.radius);
    return c;
  }
  (void)hi;
  const auto& p = *item.polygon;
  return {lo[0], lo[1] + p.extent_down};
}

struct State {
  int cells = 0;
  int vol = 0;
  int slots = 0;
  int prev_profile = -1;
  std::vector<int> prev;
};

struct Level {
  int level = 0;
  Rational cell;
  std::vector<std::size_t> items;          // global indices, profit descending
  std::vector<std::vector<int>> kmin;      // per item, per axis
  std::vector<SlotShape> shapes;
  std::vector<std::vector<int>> profiles;  // slot count per shape
  std::vector<Configuration> reps;
  std::vector<int> profile_vol;
  std::map<std::vector<int>, State> states;
  std::map<std::vector<int>, std::pair<Rational, std::vector<std::size_t>>> match_memo;

  bool fits(std::size_t it, std::size_t shape) const {
    for (std::size_t a = 0; a < shapes[shape].k.size(); ++a)
      if (kmin[it][a] > shapes[shape].k[a]) return false;
    return true;
  }
};

class Solver {
 public:
  Solver(const std::vector<Item>& items, const LevelSplit& split, int d, const DPOptions& opt)
      : items_(items), split_(split), d_(d), opt_(opt) {
    g_ = split.g;
    gd_ = 1;
    for (int a = 0; a < d; ++a) gd_ *= g_;
    max_level_ = 0;
    for (const auto& [l, v] : split.L)
      if (!v.empty()) max_level_ = std::max(max_level_, l);
    levels_.resize(static_cast<std::size_t>(max_level_) + 1);
    std::vector<SlotShape> shapes = opt.box_fit ? box_shapes(g_, d) : cube_shapes(g_, d);
    auto configs = enumerate_configurations(g_, d, opt.slot_cap, shapes);
    std::vector<std::vector<int>> profiles;
    std::vector<Configuration> reps;
    for (const auto& c : configs) {
      if (c.slots.empty()) continue;
      std::vector<int> cnt(shapes.size(), 0);
      for (const auto& s : c.slots)
        cnt[static_cast<std::size_t>(std::find(shapes.begin(), shapes.end(), s.shape) - shapes.begin())]++;
      if (std::find(profiles.begin(), profiles.end(), cnt) != profiles.end()) continue;
      profiles.push_back(cnt);
      reps.push_back(c);
    }
    for (int l = 1; l <= max_level_; ++l) {
      Level& L = levels_[static_cast<std::size_t>(l)];
      L.level = l;
      L.cell = split.cell_side(l);
      auto it = split.L.find(l);
      if (it != split.L.end()) L.items = it->second;
      std::stable_sort(L.items.begin(), L.items.end(),
                       [&](std::size_t a, std::size_t b) { return items_[a].profit > items_[b].profit; });
      for (std::size_t i : L.items) {
        auto ext = fit_extent(items_[i], d, opt.box_fit);
        std::vector<int> k;
        for (const auto& e : ext) k.push_back(ceil_div(e, L.cell));
        L.kmin.push_back(k);
      }
      L.shapes = shapes;
      L.profiles = profiles;
      L.reps = reps;
      for (const auto& c : reps) L.profile_vol.push_back(c.occupied());
      build_states(L);
    }
    deeper_.assign(static_cast<std::size_t>(max_level_) + 2, 0);
    for (int l = max_level_; l >= 1; --l)
      deeper_[static_cast<std::size_t>(l)] =
          deeper_[static_cast<std::size_t>(l) + 1] + static_cast<long long>(levels_[static_cast<std::size_t>(l)].items.size());
  }

  long long items_from(int l) const { return l > max_level_ ? 0 : deeper_[static_cast<std::size_t>(l)]; }

  Rational value(int l, long long m) {
    if (l > max_level_ || m <= 0) return 0;
    auto key = std::make_pair(l, m);
    auto f = table_.find(key);
    if (f != table_.end()) return f->second;
    Level& L = levels_[static_cast<std::size_t>(l)];
    Rational best = -1;
    std::vector<int> arg;
    for (const auto& [cnt, st] : L.states) {
      if (st.cells > m) continue;
      long long free = m * gd_ - st.vol;
      Rational v = match(L, cnt).first + value(l + 1, std::min(free, items_from(l + 1)));
      if (v > best) {
        best = v;
        arg = cnt;
      }
    }
    table_[key] = best;
    choice_[key] = arg;
    return best;
  }

  // Maximum profit of level items assignable to the slot multiset, with the
  // chosen item list (global indices).
  const std::pair<Rational, std::vector<std::size_t>>& match(Level& L, const std::vector<int>& cnt) {
    auto f = L.match_memo.find(cnt);
    if (f != L.match_memo.end()) return f->second;
    std::pair<Rational, std::vector<std::size_t>> res{Rational(0), {}};
    if (opt_.box_fit) {
      std::vector<std::size_t> slot_shape;
      for (std::size_t s = 0; s < cnt.size(); ++s)
        for (int c = 0; c < cnt[s]; ++c) slot_shape.push_back(s);
      std::vector<Rational> prof;
      for (std::size_t i : L.items) prof.push_back(items_[i].profit);
      auto m = matching_assign(L.items.size(), slot_shape.size(),
                               [&](std::size_t i, std::size_t j) { return L.fits(i, slot_shape[j]); }, prof);
      res.first = m.value;
      for (std::size_t i = 0; i < L.items.size(); ++i)
        if (m.item_to_slot[i]) res.second.push_back(L.items[i]);
    } else {
      // cube slots are nested by side, so the greedy over a Hall check is exact
      std::vector<int> side_cnt(static_cast<std::size_t>(g_) + 2, 0);  // slots with side >= k
      for (std::size_t s = 0; s < cnt.size(); ++s)
        for (int k = 1; k <= L.shapes[s].k[0]; ++k) side_cnt[static_cast<std::size_t>(k)] += cnt[s];
      std::vector<int> need(static_cast<std::size_t>(g_) + 2, 0);  // chosen items with kmin >= k
      for (std::size_t i = 0; i < L.items.size(); ++i) {
        int km = L.kmin[i][0];
        if (km > g_) continue;
        bool ok = true;
        for (int k = 1; k <= km && ok; ++k)
          ok = need[static_cast<std::size_t>(k)] + 1 <= side_cnt[static_cast<std::size_t>(k)];
        if (!ok) continue;
        for (int k = 1; k <= km; ++k) need[static_cast<std::size_t>(k)]++;
        res.first += items_[L.items[i]].profit;
        res.second.push_back(L.items[i]);
      }
    }
    return L.match_memo.emplace(cnt, std::move(res)).first->second;
  }

  void reconstruct(int l, const std::vector<std::vector<Rational>>& cells, DPResult& out) {
    long long m = std::min(static_cast<long long>(cells.size()), items_from(l));
    if (l > max_level_ || m <= 0) return;
    value(l, m);
    Level& L = levels_[static_cast<std::size_t>(l)];
    std::vector<int> cnt = choice_.at({l, m});
    std::vector<int> used_profiles;
    for (std::vector<int> cur = cnt; L.states.at(cur).prev_profile >= 0;) {
      const State& st = L.states.at(cur);
      used_profiles.push_back(st.prev_profile);
      cur = st.prev;
    }
    std::reverse(used_profiles.begin(), used_profiles.end());

    struct Concrete {
      std::size_t shape;
      std::size_t parent;
      std::vector<Rational> lo, hi;
    };
    std::vector<Concrete> slots;
    std::vector<std::vector<bool>> covered(cells.size(), std::vector<bool>(static_cast<std::size_t>(gd_), false));
    for (std::size_t c = 0; c < used_profiles.size(); ++c) {
      const Configuration& rep = L.reps[static_cast<std::size_t>(used_profiles[c])];
      for (const auto& s : rep.slots) {
        Concrete cs;
        cs.shape = static_cast<std::size_t>(std::find(L.shapes.begin(), L.shapes.end(), s.shape) - L.shapes.begin());
        cs.parent = c;
        for (int a = 0; a < d_; ++a) {
          cs.lo.push_back(cells[c][static_cast<std::size_t>(a)] + L.cell * s.corner[static_cast<std::size_t>(a)]);
          cs.hi.push_back(cs.lo.back() + L.cell * s.shape.k[static_cast<std::size_t>(a)]);
        }
        slots.push_back(cs);
        for_each_sub([&](const std::vector<int>& idx, int flat) {
          bool in = true;
          for (int a = 0; a < d_; ++a) {
            int v = idx[static_cast<std::size_t>(a)] - s.corner[static_cast<std::size_t>(a)];
            in = in && v >= 0 && v < s.shape.k[static_cast<std::size_t>(a)];
          }
          if (in) covered[c][static_cast<std::size_t>(flat)] = true;
        });
      }
    }

    const auto& chosen = match(L, cnt).second;
    std::vector<std::size_t> local;  // positions in L.items
    for (std::size_t gi : chosen)
      local.push_back(static_cast<std::size_t>(std::find(L.items.begin(), L.items.end(), gi) - L.items.begin()));
    std::vector<std::optional<std::size_t>> assign(local.size());
    if (opt_.box_fit) {
      std::vector<Rational> prof;
      for (std::size_t li : local) prof.push_back(items_[L.items[li]].profit);
      auto mres = matching_assign(local.size(), slots.size(),
                                  [&](std::size_t i, std::size_t j) { return L.fits(local[i], slots[j].shape); }, prof);
      assign = mres.item_to_slot;
    } else {
      std::vector<std::size_t> order(local.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return L.kmin[local[a]][0] > L.kmin[local[b]][0]; });
      std::vector<std::size_t> sorder(slots.size());
      std::iota(sorder.begin(), sorder.end(), 0);
      std::stable_sort(sorder.begin(), sorder.end(), [&](std::size_t a, std::size_t b) {
        return L.shapes[slots[a].shape].k[0] < L.shapes[slots[b].shape].k[0];
      });
      std::vector<bool> taken(slots.size(), false);
      for (std::size_t oi : order) {
        for (std::size_t sj : sorder) {
          if (taken[sj] || !L.fits(local[oi], slots[sj].shape)) continue;
          taken[sj] = true;
          assign[oi] = sj;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < local.size(); ++i) {
      if (!assign[i]) throw std::logic_error("dp reconstruction lost an item");
      const Concrete& s = slots[*assign[i]];
      std::size_t gi = L.items[local[i]];
      out.selected.push_back(gi);
      out.profit += items_[gi].profit;
      out.placements.push_back(Placement::exact(items_[gi].id, place_in_slot(items_[gi], s.lo, s.hi, opt_.box_fit)));
      out.groups.push_back({gi, l, cells[s.parent], s.lo, s.hi});
    }

    std::vector<std::vector<Rational>> next;
    const long long want = items_from(l + 1);
    for (std::size_t c = 0; c < static_cast<std::size_t>(m) && static_cast<long long>(next.size()) < want; ++c) {
      for_each_sub([&](const std::vector<int>& idx, int flat) {
        if (covered[c][static_cast<std::size_t>(flat)] || static_cast<long long>(next.size()) >= want) return;
        std::vector<Rational> corner;
        for (int a = 0; a < d_; ++a)
          corner.push_back(cells[c][static_cast<std::size_t>(a)] + L.cell * idx[static_cast<std::size_t>(a)]);
        next.push_back(std::move(corner));
      });
    }
    reconstruct(l + 1, next, out);
  }

  const std::map<std::pair<int, long long>, Rational>& table() const { return table_; }

 private:
  template <class F>
  void for_each_sub(F&& f) const {
    std::vector<int> idx(static_cast<std::size_t>(d_), 0);
    for (int flat = 0; flat < gd_; ++flat) {
      f(idx, flat);
      for (std::size_t a = 0; a < idx.size(); ++a) {
        if (++idx[a] < g_) break;
        idx[a] = 0;
      }
    }
  }

  // Slot-count vectors reachable with c cells, recorded at their least c.
  void build_states(Level& L) {
    const int limit = static_cast<int>(L.items.size());
    std::vector<int> zero(L.shapes.size(), 0);
    L.states[zero] = State{};
    std::vector<std::vector<int>> frontier{zero};
    for (int c = 1; c <= limit && !frontier.empty(); ++c) {
      std::vector<std::vector<int>> nxt;
      for (const auto& s : frontier) {
        const State base = L.states.at(s);
        for (std::size_t p = 0; p < L.profiles.size(); ++p) {
          std::vector<int> t = s;
          int add = 0;
          for (std::size_t q = 0; q < t.size(); ++q) {
            t[q] += L.profiles[p][q];
            add += L.profiles[p][q];
          }
          if (base.slots + add > limit || L.states.count(t)) continue;
          L.states[t] = State{c, base.vol + L.profile_vol[p], base.slots + add, static_cast<int>(p), s};
          nxt.push_back(t);
        }
      }
      frontier = std::move(nxt);
    }
  }

  const std::vector<Item>& items_;
  const LevelSplit& split_;
  int d_;
  DPOptions opt_;
  int g_ = 2;
  long long gd_ = 4;
  int max_level_ = 0;
  std::vector<Level> levels_;
  std::vector<long long> deeper_;
  std::map<std::pair<int, long long>, Rational> table_;
  std::map<std::pair<int, long long>, std::vector<int>> choice_;
};

}  // namespace

std::vector<int> min_slot(const Item& item, const Rational& cell, int d, bool box_fit) {
  if (cell <= 0) throw std::invalid_argument("cell side must be positive");
  std::vector<int> k;
  for (const auto& e : fit_extent(item, d, box_fit)) k.push_back(ceil_div(e, cell));
  return k;
}

bool slot_fits(const Item& item, const SlotShape& s, const Rational& cell, bool box_fit) {
  auto k = min_slot(item, cell, static_cast<int>(s.k.size()), box_fit);
  for (std::size_t a = 0; a < k.size(); ++a)
    if (k[a] > s.k[a]) return false;
  return true;
}

DPResult hierarchical_dp_pack(const std::vector<Item>& items, const LevelSplit& split,
                              const std::vector<std::vector<Rational>>& root_cells, const DPOptions& opt) {
  DPResult out;
  out.profit = 0;
  if (split.g < 2) throw std::invalid_argument("grid refinement must be at least 2");
  int d = root_cells.empty() ? 2 : static_cast<int>(root_cells[0].size());
  for (const auto& c : root_cells)
    if (static_cast<int>(c.size()) != d) throw std::invalid_argument("root cells must share a dimension");
  if (opt.box_fit && d != 2) throw std::invalid_argument("box fit is implemented for d = 2");
  for (const auto& [l, v] : split.L)
    for (std::size_t i : v)
      if (i >= items.size()) throw std::invalid_argument("level split refers to a missing item");
  if (root_cells.empty() || split.L.empty()) return out;
  Solver s(items, split, d, opt);
  s.reconstruct(1, root_cells, out);
  out.table = s.table();
  return out;
}

}  // namespace geopack
