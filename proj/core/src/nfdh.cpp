#include "geopack/packers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace geopack {

namespace {

struct Shelf2D {
  Rational W, H;
  Rational y = 0, h = 0, x = 0;
  bool open = false;

  // Places a square of side s or returns false when no new shelf can open.
  bool place(const Rational& s, Rational& px, Rational& py) {
    if (open && x + s <= W) {
      px = x;
      py = y;
      x += s;
      return true;
    }
    Rational ny = open ? y + h : Rational(0);
    if (ny + s > H || s > W) return false;
    y = ny;
    h = s;
    x = s;
    open = true;
    px = 0;
    py = y;
    return true;
  }
};

}  // namespace

NfdhResult nfdh_pack_squares(const std::vector<Rational>& box, const std::vector<Rational>& sides) {
  const std::size_t d = box.size();
  if (d != 2 && d != 3) throw std::invalid_argument("nfdh supports d = 2 and d = 3");
  for (const auto& b : box)
    if (b <= 0) throw std::invalid_argument("container sides must be positive");
  NfdhResult out;
  out.packed_area = 0;
  Rational minside = *std::min_element(box.begin(), box.end());
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (sides[i] <= 0) throw std::invalid_argument("square sides must be positive");
    if (sides[i] > minside)
      out.unpackable.push_back(i);
    else
      order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sides[a] > sides[b]; });
  std::size_t k = 0;
  if (d == 2) {
    Shelf2D sh{box[0], box[1]};
    for (; k < order.size(); ++k) {
      Rational px, py;
      if (!sh.place(sides[order[k]], px, py)) break;
      out.placed.push_back({order[k], {px, py}});
      out.packed_area += sides[order[k]] * sides[order[k]];
    }
  } else {
    Rational z = 0, layer_h = 0;
    bool have_layer = false;
    Shelf2D sh{box[0], box[1]};
    for (; k < order.size(); ++k) {
      const Rational& s = sides[order[k]];
      Rational px, py;
      if (have_layer && sh.place(s, px, py)) {
        out.placed.push_back({order[k], {px, py, z}});
        out.packed_area += s * s * s;
        continue;
      }
      Rational nz = have_layer ? z + layer_h : Rational(0);
      if (nz + s > box[2]) break;
      z = nz;
      layer_h = s;
      have_layer = true;
      sh = Shelf2D{box[0], box[1]};
      sh.place(s, px, py);
      out.placed.push_back({order[k], {px, py, z}});
      out.packed_area += s * s * s;
    }
  }
  for (; k < order.size(); ++k) out.left_out.push_back(order[k]);
  return out;
}

Rational bounding_side(const Item& item) {
  if (item.is_round()) return 2 * item.radius;
  // rational upper bound on 2 r_out, tight to a few ulps
  const Rational& r2 = item.polygon->r_out_sq;
  double guess = 2 * std::sqrt(to_double(r2));
  Rational s = from_double(guess);
  Rational bump = from_double(guess * 1e-15 + 1e-300);
  while (s * s < 4 * r2) s += bump;
  return s;
}

std::vector<Rational> placement_in_square(const Item& item, const std::vector<Rational>& corner, const Rational& side) {
  std::vector<Rational> c;
  for (const auto& x : corner) c.push_back(x + side / 2);
  if (item.is_round()) return c;
  const auto& p = *item.polygon;
  const auto& a = p.vertices[p.anchor];
  return {c[0] + a[0] - p.mec_center[0], c[1] + a[1] - p.mec_center[1]};
}

MediumPacking pack_medium_greedy(const std::vector<Item>& items, const std::vector<std::size_t>& medium,
                                 const Rational& eps, const std::vector<Rational>& strip_origin,
                                 const std::vector<Rational>& strip_size) {
  MediumPacking out;
  out.area = 0;
  std::vector<std::size_t> order = medium;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return items[a].profit_value() / items[a].volume() > items[b].profit_value() / items[b].volume();
  });
  const double limit = 2 * to_double(eps);
  double area = 0.0;
  std::vector<std::size_t> prefix;
  for (std::size_t i : order) {
    if (area + items[i].volume() > limit) break;
    area += items[i].volume();
    prefix.push_back(i);
  }
  std::vector<Rational> sides;
  for (std::size_t i : prefix) {
    Rational s = bounding_side(items[i]);
    out.area += rational_pow(s, static_cast<unsigned>(strip_size.size()));
    sides.push_back(s);
  }
  auto packed = nfdh_pack_squares(strip_size, sides);
  std::vector<bool> placed(prefix.size(), false);
  for (const auto& sp : packed.placed) {
    std::vector<Rational> corner;
    for (std::size_t a = 0; a < sp.corner.size(); ++a) corner.push_back(strip_origin[a] + sp.corner[a]);
    const Item& it = items[prefix[sp.index]];
    placed[sp.index] = true;
    out.selected.push_back(prefix[sp.index]);
    out.placements.push_back(Placement::exact(it.id, placement_in_square(it, corner, sides[sp.index])));
  }
  for (std::size_t k = 0; k < prefix.size(); ++k)
    if (!placed[k]) out.skipped.push_back(prefix[k]);
  return out;
}

StripPruneResult strip_prune(const std::vector<Item>& items, const std::vector<std::vector<Rational>>& positions,
                             const std::vector<Rational>& origin, const Rational& s, const Rational& eps) {
  if (items.size() != positions.size()) throw std::invalid_argument("one position per item required");
  const int J = static_cast<int>(floor_ll(Rational(1) / eps));
  if (J < 1) throw std::invalid_argument("eps must be at most 1");
  const Rational w = eps * s;
  const std::size_t d = origin.size();
  StripPruneResult out;
  std::vector<std::size_t> alive(items.size());
  std::iota(alive.begin(), alive.end(), 0);
  std::vector<std::vector<Rational>> pos = positions;
  std::vector<bool> gone(items.size(), false);
  for (std::size_t axis = 0; axis < d; ++axis) {
    std::vector<Rational> cw(static_cast<std::size_t>(J), Rational(0));
    std::vector<std::pair<Rational, Rational>> ext(items.size());
    for (std::size_t i : alive) ext[i] = axis_extent_exact(items[i], pos[i], static_cast<int>(axis));
    for (int j = 0; j < J; ++j) {
      Rational a = origin[axis] + w * j, b = a + w;
      for (std::size_t i : alive)
        if (ext[i].first < b && ext[i].second > a) cw[static_cast<std::size_t>(j)] += items[i].profit;
    }
    int best = 0;
    for (int j = 1; j < J; ++j)
      if (cw[static_cast<std::size_t>(j)] < cw[static_cast<std::size_t>(best)]) best = j;
    Rational a = origin[axis] + w * best, b = a + w;
    std::vector<std::size_t> next;
    for (std::size_t i : alive) {
      if (ext[i].first < b && ext[i].second > a) {
        gone[i] = true;
        out.removed.push_back(i);
        continue;
      }
      if (ext[i].first >= b) pos[i][axis] -= w;
      next.push_back(i);
    }
    alive = std::move(next);
    out.strip_index.push_back(best);
    out.removed_weight.push_back(cw[static_cast<std::size_t>(best)]);
    out.candidate_weight.push_back(std::move(cw));
  }
  out.survivors = alive;
  for (std::size_t i : alive) out.positions.push_back(pos[i]);
  std::sort(out.removed.begin(), out.removed.end());
  return out;
}

}  // namespace geopack
