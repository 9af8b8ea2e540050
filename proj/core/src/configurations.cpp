#include "geopack/dp.hpp"

#include <algorithm>
#include <set>

namespace geopack {

int SlotShape::volume() const {
  int v = 1;
  for (int x : k) v *= x;
  return v;
}

int Configuration::occupied() const {
  int v = 0;
  for (const auto& s : slots) v += s.shape.volume();
  return v;
}

std::vector<SlotShape> cube_shapes(int g, int d) {
  std::vector<SlotShape> out;
  for (int k = 1; k <= g; ++k) out.push_back({std::vector<int>(static_cast<std::size_t>(d), k)});
  return out;
}

std::vector<SlotShape> box_shapes(int g, int d) {
  std::vector<SlotShape> out;
  std::vector<int> k(static_cast<std::size_t>(d), 1);
  for (;;) {
    out.push_back({k});
    std::size_t a = 0;
    while (a < k.size() && ++k[a] > g) k[a++] = 1;
    if (a == k.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool disjoint(const Slot& a, const Slot& b) {
  for (std::size_t x = 0; x < a.corner.size(); ++x) {
    if (a.corner[x] + a.shape.k[x] <= b.corner[x] || b.corner[x] + b.shape.k[x] <= a.corner[x]) return true;
  }
  return false;
}

Configuration normalize(std::vector<Slot> slots, int d) {
  if (!slots.empty()) {
    for (int x = 0; x < d; ++x) {
      int m = slots[0].corner[static_cast<std::size_t>(x)];
      for (const auto& s : slots) m = std::min(m, s.corner[static_cast<std::size_t>(x)]);
      for (auto& s : slots) s.corner[static_cast<std::size_t>(x)] -= m;
    }
  }
  std::sort(slots.begin(), slots.end());
  return {std::move(slots)};
}

}  // namespace

std::vector<Configuration> enumerate_configurations(int g, int d, std::size_t cap, const std::vector<SlotShape>& shapes) {
  if (g < 1 || d < 1) throw std::invalid_argument("bad grid parameters");
  std::vector<Slot> cand;
  for (const auto& sh : shapes) {
    if (sh.k.size() != static_cast<std::size_t>(d)) throw std::invalid_argument("shape dimension mismatch");
    bool ok = true;
    for (int x : sh.k) ok = ok && x >= 1 && x <= g;
    if (!ok) continue;
    std::vector<int> c(static_cast<std::size_t>(d), 0);
    for (;;) {
      cand.push_back({c, sh});
      std::size_t a = 0;
      while (a < c.size() && ++c[a] + sh.k[a] > g) c[a++] = 0;
      if (a == c.size()) break;
    }
  }
  std::set<Configuration> seen;
  std::vector<Slot> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    seen.insert(normalize(cur, d));
    if (cur.size() == cap) return;
    for (std::size_t i = start; i < cand.size(); ++i) {
      bool ok = true;
      for (const auto& s : cur) ok = ok && disjoint(s, cand[i]);
      if (!ok) continue;
      cur.push_back(cand[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return {seen.begin(), seen.end()};
}

}  // namespace geopack
