#pragma once

#include "geopack/classification.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace geopack {

struct MatchingResult {
  std::vector<std::optional<std::size_t>> item_to_slot;
  Rational value;
};

// Maximum-weight bipartite matching (Hungarian method); an item may only take
// a slot it fits. Deterministic for a fixed input order.
MatchingResult matching_assign(std::size_t items, std::size_t slots,
                               const std::function<bool(std::size_t, std::size_t)>& fits,
                               const std::vector<Rational>& profits);

// Slot extent in subcells per axis.
struct SlotShape {
  std::vector<int> k;
  int volume() const;
  bool operator<(const SlotShape& o) const { return k < o.k; }
  bool operator==(const SlotShape& o) const { return k == o.k; }
};

struct Slot {
  std::vector<int> corner;  // subcell index of the lower corner
  SlotShape shape;
  bool operator<(const Slot& o) const { return corner < o.corner || (corner == o.corner && shape < o.shape); }
  bool operator==(const Slot& o) const { return corner == o.corner && shape == o.shape; }
};

// Disjoint slots inside a g^d block of subcells, translated so the minimum
// corner is the origin. Uncovered subcells form the free group.
struct Configuration {
  std::vector<Slot> slots;
  bool operator<(const Configuration& o) const { return slots < o.slots; }
  bool operator==(const Configuration& o) const { return slots == o.slots; }
  int occupied() const;
};

std::vector<SlotShape> cube_shapes(int g, int d);
std::vector<SlotShape> box_shapes(int g, int d);

// One canonical representative per translation class with at most `cap` slots.
std::vector<Configuration> enumerate_configurations(int g, int d, std::size_t cap, const std::vector<SlotShape>& shapes);

struct DPOptions {
  std::size_t slot_cap = 4;
  bool box_fit = false;  // rectangular slots checked against axis-aligned bounding boxes
};

struct GroupRecord {
  std::size_t item;
  int level;
  std::vector<Rational> parent_corner;  // level-(l-1) cell
  std::vector<Rational> slot_lo, slot_hi;
};

struct DPResult {
  Rational profit;
  std::vector<std::size_t> selected;
  std::vector<Placement> placements;
  std::vector<GroupRecord> groups;
  std::map<std::pair<int, long long>, Rational> table;  // DP[level, m]
};

// Smallest slot shape (per axis, in level-l subcells) able to host the item.
std::vector<int> min_slot(const Item& item, const Rational& cell, int d, bool box_fit);
bool slot_fits(const Item& item, const SlotShape& s, const Rational& cell, bool box_fit);

// Items are taken from split.L (M items are ignored). root_cells lists the
// lower corners of the available level-0 cells of side split.unit.
DPResult hierarchical_dp_pack(const std::vector<Item>& items, const LevelSplit& split,
                              const std::vector<std::vector<Rational>>& root_cells, const DPOptions& opt = {});

}  // namespace geopack
