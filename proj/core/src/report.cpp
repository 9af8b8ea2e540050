#include "geopack/io.hpp"

#include "json.hpp"

namespace geopack {

using nlohmann::json;

namespace {

json coords_json(const Placement& p) {
  json j;
  if (std::holds_alternative<ExactCoords>(p.coords)) {
    j["type"] = "exact";
    json xs = json::array();
    for (const auto& x : std::get<ExactCoords>(p.coords).x) xs.push_back(to_string(x));
    j["x"] = xs;
  } else if (std::holds_alternative<FloatCoords>(p.coords)) {
    const auto& f = std::get<FloatCoords>(p.coords);
    j["type"] = "float";
    j["x"] = f.x;
    j["tolerance"] = f.tolerance;
  } else {
    j["type"] = "box";
    json xs = json::array();
    for (const auto& iv : std::get<BoxCoords>(p.coords).x) xs.push_back({to_string(iv.lo), to_string(iv.hi)});
    j["x"] = xs;
  }
  return j;
}

}  // namespace

std::string report_json(const std::vector<Item>& items, const PackingSolution& sol,
                        const std::vector<PhaseTiming>& timings) {
  json r;
  r["schema"] = kReportSchema;
  r["pipeline"] = sol.pipeline;
  r["profit"] = to_string(sol.profit);
  r["profit_value"] = to_double(sol.profit);
  r["item_count"] = items.size();
  r["selected_count"] = sol.selected.size();
  json sides = json::array();
  for (const auto& s : sol.knapsack.sides) sides.push_back(to_string(s));
  r["knapsack"] = {{"dimension", sol.knapsack.dimension}, {"sides", sides}};
  json t = json::array();
  for (const auto& p : timings) t.push_back({{"phase", p.phase}, {"ms", p.ms}});
  r["timings"] = t;

  json dg;
  dg["candidates_tried"] = sol.diag.candidates_tried;
  dg["unknown_verdicts"] = sol.diag.unknown_verdicts;
  dg["strips_removed"] = sol.diag.strips_removed;
  dg["strip_loss"] = to_string(sol.diag.strip_loss);
  if (sol.diag.cell_counts) {
    const auto& c = *sol.diag.cell_counts;
    const Rational& v = sol.diag.cell_volume;
    dg["cells"] = {{"white", c.white.str()},
                   {"gray", c.gray.str()},
                   {"black", c.black.str()},
                   {"cell_volume", to_string(v)},
                   {"white_area", to_string(Rational(c.white) * v)},
                   {"gray_area", to_string(Rational(c.gray) * v)},
                   {"black_area", to_string(Rational(c.black) * v)}};
  }
  dg["notes"] = sol.diag.notes;
  r["diagnostics"] = dg;

  json pairs = json::array();
  for (const auto& [a, b] : sol.validity.offending_pairs) pairs.push_back({a, b});
  r["validity"] = {{"valid", sol.validity.valid},
                   {"max_boundary_violation", sol.validity.max_boundary_violation},
                   {"max_overlap_depth", sol.validity.max_overlap_depth},
                   {"offending_pairs", pairs},
                   {"out_of_bounds", sol.validity.out_of_bounds}};

  json pl = json::array();
  for (const auto& p : sol.placements) pl.push_back({{"id", p.item_id}, {"coords", coords_json(p)}});
  r["placements"] = pl;
  return r.dump(2) + "\n";
}

}  // namespace geopack
