#include "geopack/io.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace geopack {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument("instance field '" + field + "': " + what);
}

Rational number_at(const json& j, const std::string& field) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_unsigned()) return Rational(static_cast<unsigned long long>(j.get<std::uint64_t>()));
    if (j.is_number_float()) return parse_rational(j.dump());
  } catch (const std::exception& e) {
    fail(field, e.what());
  }
  fail(field, "expected a number or a rational string");
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where, bool strict) {
  if (!obj.is_object()) fail(where, "expected an object");
  if (!strict) return;
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) fail(where + "." + k, "unknown field");
}

Mode mode_from(const std::string& s, const std::string& field) {
  if (s == "paper") return Mode::Paper;
  if (s == "desk") return Mode::Desk;
  fail(field, "mode must be 'paper' or 'desk'");
}

}  // namespace

Instance parse_instance_text(const std::string& text, bool strict) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  check_keys(root, {"schema", "knapsack", "items", "parameters"}, "$", strict);
  Instance inst;
  if (root.contains("schema")) {
    if (!root["schema"].is_string() || root["schema"].get<std::string>() != kInstanceSchema)
      fail("schema", std::string("expected \"") + kInstanceSchema + "\"");
  } else if (strict) {
    fail("schema", "missing");
  }
  int d = 2;
  if (root.contains("knapsack")) {
    const json& k = root["knapsack"];
    check_keys(k, {"dimension", "sides"}, "knapsack", strict);
    if (k.contains("dimension")) {
      if (!k["dimension"].is_number_integer()) fail("knapsack.dimension", "expected an integer");
      d = k["dimension"].get<int>();
      if (d < 2) fail("knapsack.dimension", "must be at least 2");
    }
    inst.knapsack = KnapsackSpec::unit(d);
    if (k.contains("sides")) {
      if (!k["sides"].is_array() || k["sides"].size() != static_cast<std::size_t>(d))
        fail("knapsack.sides", "expected one side per axis");
      for (int a = 0; a < d; ++a) {
        Rational s = number_at(k["sides"][static_cast<std::size_t>(a)], "knapsack.sides[" + std::to_string(a) + "]");
        if (s <= 0) fail("knapsack.sides[" + std::to_string(a) + "]", "must be positive");
        inst.knapsack.sides[static_cast<std::size_t>(a)] = s;
      }
    }
  }
  if (!root.contains("items") || !root["items"].is_array()) fail("items", "expected an array");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < root["items"].size(); ++i) {
    const json& it = root["items"][i];
    const std::string where = "items[" + std::to_string(i) + "]";
    check_keys(it, {"id", "kind", "radius", "vertices", "profit"}, where, strict);
    std::string id = it.contains("id") ? it["id"].get<std::string>() : "i" + std::to_string(i);
    if (!ids.insert(id).second) fail(where + ".id", "duplicate id '" + id + "'");
    if (!it.contains("kind") || !it["kind"].is_string()) fail(where + ".kind", "missing");
    const std::string kind = it["kind"].get<std::string>();
    Rational profit = it.contains("profit") ? number_at(it["profit"], where + ".profit") : Rational(1);
    if (profit < 0) fail(where + ".profit", "must be nonnegative");
    if (kind == "disk" || kind == "sphere" || kind == "circle") {
      if (!it.contains("radius")) fail(where + ".radius", "missing");
      if (it.contains("vertices")) fail(where + ".vertices", "not allowed for round items");
      Rational r = number_at(it["radius"], where + ".radius");
      if (r <= 0) fail(where + ".radius", "must be positive");
      inst.items.push_back(Item::sphere(id, d, r, profit));
    } else if (kind == "polygon") {
      if (d != 2) fail(where + ".kind", "polygons need dimension 2");
      if (!it.contains("vertices") || !it["vertices"].is_array()) fail(where + ".vertices", "expected an array");
      std::vector<Point2> vs;
      for (std::size_t v = 0; v < it["vertices"].size(); ++v) {
        const json& p = it["vertices"][v];
        const std::string vf = where + ".vertices[" + std::to_string(v) + "]";
        if (!p.is_array() || p.size() != 2) fail(vf, "expected [x, y]");
        vs.push_back({number_at(p[0], vf + "[0]"), number_at(p[1], vf + "[1]")});
      }
      PolygonBuild b;
      try {
        b = build_polygon(vs);
      } catch (const std::exception& e) {
        fail(where + ".vertices", e.what());
      }
      if (b.reversed) inst.warnings.push_back(where + " (" + id + ") was clockwise and has been reversed");
      Item item;
      item.id = id;
      item.kind = ItemKind::Polygon;
      item.dimension = 2;
      item.polygon = std::make_shared<const PolygonShape>(std::move(b.shape));
      item.profit = profit;
      inst.items.push_back(std::move(item));
    } else {
      fail(where + ".kind", "unknown kind '" + kind + "'");
    }
  }
  if (root.contains("parameters")) {
    const json& p = root["parameters"];
    check_keys(p, {"eps", "mode", "overrides"}, "parameters", strict);
    if (p.contains("eps")) inst.eps = number_at(p["eps"], "parameters.eps");
    if (p.contains("mode")) inst.mode = mode_from(p["mode"].get<std::string>(), "parameters.mode");
    if (p.contains("overrides")) {
      if (!p["overrides"].is_object()) fail("parameters.overrides", "expected an object");
      for (const auto& [k, v] : p["overrides"].items())
        inst.overrides[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
  return inst;
}

Instance parse_instance_file(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str(), strict);
}

std::string serialize_instance(const Instance& inst) {
  json root;
  root["schema"] = kInstanceSchema;
  json sides = json::array();
  for (const auto& s : inst.knapsack.sides) sides.push_back(to_string(s));
  root["knapsack"] = {{"dimension", inst.knapsack.dimension}, {"sides", sides}};
  json items = json::array();
  for (const auto& it : inst.items) {
    json j;
    j["id"] = it.id;
    if (it.is_round()) {
      j["kind"] = it.kind == ItemKind::Disk ? "disk" : "sphere";
      j["radius"] = to_string(it.radius);
    } else {
      j["kind"] = "polygon";
      json vs = json::array();
      for (const auto& v : it.polygon->vertices) vs.push_back({to_string(v[0]), to_string(v[1])});
      j["vertices"] = vs;
    }
    j["profit"] = to_string(it.profit);
    items.push_back(j);
  }
  root["items"] = items;
  if (inst.eps || inst.mode || !inst.overrides.empty()) {
    json p = json::object();
    if (inst.eps) p["eps"] = to_string(*inst.eps);
    if (inst.mode) p["mode"] = *inst.mode == Mode::Paper ? "paper" : "desk";
    if (!inst.overrides.empty()) p["overrides"] = inst.overrides;
    root["parameters"] = p;
  }
  return root.dump(2) + "\n";
}

void apply_overrides(const std::map<std::string, std::string>& overrides, PipelineOptions& opt) {
  for (const auto& [k, v] : overrides) {
    auto as_size = [&]() {
      try {
        long long x = std::stoll(v);
        if (x < 0) throw std::invalid_argument("negative");
        return static_cast<std::size_t>(x);
      } catch (const std::exception&) {
        throw std::invalid_argument("override '" + k + "' expects a nonnegative integer, got '" + v + "'");
      }
    };
    if (k == "gap_exponent") opt.gap_exponent = static_cast<unsigned>(as_size());
    else if (k == "max_subset") opt.max_subset = as_size();
    else if (k == "subset_budget") opt.subset_budget = as_size();
    else if (k == "bp_budget") opt.bp_budget = as_size();
    else if (k == "grid_cells") opt.grid_cells = static_cast<int>(as_size());
    else if (k == "desk_candidates") opt.desk_candidates = as_size();
    else throw std::invalid_argument("unknown override '" + k + "'");
  }
}

}  // namespace geopack
