#include "geopack/io.hpp"

#include "geopack/oracle.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

namespace geopack {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PackingSolution run_brute(const std::vector<Item>& items, int d) {
  const std::size_t cap = 8;
  if (items.size() > cap)
    throw UsageError("--algo brute is capped at " + std::to_string(cap) + " items; the instance has " +
                     std::to_string(items.size()));
  auto r = brute_force_opt(items, cap);
  PackingSolution sol;
  sol.pipeline = "brute";
  sol.knapsack = KnapsackSpec::unit(d);
  sol.selected = r.subset;
  sol.placements = r.witness;
  sol.diag.unknown_verdicts = r.unknown.size();
  sol.diag.notes.push_back(std::string("oracle method: ") + to_string(r.method));
  finalize(sol, items);
  return sol;
}

PackingSolution dispatch(const std::string& algo, const std::vector<Item>& items, const PipelineOptions& opt) {
  if (algo == "ptas-circles") return ptas_circles(items, opt);
  if (algo == "ptas-polygons") return ptas_polygons(items, opt);
  if (algo == "ra-ptas") return ra_ptas_fat(items, opt);
  if (algo == "small-ptas") return small_objects_ptas(items, opt);
  if (algo == "augmented") return augmented_pack(items, opt);
  if (algo == "approx3") return approx3_spheres(items, opt);
  if (algo == "approx2eps") return approx2eps_spheres(items, opt);
  if (algo == "unweighted52") return unweighted_52(items, opt);
  if (algo == "brute") return run_brute(items, opt.d);
  throw UsageError("unknown pipeline '" + algo + "'");
}

// Items of a cube knapsack of side s, rescaled to the unit cube.
std::vector<Item> to_unit(const std::vector<Item>& items, const Rational& s) {
  std::vector<Item> out;
  for (const auto& it : items) {
    if (it.is_round()) {
      out.push_back(Item::sphere(it.id, it.dimension, it.radius / s, it.profit));
    } else {
      std::vector<Point2> vs;
      for (const auto& v : it.polygon->vertices) vs.push_back({v[0] / s, v[1] / s});
      out.push_back(Item::make_polygon(it.id, vs, it.profit));
    }
  }
  return out;
}

Placement scaled(const Placement& p, const Rational& s) {
  if (std::holds_alternative<ExactCoords>(p.coords)) {
    auto x = std::get<ExactCoords>(p.coords).x;
    for (auto& v : x) v *= s;
    return Placement::exact(p.item_id, x);
  }
  if (std::holds_alternative<FloatCoords>(p.coords)) {
    const auto& f = std::get<FloatCoords>(p.coords);
    const double k = to_double(s);
    auto x = f.x;
    for (auto& v : x) v *= k;
    return Placement::floating(p.item_id, x, f.tolerance * k);
  }
  auto x = std::get<BoxCoords>(p.coords).x;
  for (auto& iv : x) {
    iv.lo *= s;
    iv.hi *= s;
  }
  return Placement::box(p.item_id, x);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric knapsack packer"};
  app.name("pack");
  std::string algo, eps_text, mode_text, input, svg_path, report_path;
  int dim = 0;
  std::uint64_t seed = 0;
  bool cells = false;
  app.add_option("--algo", algo, "Pipeline")
      ->required()
      ->check(CLI::IsMember({"ptas-circles", "ptas-polygons", "ra-ptas", "small-ptas", "augmented", "approx3",
                             "approx2eps", "unweighted52", "brute"}));
  app.add_option("--eps", eps_text, "Accuracy parameter, decimal or p/q");
  app.add_option("--dim", dim, "Dimension (must match the instance)");
  app.add_option("--mode", mode_text, "paper or desk")->check(CLI::IsMember({"paper", "desk"}));
  app.add_option("--seed", seed, "Seed recorded in the options");
  app.add_option("-i,--input", input, "Instance file")->required();
  app.add_option("--svg", svg_path, "Write an SVG drawing (d = 2)");
  app.add_option("--report", report_path, "Write the JSON report");
  app.add_flag("--cells", cells, "Draw the cell map under the items");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    std::vector<PhaseTiming> timings;
    auto t0 = Clock::now();
    Instance inst = parse_instance_file(input);
    timings.push_back({"parse", ms_since(t0)});
    for (const auto& w : inst.warnings) err << "warning: " << w << '\n';

    PipelineOptions opt;
    apply_overrides(inst.overrides, opt);
    if (!eps_text.empty()) opt.eps = parse_rational(eps_text);
    else if (inst.eps) opt.eps = *inst.eps;
    else throw UsageError("--eps is required when the instance has no parameters.eps");
    if (opt.eps <= 0 || opt.eps >= 1) throw UsageError("eps must lie in (0, 1)");
    if (!mode_text.empty()) opt.mode = mode_text == "paper" ? Mode::Paper : Mode::Desk;
    else if (inst.mode) opt.mode = *inst.mode;
    opt.d = inst.knapsack.dimension;
    if (dim != 0 && dim != opt.d)
      throw UsageError("--dim " + std::to_string(dim) + " does not match the instance dimension " +
                       std::to_string(opt.d));
    opt.seed = seed;
    opt.keep_cells = cells;
    opt.allow_3d = opt.d > 2;

    const Rational side = inst.knapsack.sides[0];
    for (const auto& s : inst.knapsack.sides)
      if (s != side) throw UsageError("only cube knapsacks are supported");
    const bool rescale = side != 1;
    const std::vector<Item> work = rescale ? to_unit(inst.items, side) : inst.items;

    t0 = Clock::now();
    PackingSolution sol = dispatch(algo, work, opt);
    timings.push_back({"solve", ms_since(t0)});
    if (rescale) {
      for (auto& p : sol.placements) p = scaled(p, side);
      for (auto& s : sol.knapsack.sides) s *= side;
      sol.cells.reset();
      sol.diag.cell_counts.reset();
      sol.diag.notes.push_back("instance rescaled to the unit cube and back by side " + to_string(side));
      finalize(sol, inst.items, algo == "ptas-polygons" ? 0.0 : 1e-9);
    }

    if (!svg_path.empty()) {
      t0 = Clock::now();
      SvgOptions so;
      so.cells = cells;
      so.eps = opt.eps;
      std::ofstream f(svg_path);
      if (!f) throw UsageError("cannot write '" + svg_path + "'");
      f << render_svg(inst.items, sol, so);
      timings.push_back({"svg", ms_since(t0)});
    }
    const std::string report = report_json(inst.items, sol, timings);
    if (!report_path.empty()) {
      std::ofstream f(report_path);
      if (!f) throw UsageError("cannot write '" + report_path + "'");
      f << report;
    } else {
      out << report;
    }
    if (!sol.validity.valid) {
      err << "error: " << sol.pipeline << " produced an invalid packing\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace geopack
