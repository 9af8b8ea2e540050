#include "geopack/io.hpp"

#include "geopack/classification.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace geopack {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

const char* fill_for(const Item& it, double eps) {
  const double k = size_key(it);
  if (k >= eps) return "#4a78b5";
  if (k >= eps * eps) return "#7fb07a";
  return "#e0a040";
}

}  // namespace

std::string render_svg(const std::vector<Item>& items, const PackingSolution& sol, const SvgOptions& opt) {
  if (sol.knapsack.dimension != 2) throw std::invalid_argument("svg rendering needs dimension 2");
  const double w = sol.knapsack.side(0), h = sol.knapsack.side(1);
  const double scale = opt.pixels / std::max(w, h);
  auto X = [&](double x) { return num(x * scale); };
  auto Y = [&](double y) { return num((h - y) * scale); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w * scale) << "\" height=\"" << num(h * scale)
    << "\" viewBox=\"0 0 " << num(w * scale) << ' ' << num(h * scale) << "\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << num(w * scale) << "\" height=\"" << num(h * scale)
    << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";

  if (opt.cells && sol.cells && sol.cells->d == 2 && sol.cells->cell_count() <= opt.max_cells) {
    const double c = to_double(sol.cells->eps_cell);
    o << "<g id=\"cells\" stroke=\"none\">\n";
    for (auto [label, color] : {std::pair{CellLabel::Gray, "#c8c8c8"}, std::pair{CellLabel::Black, "#505050"}})
      for (const auto& cell : sol.cells->cells_with(label, opt.max_cells)) {
        const double x = to_double(sol.cells->cell_interval(cell[0]).lo);
        const double y = to_double(sol.cells->cell_interval(cell[1]).hi);
        o << "<rect x=\"" << X(x) << "\" y=\"" << Y(y) << "\" width=\"" << num(c * scale) << "\" height=\""
          << num(c * scale) << "\" fill=\"" << color << "\"/>\n";
      }
    o << "</g>\n";
  }

  const double eps = to_double(opt.eps);
  o << "<g id=\"items\" stroke=\"black\" stroke-width=\"0.5\" fill-opacity=\"0.8\">\n";
  for (std::size_t m = 0; m < sol.placements.size() && m < sol.selected.size(); ++m) {
    const Item& it = items.at(sol.selected[m]);
    const Placement& p = sol.placements[m];
    if (it.is_round()) {
      auto c = p.point();
      o << "<circle id=\"" << it.id << "\" cx=\"" << X(c[0]) << "\" cy=\"" << Y(c[1]) << "\" r=\""
        << num(it.r_out() * scale) << "\" fill=\"" << fill_for(it, eps) << "\"/>\n";
    } else {
      o << "<polygon id=\"" << it.id << "\" points=\"";
      bool first = true;
      for (const auto& v : placed_vertices(*it.polygon, p.exact_point())) {
        if (!first) o << ' ';
        first = false;
        o << X(to_double(v[0])) << ',' << Y(to_double(v[1]));
      }
      o << "\" fill=\"" << fill_for(it, eps) << "\"/>\n";
    }
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace geopack
