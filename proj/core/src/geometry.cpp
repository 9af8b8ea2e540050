#include "geopack/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

namespace geopack {

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rational dist_sq(const Point2& a, const Point2& b) {
  Rational dx = a[0] - b[0], dy = a[1] - b[1];
  return dx * dx + dy * dy;
}

struct Circle {
  Point2 c;
  Rational r2;
};

bool covers(const Circle& c, const std::vector<Point2>& pts) {
  for (const auto& p : pts)
    if (dist_sq(c.c, p) > c.r2) return false;
  return true;
}

Circle min_enclosing_circle(const std::vector<Point2>& pts) {
  std::optional<Circle> best;
  auto consider = [&](const Circle& c) {
    if (best && c.r2 >= best->r2) return;
    if (covers(c, pts)) best = c;
  };
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Point2 m{(pts[i][0] + pts[j][0]) / 2, (pts[i][1] + pts[j][1]) / 2};
      consider({m, dist_sq(pts[i], pts[j]) / 4});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto &a = pts[i], &b = pts[j], &c = pts[k];
        Rational d = 2 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]));
        if (d == 0) continue;
        Rational a2 = a[0] * a[0] + a[1] * a[1], b2 = b[0] * b[0] + b[1] * b[1], c2 = c[0] * c[0] + c[1] * c[1];
        Point2 u{(a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d,
                 (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d};
        consider({u, dist_sq(u, a)});
      }
  return *best;
}

// Largest inscribed circle: enumerate vertices of the (p, r) feasible region.
double chebyshev_radius(const std::vector<Point2>& v) {
  const std::size_t n = v.size();
  std::vector<std::array<double, 3>> h(n);  // nx, ny, c with n.p + r <= c
  for (std::size_t i = 0; i < n; ++i) {
    double x0 = to_double(v[i][0]), y0 = to_double(v[i][1]);
    double x1 = to_double(v[(i + 1) % n][0]), y1 = to_double(v[(i + 1) % n][1]);
    double nx = y1 - y0, ny = x0 - x1, len = std::hypot(nx, ny);
    nx /= len;
    ny /= len;
    h[i] = {nx, ny, nx * x0 + ny * y0};
  }
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto &a = h[i], &b = h[j], &c = h[k];
        double det = a[0] * (b[1] - c[1]) - a[1] * (b[0] - c[0]) + (b[0] * c[1] - b[1] * c[0]);
        if (std::abs(det) < 1e-14) continue;
        double dx = a[2] * (b[1] - c[1]) - a[1] * (b[2] - c[2]) + (b[2] * c[1] - b[1] * c[2]);
        double dy = a[0] * (b[2] - c[2]) - a[2] * (b[0] - c[0]) + (b[0] * c[2] - b[2] * c[0]);
        double dr = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                    a[2] * (b[0] * c[1] - b[1] * c[0]);
        double px = dx / det, py = dy / det, r = dr / det;
        if (r <= best) continue;
        bool ok = true;
        for (const auto& e : h)
          if (e[0] * px + e[1] * py + r > e[2] + 1e-12) {
            ok = false;
            break;
          }
        if (ok) best = r;
      }
  return best;
}

std::vector<Rational> require_exact(const Placement& p) {
  if (auto* e = std::get_if<ExactCoords>(&p.coords)) return e->x;
  throw std::invalid_argument("exact coordinates required");
}

std::vector<double> require_point(const Placement& p) {
  if (p.is_box()) throw std::invalid_argument("box placement in a point predicate; refine or convert first");
  return p.point();
}

void check_dims(const Item& a, const Placement& pa, const Item& b, const Placement& pb) {
  if (a.dimension != b.dimension) throw std::invalid_argument("items of different dimension");
  if (pa.dimension() != static_cast<std::size_t>(a.dimension) ||
      pb.dimension() != static_cast<std::size_t>(b.dimension))
    throw std::invalid_argument("placement dimension mismatch");
}

// Exact segment-point squared distance.
Rational seg_dist_sq(const Point2& p, const Point2& a, const Point2& b) {
  Rational dx = b[0] - a[0], dy = b[1] - a[1];
  Rational len2 = dx * dx + dy * dy;
  Rational t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2;
  if (t <= 0) return dist_sq(p, a);
  if (t >= 1) return dist_sq(p, b);
  Point2 q{a[0] + t * dx, a[1] + t * dy};
  return dist_sq(p, q);
}

bool inside_closed(const std::vector<Point2>& poly, const Point2& p) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i)
    if (cross(poly[i], poly[(i + 1) % n], p) < 0) return false;
  return true;
}

bool exact_overlap(const Item& a, const std::vector<Rational>& xa, const Item& b, const std::vector<Rational>& xb) {
  if (a.is_round() && b.is_round()) {
    Rational d2 = 0;
    for (std::size_t i = 0; i < xa.size(); ++i) d2 += (xa[i] - xb[i]) * (xa[i] - xb[i]);
    Rational s = a.radius + b.radius;
    return d2 < s * s;
  }
  if (!a.is_round() && !b.is_round()) {
    auto va = placed_vertices(*a.polygon, xa), vb = placed_vertices(*b.polygon, xb);
    for (const auto* poly : {&va, &vb}) {
      const std::size_t n = poly->size();
      for (std::size_t i = 0; i < n; ++i) {
        const auto &p0 = (*poly)[i], &p1 = (*poly)[(i + 1) % n];
        Rational nx = p1[1] - p0[1], ny = p0[0] - p1[0];
        auto proj = [&](const std::vector<Point2>& q) {
          Rational lo = nx * q[0][0] + ny * q[0][1], hi = lo;
          for (const auto& v : q) {
            Rational t = nx * v[0] + ny * v[1];
            if (t < lo) lo = t;
            if (t > hi) hi = t;
          }
          return std::pair{lo, hi};
        };
        auto [alo, ahi] = proj(va);
        auto [blo, bhi] = proj(vb);
        if (ahi <= blo || bhi <= alo) return false;
      }
    }
    return true;
  }
  const Item& disk = a.is_round() ? a : b;
  const Item& poly = a.is_round() ? b : a;
  const auto& xd = a.is_round() ? xa : xb;
  const auto& xp = a.is_round() ? xb : xa;
  auto v = placed_vertices(*poly.polygon, xp);
  Point2 c{xd[0], xd[1]};
  if (inside_closed(v, c)) return true;
  Rational r2 = disk.radius * disk.radius;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (seg_dist_sq(c, v[i], v[(i + 1) % v.size()]) < r2) return true;
  return false;
}

std::vector<std::array<double, 2>> placed_vertices_d(const PolygonShape& s, const std::vector<double>& x) {
  const auto& a = s.vertices[s.anchor];
  double ax = to_double(a[0]), ay = to_double(a[1]);
  std::vector<std::array<double, 2>> out;
  out.reserve(s.vertices.size());
  for (const auto& v : s.vertices) out.push_back({to_double(v[0]) - ax + x[0], to_double(v[1]) - ay + x[1]});
  return out;
}

double seg_dist_d(double px, double py, const std::array<double, 2>& a, const std::array<double, 2>& b) {
  double dx = b[0] - a[0], dy = b[1] - a[1];
  double t = ((px - a[0]) * dx + (py - a[1]) * dy) / (dx * dx + dy * dy);
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(px - (a[0] + t * dx), py - (a[1] + t * dy));
}

// Signed penetration depth in floating point; <= 0 means separated or touching.
double float_depth(const Item& a, const std::vector<double>& xa, const Item& b, const std::vector<double>& xb) {
  if (a.is_round() && b.is_round()) {
    double d2 = 0;
    for (std::size_t i = 0; i < xa.size(); ++i) d2 += (xa[i] - xb[i]) * (xa[i] - xb[i]);
    return to_double(a.radius) + to_double(b.radius) - std::sqrt(d2);
  }
  if (!a.is_round() && !b.is_round()) {
    auto va = placed_vertices_d(*a.polygon, xa), vb = placed_vertices_d(*b.polygon, xb);
    double depth = std::numeric_limits<double>::infinity();
    for (const auto* poly : {&va, &vb}) {
      const std::size_t n = poly->size();
      for (std::size_t i = 0; i < n; ++i) {
        const auto &p0 = (*poly)[i], &p1 = (*poly)[(i + 1) % n];
        double nx = p1[1] - p0[1], ny = p0[0] - p1[0], len = std::hypot(nx, ny);
        nx /= len;
        ny /= len;
        auto proj = [&](const std::vector<std::array<double, 2>>& q) {
          double lo = std::numeric_limits<double>::infinity(), hi = -lo;
          for (const auto& v : q) {
            double t = nx * v[0] + ny * v[1];
            lo = std::min(lo, t);
            hi = std::max(hi, t);
          }
          return std::pair{lo, hi};
        };
        auto [alo, ahi] = proj(va);
        auto [blo, bhi] = proj(vb);
        depth = std::min(depth, std::min(ahi, bhi) - std::max(alo, blo));
      }
    }
    return depth;
  }
  const Item& disk = a.is_round() ? a : b;
  const Item& poly = a.is_round() ? b : a;
  const auto& xd = a.is_round() ? xa : xb;
  const auto& xp = a.is_round() ? xb : xa;
  auto v = placed_vertices_d(*poly.polygon, xp);
  double r = to_double(disk.radius);
  double dmin = std::numeric_limits<double>::infinity();
  bool inside = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto &p0 = v[i], &p1 = v[(i + 1) % v.size()];
    double c = (p1[0] - p0[0]) * (xd[1] - p0[1]) - (p1[1] - p0[1]) * (xd[0] - p0[0]);
    if (c < 0) inside = false;
    dmin = std::min(dmin, seg_dist_d(xd[0], xd[1], p0, p1));
  }
  return inside ? r + dmin : r - dmin;
}

}  // namespace

PolygonBuild build_polygon(std::vector<Point2> v) {
  const std::size_t n = v.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] == v[(i + 1) % n]) throw std::invalid_argument("degenerate polygon: repeated vertex " + std::to_string(i));
  Rational twice_area = 0;
  for (std::size_t i = 0; i < n; ++i)
    twice_area += v[i][0] * v[(i + 1) % n][1] - v[(i + 1) % n][0] * v[i][1];
  if (twice_area == 0) throw std::invalid_argument("degenerate polygon (zero area)");
  PolygonBuild out;
  // index map back to the caller's numbering for error messages
  std::vector<std::size_t> orig(n);
  for (std::size_t i = 0; i < n; ++i) orig[i] = i;
  if (twice_area < 0) {
    std::reverse(v.begin(), v.end());
    std::reverse(orig.begin(), orig.end());
    twice_area = -twice_area;
    out.reversed = true;
  }
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto &prev = v[(i + n - 1) % n], &cur = v[i], &next = v[(i + 1) % n];
    if (cross(prev, cur, next) < 0)
      throw std::invalid_argument("non-convex polygon: reflex vertex " + std::to_string(orig[i]));
    double ax = to_double(cur[0] - prev[0]), ay = to_double(cur[1] - prev[1]);
    double bx = to_double(next[0] - cur[0]), by = to_double(next[1] - cur[1]);
    turning += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
  }
  if (turning > 2 * std::numbers::pi + 1e-6)
    throw std::invalid_argument("non-convex polygon: self-intersecting boundary");

  PolygonShape& s = out.shape;
  s.vertices = std::move(v);
  s.area = twice_area / 2;
  for (std::size_t i = 1; i < n; ++i) {
    const auto &a = s.vertices[i], &b = s.vertices[s.anchor];
    if (a[0] < b[0] || (a[0] == b[0] && a[1] < b[1])) s.anchor = i;
  }
  const auto& an = s.vertices[s.anchor];
  s.extent_right = s.extent_down = s.extent_up = 0;
  for (const auto& p : s.vertices) {
    s.extent_right = std::max(s.extent_right, Rational(p[0] - an[0]));
    s.extent_down = std::max(s.extent_down, Rational(an[1] - p[1]));
    s.extent_up = std::max(s.extent_up, Rational(p[1] - an[1]));
  }
  Circle mec = min_enclosing_circle(s.vertices);
  s.mec_center = mec.c;
  s.r_out_sq = mec.r2;
  s.r_out = std::sqrt(to_double(mec.r2));
  s.r_in = chebyshev_radius(s.vertices);
  s.min_edge = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const auto &prev = s.vertices[(i + n - 1) % n], &cur = s.vertices[i], &next = s.vertices[(i + 1) % n];
    double ax = to_double(prev[0] - cur[0]), ay = to_double(prev[1] - cur[1]);
    double bx = to_double(next[0] - cur[0]), by = to_double(next[1] - cur[1]);
    s.interior_angles.push_back(std::atan2(std::abs(ax * by - ay * bx), ax * bx + ay * by));
    double len = std::sqrt(to_double(dist_sq(cur, next)));
    s.min_edge = std::min(s.min_edge, len);
    s.max_edge = std::max(s.max_edge, len);
  }
  return out;
}

Item Item::disk(std::string id, Rational radius, Rational profit) {
  return sphere(std::move(id), 2, std::move(radius), std::move(profit));
}

Item Item::sphere(std::string id, int d, Rational radius, Rational profit) {
  if (radius <= 0) throw std::invalid_argument("radius must be positive");
  if (profit < 0) throw std::invalid_argument("profit must be nonnegative");
  if (d < 2) throw std::invalid_argument("dimension must be at least 2");
  Item it;
  it.id = std::move(id);
  it.kind = d == 2 ? ItemKind::Disk : ItemKind::Sphere;
  it.dimension = d;
  it.radius = std::move(radius);
  it.profit = std::move(profit);
  return it;
}

Item Item::make_polygon(std::string id, std::vector<Point2> vertices, Rational profit) {
  if (profit < 0) throw std::invalid_argument("profit must be nonnegative");
  Item it;
  it.id = std::move(id);
  it.kind = ItemKind::Polygon;
  it.dimension = 2;
  it.polygon = std::make_shared<const PolygonShape>(build_polygon(std::move(vertices)).shape);
  it.profit = std::move(profit);
  return it;
}

double Item::r_in() const { return is_round() ? to_double(radius) : polygon->r_in; }
double Item::r_out() const { return is_round() ? to_double(radius) : polygon->r_out; }
Rational Item::r_out_sq() const { return is_round() ? Rational(radius * radius) : polygon->r_out_sq; }

double ball_volume(int d, double r) {
  return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0) * std::pow(r, d);
}

double Item::volume() const { return is_round() ? ball_volume(dimension, to_double(radius)) : to_double(polygon->area); }

Placement Placement::exact(std::string id, std::vector<Rational> x) { return {std::move(id), ExactCoords{std::move(x)}}; }
Placement Placement::floating(std::string id, std::vector<double> x, double tol) {
  return {std::move(id), FloatCoords{std::move(x), tol}};
}
Placement Placement::box(std::string id, std::vector<RationalInterval> x) {
  for (const auto& iv : x)
    if (iv.lo > iv.hi) throw std::invalid_argument("empty placement box");
  return {std::move(id), BoxCoords{std::move(x)}};
}

std::size_t Placement::dimension() const {
  return std::visit([](const auto& c) { return c.x.size(); }, coords);
}

std::vector<double> Placement::point() const {
  std::vector<double> out;
  if (auto* e = std::get_if<ExactCoords>(&coords)) {
    for (const auto& v : e->x) out.push_back(to_double(v));
  } else if (auto* f = std::get_if<FloatCoords>(&coords)) {
    out = f->x;
  } else {
    for (const auto& iv : std::get<BoxCoords>(coords).x) out.push_back(to_double(iv.mid()));
  }
  return out;
}

std::vector<Rational> Placement::exact_point() const {
  std::vector<Rational> out;
  if (auto* e = std::get_if<ExactCoords>(&coords)) return e->x;
  if (auto* f = std::get_if<FloatCoords>(&coords)) {
    for (double v : f->x) out.push_back(from_double(v));
    return out;
  }
  for (const auto& iv : std::get<BoxCoords>(coords).x) out.push_back(iv.mid());
  return out;
}

Placement Placement::as_point() const {
  if (!is_box()) return *this;
  double w = 0.0;
  for (const auto& iv : std::get<BoxCoords>(coords).x) w = std::max(w, to_double(iv.width()));
  return floating(item_id, point(), w / 2);
}

Placement Placement::translated(const std::vector<Rational>& delta) const {
  Placement p = *this;
  if (auto* e = std::get_if<ExactCoords>(&p.coords)) {
    for (std::size_t i = 0; i < delta.size(); ++i) e->x[i] += delta[i];
  } else if (auto* f = std::get_if<FloatCoords>(&p.coords)) {
    for (std::size_t i = 0; i < delta.size(); ++i) f->x[i] += to_double(delta[i]);
  } else {
    auto& b = std::get<BoxCoords>(p.coords);
    for (std::size_t i = 0; i < delta.size(); ++i) {
      b.x[i].lo += delta[i];
      b.x[i].hi += delta[i];
    }
  }
  return p;
}

std::pair<double, double> polygon_radii(const PolygonShape& p) { return {p.r_in, p.r_out}; }

std::vector<Point2> placed_vertices(const PolygonShape& s, const std::vector<Rational>& anchor) {
  const auto& a = s.vertices[s.anchor];
  std::vector<Point2> out;
  out.reserve(s.vertices.size());
  for (const auto& v : s.vertices) out.push_back({v[0] - a[0] + anchor[0], v[1] - a[1] + anchor[1]});
  return out;
}

bool overlap(const Item& a, const Placement& pa, const Item& b, const Placement& pb, double tol) {
  check_dims(a, pa, b, pb);
  if (pa.is_box() || pb.is_box()) throw std::invalid_argument("box placement in overlap test; refine or convert first");
  if (pa.is_exact() && pb.is_exact()) {
    if (!exact_overlap(a, require_exact(pa), b, require_exact(pb))) return false;
    if (tol <= 0) return true;
  }
  return float_depth(a, require_point(pa), b, require_point(pb)) > tol;
}

double overlap_depth(const Item& a, const Placement& pa, const Item& b, const Placement& pb) {
  check_dims(a, pa, b, pb);
  if (pa.is_exact() && pb.is_exact() && !exact_overlap(a, require_exact(pa), b, require_exact(pb))) return 0.0;
  return std::max(0.0, float_depth(a, require_point(pa), b, require_point(pb)));
}

double boundary_violation(const Item& item, const Placement& p, const KnapsackSpec& k) {
  if (p.dimension() != static_cast<std::size_t>(k.dimension) || item.dimension != k.dimension)
    throw std::invalid_argument("dimension mismatch with knapsack");
  if (p.is_exact()) {
    auto x = require_exact(p);
    Rational worst = 0;
    for (int ax = 0; ax < k.dimension; ++ax) {
      auto [lo, hi] = axis_extent_exact(item, x, ax);
      worst = std::max({worst, Rational(-lo), Rational(hi - k.sides[static_cast<std::size_t>(ax)])});
    }
    return to_double(worst);
  }
  auto x = require_point(p);
  double worst = 0.0;
  for (int ax = 0; ax < k.dimension; ++ax) {
    auto [lo, hi] = axis_extent(item, x, ax);
    worst = std::max({worst, -lo, hi - k.side(ax)});
  }
  return worst;
}

bool contained_in_knapsack(const Item& item, const Placement& p, const KnapsackSpec& k, double tol) {
  if (p.is_exact() && tol <= 0) {
    auto x = require_exact(p);
    for (int ax = 0; ax < k.dimension; ++ax) {
      auto [lo, hi] = axis_extent_exact(item, x, ax);
      if (lo < 0 || hi > k.sides[static_cast<std::size_t>(ax)]) return false;
    }
    return true;
  }
  return boundary_violation(item, p, k) <= tol;
}

std::pair<double, double> axis_extent(const Item& item, const std::vector<double>& x, int axis) {
  const auto i = static_cast<std::size_t>(axis);
  if (item.is_round()) {
    double r = to_double(item.radius);
    return {x[i] - r, x[i] + r};
  }
  const auto& s = *item.polygon;
  if (axis == 0) return {x[0], x[0] + to_double(s.extent_right)};
  return {x[1] - to_double(s.extent_down), x[1] + to_double(s.extent_up)};
}

std::pair<Rational, Rational> axis_extent_exact(const Item& item, const std::vector<Rational>& x, int axis) {
  const auto i = static_cast<std::size_t>(axis);
  if (item.is_round()) return {x[i] - item.radius, x[i] + item.radius};
  const auto& s = *item.polygon;
  if (axis == 0) return {x[0], x[0] + s.extent_right};
  return {x[1] - s.extent_down, x[1] + s.extent_up};
}

ValidityReport validate_packing(const std::vector<Item>& items, const std::vector<Placement>& placements,
                                const KnapsackSpec& k, double tol) {
  ValidityReport rep;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i].id, i);
  std::vector<const Item*> it;
  std::vector<Placement> pl;
  std::vector<bool> seen(items.size(), false);
  for (const auto& p : placements) {
    auto f = index.find(p.item_id);
    if (f == index.end()) throw std::invalid_argument("placement for unknown item id '" + p.item_id + "'");
    if (seen[f->second]) throw std::invalid_argument("duplicate placement for item '" + p.item_id + "'");
    seen[f->second] = true;
    it.push_back(&items[f->second]);
    pl.push_back(p.as_point());
  }
  const std::size_t n = pl.size();
  for (std::size_t i = 0; i < n; ++i) {
    double v = boundary_violation(*it[i], pl[i], k);
    bool inside = contained_in_knapsack(*it[i], pl[i], k, tol);
    rep.max_boundary_violation = std::max(rep.max_boundary_violation, v);
    if (!inside) rep.out_of_bounds.push_back(pl[i].item_id);
  }
  // sweep along x: pairs whose x-extents are disjoint cannot overlap
  std::vector<std::pair<double, double>> ext(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    ext[i] = axis_extent(*it[i], pl[i].point(), 0);
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ext[a].first < ext[b].first || (ext[a].first == ext[b].first && a < b);
  });
  const double pad = 1e-9 + std::max(tol, 0.0);
  for (std::size_t oi = 0; oi < n; ++oi) {
    std::size_t i = order[oi];
    for (std::size_t oj = oi + 1; oj < n; ++oj) {
      std::size_t j = order[oj];
      if (ext[j].first > ext[i].second + pad) break;
      double depth = overlap_depth(*it[i], pl[i], *it[j], pl[j]);
      rep.max_overlap_depth = std::max(rep.max_overlap_depth, depth);
      if (overlap(*it[i], pl[i], *it[j], pl[j], tol)) {
        auto a = pl[i].item_id, b = pl[j].item_id;
        if (b < a) std::swap(a, b);
        rep.offending_pairs.emplace_back(a, b);
      }
    }
  }
  std::sort(rep.offending_pairs.begin(), rep.offending_pairs.end());
  rep.valid = rep.offending_pairs.empty() && rep.out_of_bounds.empty();
  return rep;
}

}  // namespace geopack
