#include "geopack/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace geopack {

const char* to_string(CellLabel l) {
  switch (l) {
    case CellLabel::White: return "white";
    case CellLabel::Gray: return "gray";
    case CellLabel::Black: return "black";
  }
  return "white";
}

namespace {

using Span = std::pair<long long, long long>;  // inclusive index range

Rational gap(const Rational& clo, const Rational& chi, const RationalInterval& box) {
  Rational g = 0;
  if (clo > box.hi) g = clo - box.hi;
  if (box.lo > chi) g = std::max(g, Rational(box.lo - chi));
  return g;
}

Rational far(const Rational& clo, const Rational& chi, const RationalInterval& box) {
  return std::max(Rational(chi - box.lo), Rational(box.hi - clo));
}

double gap_d(double clo, double chi, double blo, double bhi) { return std::max({0.0, clo - bhi, blo - chi}); }
double far_d(double clo, double chi, double blo, double bhi) { return std::max(chi - blo, bhi - clo); }

// Monotone predicate fixup: start from an approximate inclusive range and
// correct both ends with the exact predicate.
template <class Pred>
std::optional<Span> fix_range(long long lo, long long hi, long long n, const Pred& pred, long long anchor) {
  lo = std::clamp(lo, 0LL, n - 1);
  hi = std::clamp(hi, 0LL, n - 1);
  if (lo > hi) {
    long long a = std::clamp(anchor, 0LL, n - 1);
    if (!pred(a)) return std::nullopt;
    lo = hi = a;
  }
  while (lo <= hi && !pred(lo)) ++lo;
  while (hi >= lo && !pred(hi)) --hi;
  if (lo > hi) {
    long long a = std::clamp(anchor, 0LL, n - 1);
    if (!pred(a)) return std::nullopt;
    lo = hi = a;
  }
  while (lo > 0 && pred(lo - 1)) --lo;
  while (hi < n - 1 && pred(hi + 1)) ++hi;
  return Span{lo, hi};
}

long long merged_length(std::vector<Span>& v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  long long total = 0;
  long long cl = v[0].first, ch = v[0].second;
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k].first <= ch + 1) {
      ch = std::max(ch, v[k].second);
    } else {
      total += ch - cl + 1;
      cl = v[k].first;
      ch = v[k].second;
    }
  }
  return total + ch - cl + 1;
}

void clip(std::vector<Span>& v, long long lo, long long hi) {
  std::vector<Span> out;
  for (auto [a, b] : v) {
    a = std::max(a, lo);
    b = std::min(b, hi - 1);
    if (a <= b) out.emplace_back(a, b);
  }
  v = std::move(out);
}

// x-range of a convex polygon clipped to the closed band y in [y0, y1].
std::optional<std::pair<Rational, Rational>> band_projection(const std::vector<Point2>& p, const Rational& y0,
                                                             const Rational& y1) {
  std::optional<Rational> lo, hi;
  auto take = [&](const Rational& x) {
    if (!lo || x < *lo) lo = x;
    if (!hi || x > *hi) hi = x;
  };
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto &a = p[i], &b = p[(i + 1) % n];
    if (a[1] >= y0 && a[1] <= y1) take(a[0]);
    for (const Rational* y : {&y0, &y1}) {
      if ((a[1] - *y) * (b[1] - *y) < 0) take(a[0] + (b[0] - a[0]) * (*y - a[1]) / (b[1] - a[1]));
    }
  }
  if (!lo) return std::nullopt;
  return std::pair{*lo, *hi};
}

// x-interval of the polygon on the horizontal line y.
std::optional<std::pair<Rational, Rational>> slice(const std::vector<Point2>& p, const Rational& y) {
  return band_projection(p, y, y);
}

struct RowScanner {
  const CellMap& m;

  // Non-white and black index ranges on axis 0 for the row fixed by `rest` (axes 1..d-1).
  void circle_row(const LegalRegion& c, const std::vector<long long>& rest, std::vector<Span>& nonwhite,
                  std::vector<Span>& black) const {
    const long long n = m.cells_per_axis[0];
    const double e = to_double(m.eps_cell);
    const Rational r2 = c.radius * c.radius;
    const double r2d = to_double(r2);
    Rational G = 0, F = 0;
    double Gd = 0, Fd = 0;
    for (std::size_t a = 1; a < static_cast<std::size_t>(m.d); ++a) {
      Rational lo = m.eps_cell * rest[a - 1], hi = lo + m.eps_cell;
      Rational g = gap(lo, hi, c.centers[a]), f = far(lo, hi, c.centers[a]);
      G += g * g;
      F += f * f;
    }
    Gd = to_double(G);
    Fd = to_double(F);
    const double blo = to_double(c.centers[0].lo), bhi = to_double(c.centers[0].hi);
    auto cell_lo = [&](long long i) { return m.eps_cell * Rational(i); };
    auto decide = [&](double lhs, double rhs, auto exact) {
      double tol = 1e-11 * (1.0 + std::abs(rhs));
      if (lhs < rhs - tol) return true;
      if (lhs > rhs + tol) return false;
      return exact();
    };
    auto nw = [&](long long i) {
      double g = gap_d(i * e, (i + 1) * e, blo, bhi);
      return decide(g * g, r2d - Gd, [&] {
        Rational lo = cell_lo(i);
        Rational gg = gap(lo, lo + m.eps_cell, c.centers[0]);
        return gg * gg <= r2 - G;
      });
    };
    auto bl = [&](long long i) {
      double f = far_d(i * e, (i + 1) * e, blo, bhi);
      return decide(f * f, r2d - Fd, [&] {
        Rational lo = cell_lo(i);
        Rational ff = far(lo, lo + m.eps_cell, c.centers[0]);
        return ff * ff <= r2 - F;
      });
    };
    const long long mid = static_cast<long long>(std::floor(0.5 * (blo + bhi) / e));
    if (r2d - Gd >= -1e-9) {
      double w = std::sqrt(std::max(0.0, r2d - Gd));
      auto s = fix_range(static_cast<long long>(std::ceil((blo - w) / e - 1)),
                         static_cast<long long>(std::floor((bhi + w) / e)), n, nw, mid);
      if (s) nonwhite.push_back(*s);
    }
    if (r2d - Fd >= -1e-9) {
      double v = std::sqrt(std::max(0.0, r2d - Fd));
      auto s = fix_range(static_cast<long long>(std::ceil((bhi - v) / e)),
                         static_cast<long long>(std::floor((blo + v) / e) - 1), n, bl, mid);
      if (s) black.push_back(*s);
    }
  }

  void polygon_row(const PlacedPolygon& p, long long row, std::vector<Span>& nonwhite, std::vector<Span>& black) const {
    const long long n = m.cells_per_axis[0];
    Rational y0 = m.eps_cell * Rational(row), y1 = y0 + m.eps_cell;
    // Non-white means the interiors meet; contact along an edge leaves the cell white.
    Rational ymin = p.vertices[0][1], ymax = ymin;
    for (const auto& v : p.vertices) {
      ymin = std::min(ymin, v[1]);
      ymax = std::max(ymax, v[1]);
    }
    const Rational b0 = std::max(y0, ymin), b1 = std::min(y1, ymax);
    auto pr = b0 < b1 ? band_projection(p.vertices, b0, b1) : std::nullopt;
    if (pr) {
      long long lo = floor_ll(pr->first / m.eps_cell), hi = ceil_ll(pr->second / m.eps_cell) - 1;
      lo = std::max(lo, 0LL);
      hi = std::min(hi, n - 1);
      if (lo <= hi) nonwhite.emplace_back(lo, hi);
    }
    auto s0 = slice(p.vertices, y0), s1 = slice(p.vertices, y1);
    if (s0 && s1) {
      Rational l = std::max(s0->first, s1->first), r = std::min(s0->second, s1->second);
      long long lo = ceil_ll(l / m.eps_cell), hi = floor_ll(r / m.eps_cell) - 1;
      lo = std::max(lo, 0LL);
      hi = std::min(hi, n - 1);
      if (lo <= hi) black.emplace_back(lo, hi);
    }
  }

  void row(const std::vector<long long>& rest, std::vector<Span>& nonwhite, std::vector<Span>& black) const {
    nonwhite.clear();
    black.clear();
    for (const auto& c : m.circles) circle_row(c, rest, nonwhite, black);
    for (const auto& p : m.polygons) polygon_row(p, rest[0], nonwhite, black);
  }
};

template <class F>
void for_rows(const CellMap& m, const std::vector<long long>& lo, const std::vector<long long>& hi, F&& f) {
  const std::size_t k = static_cast<std::size_t>(m.d) - 1;
  std::vector<long long> rest(k);
  for (std::size_t a = 0; a < k; ++a) {
    rest[a] = lo[a + 1];
    if (lo[a + 1] >= hi[a + 1]) return;
  }
  for (;;) {
    f(rest);
    std::size_t a = 0;
    while (a < k && ++rest[a] == hi[a + 1]) {
      rest[a] = lo[a + 1];
      ++a;
    }
    if (a == k) break;
  }
}

}  // namespace

BigInt CellMap::cell_count() const {
  BigInt c = 1;
  for (long long n : cells_per_axis) c *= n;
  return c;
}

RationalInterval CellMap::cell_interval(long long index) const {
  Rational lo = eps_cell * Rational(index);
  return {lo, lo + eps_cell};
}

Rational CellMap::cell_volume() const { return rational_pow(eps_cell, static_cast<unsigned>(d)); }

std::optional<std::size_t> CellMap::provenance(const std::vector<long long>& cell) const {
  std::optional<std::size_t> gray;
  for (std::size_t k = 0; k < circles.size(); ++k) {
    const auto& c = circles[k];
    Rational G = 0, F = 0;
    for (std::size_t a = 0; a < static_cast<std::size_t>(d); ++a) {
      auto iv = cell_interval(cell[a]);
      Rational g = gap(iv.lo, iv.hi, c.centers[a]), f = far(iv.lo, iv.hi, c.centers[a]);
      G += g * g;
      F += f * f;
    }
    Rational r2 = c.radius * c.radius;
    if (F <= r2) return k;
    if (G <= r2 && !gray) gray = k;
  }
  for (std::size_t k = 0; k < polygons.size(); ++k) {
    std::vector<Span> nw, bl;
    RowScanner{*this}.polygon_row(polygons[k], cell[1], nw, bl);
    for (auto [a, b] : bl)
      if (cell[0] >= a && cell[0] <= b) return circles.size() + k;
    for (auto [a, b] : nw)
      if (cell[0] >= a && cell[0] <= b && !gray) gray = circles.size() + k;
  }
  return gray;
}

CellLabel CellMap::label(const std::vector<long long>& cell) const {
  if (cell.size() != static_cast<std::size_t>(d)) throw std::invalid_argument("cell index dimension mismatch");
  bool gray = false;
  for (const auto& c : circles) {
    Rational G = 0, F = 0;
    for (std::size_t a = 0; a < static_cast<std::size_t>(d); ++a) {
      auto iv = cell_interval(cell[a]);
      Rational g = gap(iv.lo, iv.hi, c.centers[a]), f = far(iv.lo, iv.hi, c.centers[a]);
      G += g * g;
      F += f * f;
    }
    Rational r2 = c.radius * c.radius;
    if (F <= r2) return CellLabel::Black;
    if (G <= r2) gray = true;
  }
  for (const auto& p : polygons) {
    std::vector<Span> nw, bl;
    RowScanner{*this}.polygon_row(p, cell[1], nw, bl);
    for (auto [a, b] : bl)
      if (cell[0] >= a && cell[0] <= b) return CellLabel::Black;
    for (auto [a, b] : nw)
      if (cell[0] >= a && cell[0] <= b) gray = true;
  }
  return gray ? CellLabel::Gray : CellLabel::White;
}

LabelCounts CellMap::counts_in(const std::vector<long long>& lo, const std::vector<long long>& hi) const {
  LabelCounts out;
  RowScanner rs{*this};
  std::vector<Span> nw, bl;
  const long long width = std::max(0LL, hi[0] - lo[0]);
  for_rows(*this, lo, hi, [&](const std::vector<long long>& rest) {
    rs.row(rest, nw, bl);
    clip(nw, lo[0], hi[0]);
    clip(bl, lo[0], hi[0]);
    long long b = merged_length(bl);
    std::vector<Span> all = nw;
    all.insert(all.end(), bl.begin(), bl.end());
    long long non_white = merged_length(all);
    out.black += b;
    out.gray += non_white - b;
    out.white += width - non_white;
  });
  return out;
}

LabelCounts CellMap::counts() const {
  std::vector<long long> lo(static_cast<std::size_t>(d), 0);
  return counts_in(lo, cells_per_axis);
}

std::vector<std::vector<long long>> CellMap::cells_with(CellLabel want, std::size_t limit) const {
  std::vector<std::vector<long long>> out;
  std::vector<long long> lo(static_cast<std::size_t>(d), 0);
  RowScanner rs{*this};
  std::vector<Span> nw, bl;
  const long long n = cells_per_axis[0];
  std::vector<CellLabel> row_labels(static_cast<std::size_t>(n));
  for_rows(*this, lo, cells_per_axis, [&](const std::vector<long long>& rest) {
    if (out.size() >= limit) return;
    rs.row(rest, nw, bl);
    std::fill(row_labels.begin(), row_labels.end(), CellLabel::White);
    for (auto [a, b] : nw)
      for (long long i = a; i <= b; ++i) row_labels[static_cast<std::size_t>(i)] = CellLabel::Gray;
    for (auto [a, b] : bl)
      for (long long i = a; i <= b; ++i) row_labels[static_cast<std::size_t>(i)] = CellLabel::Black;
    for (long long i = 0; i < n && out.size() < limit; ++i)
      if (row_labels[static_cast<std::size_t>(i)] == want) {
        std::vector<long long> cell{i};
        cell.insert(cell.end(), rest.begin(), rest.end());
        out.push_back(std::move(cell));
      }
  });
  return out;
}

CellMap build_grid(const KnapsackSpec& k, const Rational& eps_cell, const std::optional<GridBoundCheck>& check) {
  if (eps_cell <= 0) throw std::invalid_argument("eps_cell must be positive");
  if (!is_integer(Rational(1) / eps_cell)) throw std::invalid_argument("1/eps_cell must be an integer");
  if (check) {
    double bound = to_double(check->eps) * std::pow(check->eps_large, 3) / 240.0;
    if (to_double(eps_cell) > bound)
      throw std::invalid_argument("eps_cell exceeds eps*eps_large^3/240 = " + std::to_string(bound));
  }
  CellMap m;
  m.d = k.dimension;
  m.eps_cell = eps_cell;
  for (const auto& s : k.sides) {
    Rational q = s / eps_cell;
    if (!is_integer(q)) throw std::invalid_argument("knapsack side is not a multiple of eps_cell");
    m.cells_per_axis.push_back(floor_ll(q));
  }
  return m;
}

CellMap classify_cells_circles(CellMap map, std::vector<LegalRegion> large) {
  for (const auto& c : large)
    if (c.centers.size() != static_cast<std::size_t>(map.d)) throw std::invalid_argument("legal box dimension mismatch");
  map.circles = std::move(large);
  return map;
}

CellMap classify_cells_polygons(CellMap map, std::vector<PlacedPolygon> large) {
  if (map.d != 2) throw std::invalid_argument("polygon cell classification needs d = 2");
  map.polygons = std::move(large);
  return map;
}

std::vector<CornerBox> corner_white_regions(const Rational& eps_large, int d) {
  Rational s = eps_large / 4;
  std::vector<CornerBox> out;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    CornerBox b;
    for (int a = 0; a < d; ++a) {
      bool high = mask & (1u << a);
      b.lo.push_back(high ? Rational(1 - s) : Rational(0));
      b.hi.push_back(high ? Rational(1) : s);
    }
    out.push_back(std::move(b));
  }
  return out;
}

double polygon_corner_side(double eps_large, double alpha, int q, double t) {
  double lstar = 2 * std::numbers::pi * eps_large / (q * t);
  return lstar * std::sin(alpha) / 2;
}

std::vector<CornerBox> corner_white_regions_polygons(double eps_large, double alpha, int q, double t) {
  Rational s = from_double(polygon_corner_side(eps_large, alpha, q, t));
  std::vector<CornerBox> out;
  for (unsigned mask = 0; mask < 4; ++mask) {
    CornerBox b;
    for (int a = 0; a < 2; ++a) {
      bool high = mask & (1u << a);
      b.lo.push_back(high ? Rational(1 - s) : Rational(0));
      b.hi.push_back(high ? Rational(1) : s);
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace geopack
