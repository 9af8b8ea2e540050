#include "geopack/polygon_lp.hpp"

#include <stdexcept>

namespace geopack {

namespace {

struct Tableau {
  int m, n;
  std::vector<int> B, N;
  std::vector<std::vector<Rational>> D;

  Tableau(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b, const std::vector<Rational>& c)
      : m(static_cast<int>(b.size())),
        n(static_cast<int>(c.size())),
        B(static_cast<std::size_t>(m)),
        N(static_cast<std::size_t>(n) + 1),
        D(static_cast<std::size_t>(m) + 2, std::vector<Rational>(static_cast<std::size_t>(n) + 2, Rational(0))) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) at(i, j) = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (int i = 0; i < m; ++i) {
      B[static_cast<std::size_t>(i)] = n + i;
      at(i, n) = -1;
      at(i, n + 1) = b[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < n; ++j) {
      N[static_cast<std::size_t>(j)] = j;
      at(m, j) = -c[static_cast<std::size_t>(j)];
    }
    N[static_cast<std::size_t>(n)] = -1;
    at(m + 1, n) = 1;
  }

  Rational& at(int i, int j) { return D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  void pivot(int r, int s) {
    Rational inv = Rational(1) / at(r, s);
    for (int i = 0; i < m + 2; ++i) {
      if (i == r || at(i, s) == 0) continue;
      Rational f = at(i, s) * inv;
      for (int j = 0; j < n + 2; ++j)
        if (at(r, j) != 0) at(i, j) -= at(r, j) * f;
      at(i, s) = at(r, s) * f;
    }
    for (int j = 0; j < n + 2; ++j)
      if (j != s) at(r, j) *= inv;
    for (int i = 0; i < m + 2; ++i)
      if (i != r) at(i, s) *= -inv;
    at(r, s) = inv;
    std::swap(B[static_cast<std::size_t>(r)], N[static_cast<std::size_t>(s)]);
  }

  // Bland: entering = smallest label with negative reduced cost, leaving = min ratio then smallest label.
  bool simplex(int phase) {
    const int x = m + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n; ++j) {
        if (N[static_cast<std::size_t>(j)] == -phase) continue;
        if (at(x, j) < 0 && (s == -1 || N[static_cast<std::size_t>(j)] < N[static_cast<std::size_t>(s)])) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (at(i, s) <= 0) continue;
        Rational ratio = at(i, n + 1) / at(i, s);
        if (r == -1 || ratio < best || (ratio == best && B[static_cast<std::size_t>(i)] < B[static_cast<std::size_t>(r)])) {
          r = i;
          best = ratio;
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }
};

}  // namespace

LPResult simplex_max(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                     const std::vector<Rational>& c) {
  Tableau T(A, b, c);
  LPResult res;
  const int m = T.m, n = T.n;
  if (m > 0) {
    int r = 0;
    for (int i = 1; i < m; ++i)
      if (T.at(i, n + 1) < T.at(r, n + 1)) r = i;
    if (T.at(r, n + 1) < 0) {
      T.pivot(r, n);
      if (!T.simplex(2) || T.at(m + 1, n + 1) < 0) {
        res.kind = LPResult::Kind::Infeasible;
        return res;
      }
      for (int i = 0; i < m; ++i)
        if (T.B[static_cast<std::size_t>(i)] == -1) {
          int s = -1;
          for (int j = 0; j <= n; ++j)
            if (T.at(i, j) != 0 && (s == -1 || T.N[static_cast<std::size_t>(j)] < T.N[static_cast<std::size_t>(s)])) s = j;
          if (s >= 0) T.pivot(i, s);
        }
    }
  }
  bool ok = T.simplex(1);
  res.x.assign(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < m; ++i)
    if (T.B[static_cast<std::size_t>(i)] >= 0 && T.B[static_cast<std::size_t>(i)] < n)
      res.x[static_cast<std::size_t>(T.B[static_cast<std::size_t>(i)])] = T.at(i, n + 1);
  res.kind = ok ? LPResult::Kind::Optimal : LPResult::Kind::Unbounded;
  res.value = T.at(m, n + 1);
  return res;
}

ContainerExtents container_extents(const PolygonShape& p) { return {p.extent_right, p.extent_down, p.extent_up}; }

PolygonLPSystem build_polygon_lp(const std::vector<const PolygonShape*>& polys,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                 const std::vector<SideChoice>& guess, const KnapsackSpec& k) {
  const std::size_t t = polys.size();
  PolygonLPSystem sys;
  auto row = [&]() { return std::vector<Rational>(2 * t, Rational(0)); };
  // container: x_i + a_i <= W, -y_i + b_i <= 0, y_i + c_i <= H; x_i >= 0 is the sign constraint
  for (std::size_t i = 0; i < t; ++i) {
    auto e = container_extents(*polys[i]);
    auto r1 = row();
    r1[2 * i] = 1;
    sys.A.push_back(r1);
    sys.b.push_back(k.sides[0] - e.a);
    auto r2 = row();
    r2[2 * i + 1] = -1;
    sys.A.push_back(r2);
    sys.b.push_back(-e.b);
    auto r3 = row();
    r3[2 * i + 1] = 1;
    sys.A.push_back(r3);
    sys.b.push_back(k.sides[1] - e.c);
  }
  for (std::size_t p = 0; p < guess.size(); ++p) {
    auto [i, j] = pairs[p];
    const SideChoice& g = guess[p];
    std::size_t own = g.owner == 0 ? i : j, other = g.owner == 0 ? j : i;
    const auto& P = *polys[own];
    const auto& Q = *polys[other];
    const std::size_t n = P.vertices.size();
    if (g.edge >= n) throw std::invalid_argument("edge index out of range");
    const auto& v0 = P.vertices[g.edge];
    const auto& v1 = P.vertices[(g.edge + 1) % n];
    Rational nx = v1[1] - v0[1], ny = v0[0] - v1[0];  // outward normal of a CCW edge
    const auto& ap = P.vertices[P.anchor];
    const auto& aq = Q.vertices[Q.anchor];
    Rational edge_off = nx * (v0[0] - ap[0]) + ny * (v0[1] - ap[1]);
    Rational qmin;
    bool first = true;
    for (const auto& w : Q.vertices) {
      Rational v = nx * (w[0] - aq[0]) + ny * (w[1] - aq[1]);
      if (first || v < qmin) qmin = v;
      first = false;
    }
    // n.(x_own + v0 - a_own) <= n.(x_other + w - a_other) for all w of the other polygon
    auto r = row();
    r[2 * own] += nx;
    r[2 * own + 1] += ny;
    r[2 * other] -= nx;
    r[2 * other + 1] -= ny;
    sys.A.push_back(r);
    sys.b.push_back(qmin - edge_off);
  }
  return sys;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t t) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = i + 1; j < t; ++j) p.emplace_back(i, j);
  return p;
}

std::optional<std::vector<std::vector<Rational>>> solve_system(const PolygonLPSystem& sys, std::size_t t) {
  std::vector<Rational> c(2 * t, Rational(-1));
  auto res = simplex_max(sys.A, sys.b, c);
  if (res.kind != LPResult::Kind::Optimal) return std::nullopt;
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < t; ++i) out.push_back({res.x[2 * i], res.x[2 * i + 1]});
  return out;
}

}  // namespace

std::optional<std::vector<std::vector<Rational>>> polygon_lp_place(const std::vector<Item>& polys,
                                                                   const std::vector<SideChoice>& guess,
                                                                   const KnapsackSpec& k) {
  if (k.dimension != 2) throw std::invalid_argument("polygon placement needs d = 2");
  std::vector<const PolygonShape*> shapes;
  for (const auto& it : polys) {
    if (it.kind != ItemKind::Polygon) throw std::invalid_argument("polygon_lp_place expects polygons");
    shapes.push_back(it.polygon.get());
  }
  auto pairs = all_pairs(shapes.size());
  if (guess.size() != pairs.size()) throw std::invalid_argument("one side choice per pair required");
  return solve_system(build_polygon_lp(shapes, pairs, guess, k), shapes.size());
}

PolygonSearch search_polygon_placement(const std::vector<Item>& polys, const KnapsackSpec& k, std::size_t lp_budget) {
  PolygonSearch out;
  std::vector<const PolygonShape*> shapes;
  Rational area = 0;
  for (const auto& it : polys) {
    shapes.push_back(it.polygon.get());
    area += it.polygon->area;
  }
  if (area > k.sides[0] * k.sides[1]) return out;
  const std::size_t t = shapes.size();
  auto pairs = all_pairs(t);
  std::vector<SideChoice> guess;
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (out.lp_calls >= lp_budget) {
      out.exhausted = true;
      return false;
    }
    ++out.lp_calls;
    auto sol = solve_system(build_polygon_lp(shapes, pairs, guess, k), t);
    if (!sol) return false;
    if (depth == pairs.size()) {
      out.anchors = std::move(sol);
      out.guess = guess;
      return true;
    }
    auto [i, j] = pairs[depth];
    for (int owner = 0; owner < 2; ++owner) {
      const std::size_t ne = shapes[owner == 0 ? i : j]->vertices.size();
      for (std::size_t e = 0; e < ne; ++e) {
        guess.push_back({owner, e});
        bool found = self(self, depth + 1);
        guess.pop_back();
        if (found) return true;
        if (out.exhausted) return false;
      }
    }
    return false;
  };
  rec(rec, 0);
  return out;
}

}  // namespace geopack
