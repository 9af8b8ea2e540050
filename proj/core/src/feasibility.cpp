#include "geopack/feasibility.hpp"

#include "geopack/interval.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace geopack {

const char* to_string(Status s) {
  switch (s) {
    case Status::Feasible: return "feasible";
    case Status::Infeasible: return "infeasible";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

QuadraticSystem full_box_system(const std::vector<Rational>& radii, const KnapsackSpec& k) {
  QuadraticSystem s;
  s.d = k.dimension;
  s.radii = radii;
  s.sides = k.sides;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    std::vector<RationalInterval> b;
    for (int a = 0; a < k.dimension; ++a) {
      const Rational& side = k.sides[static_cast<std::size_t>(a)];
      b.push_back({radii[i], side - radii[i]});
      if (2 * radii[i] > side) {
        s.trivially_infeasible = true;
        s.reason = "circle " + std::to_string(i) + " wider than the knapsack";
      }
    }
    s.boxes.push_back(std::move(b));
  }
  return s;
}

QuadraticSystem build_quadratic_system(const std::vector<Rational>& radii, const std::vector<std::vector<Rational>>& guesses,
                                       const Rational& eps, std::size_t n, const KnapsackSpec& k) {
  if (guesses.size() != radii.size()) throw std::invalid_argument("one guess per circle required");
  if (n == 0) throw std::invalid_argument("n must be positive");
  QuadraticSystem s = full_box_system(radii, k);
  const Rational step = eps / Rational(static_cast<long long>(n));
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (guesses[i].size() != static_cast<std::size_t>(k.dimension)) throw std::invalid_argument("guess dimension mismatch");
    for (int a = 0; a < k.dimension; ++a) {
      auto& iv = s.boxes[i][static_cast<std::size_t>(a)];
      const Rational& g = guesses[i][static_cast<std::size_t>(a)];
      iv.lo = std::max(g, iv.lo);
      iv.hi = std::min(Rational(g + step), iv.hi);
      if (iv.lo > iv.hi && !s.trivially_infeasible) {
        s.trivially_infeasible = true;
        s.reason = "empty guess box for circle " + std::to_string(i);
      }
    }
  }
  return s;
}

std::vector<std::vector<Rational>> FeasibilityVerdict::centers() const {
  std::vector<std::vector<Rational>> out;
  for (const auto& b : witness) {
    std::vector<Rational> c;
    for (const auto& iv : b) c.push_back(iv.mid());
    out.push_back(std::move(c));
  }
  return out;
}

double FeasibilityVerdict::max_width() const {
  double w = 0.0;
  for (const auto& b : witness)
    for (const auto& iv : b) w = std::max(w, to_double(iv.width()));
  return w;
}

bool certify_centers(const QuadraticSystem& sys, const std::vector<std::vector<Rational>>& c) {
  if (c.size() != sys.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (int a = 0; a < sys.d; ++a) {
      const auto& iv = sys.boxes[i][static_cast<std::size_t>(a)];
      const auto& x = c[i][static_cast<std::size_t>(a)];
      if (x < iv.lo || x > iv.hi) return false;
      if (x < sys.radii[i] || x > sys.sides[static_cast<std::size_t>(a)] - sys.radii[i]) return false;
    }
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      Rational d2 = 0;
      for (int a = 0; a < sys.d; ++a) {
        Rational t = c[i][static_cast<std::size_t>(a)] - c[j][static_cast<std::size_t>(a)];
        d2 += t * t;
      }
      if (d2 < sys.threshold(i, j)) return false;
    }
  return true;
}

namespace {

using Box = std::vector<Interval>;  // flattened [circle * d + axis]

struct Solver {
  const QuadraticSystem& sys;
  const SolverOptions& opt;
  std::size_t t, d;
  std::vector<double> s2_lo;  // lower bound of (r_i + r_j)^2, row-major
  std::vector<std::pair<std::size_t, std::size_t>> order_pairs;  // symmetry: x_i0 <= x_j0

  Solver(const QuadraticSystem& s, const SolverOptions& o)
      : sys(s), opt(o), t(s.size()), d(static_cast<std::size_t>(s.d)), s2_lo(t * t, 0.0) {
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = 0; j < t; ++j) {
        double v = to_double(s.threshold(i, j));
        s2_lo[i * t + j] = down(v);
      }
    if (opt.symmetry_breaking)
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j) {
          if (s.radii[i] != s.radii[j]) continue;
          bool same = true;
          for (std::size_t a = 0; a < d && same; ++a)
            same = s.boxes[i][a].lo == s.boxes[j][a].lo && s.boxes[i][a].hi == s.boxes[j][a].hi;
          if (!same) continue;
          // chain only consecutive members of each class
          bool has_between = false;
          for (std::size_t k = i + 1; k < j && !has_between; ++k) {
            if (s.radii[k] != s.radii[i]) continue;
            bool sk = true;
            for (std::size_t a = 0; a < d && sk; ++a)
              sk = s.boxes[k][a].lo == s.boxes[i][a].lo && s.boxes[k][a].hi == s.boxes[i][a].hi;
            has_between = sk;
          }
          if (!has_between) order_pairs.emplace_back(i, j);
        }
  }

  Box root() const {
    Box b(t * d);
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t a = 0; a < d; ++a)
        b[i * d + a] = {down(to_double(sys.boxes[i][a].lo)), up(to_double(sys.boxes[i][a].hi))};
    return b;
  }

  static bool narrow(Interval& x, Interval y, bool& changed) {
    Interval n = intersect(x, y);
    if (n.empty()) return false;
    if (n.lo > x.lo || n.hi < x.hi) changed = true;
    x = n;
    return true;
  }

  // Returns false when the box is proven empty.
  bool contract_pair(Box& b, std::size_t i, std::size_t j, bool& changed) const {
    const double s2 = s2_lo[i * t + j];
    Interval D[8];
    double sq_hi[8];
    double total = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
      D[a] = b[i * d + a] - b[j * d + a];
      sq_hi[a] = sqr(D[a]).hi;
      total = up(total + sq_hi[a]);
    }
    if (total < s2) return false;
    for (std::size_t a = 0; a < d; ++a) {
      double rest = 0.0;
      for (std::size_t c = 0; c < d; ++c)
        if (c != a) rest = up(rest + sq_hi[c]);
      double q = down(s2 - rest);
      if (q <= 0) continue;
      double root = down(std::sqrt(q));
      if (root <= 0) continue;
      Interval nd = D[a];
      if (D[a].lo > -root && D[a].hi < root) return false;
      if (D[a].lo > -root)
        nd.lo = std::max(D[a].lo, root);
      else if (D[a].hi < root)
        nd.hi = std::min(D[a].hi, -root);
      else
        continue;
      if (nd.lo == D[a].lo && nd.hi == D[a].hi) continue;
      if (!narrow(b[i * d + a], b[j * d + a] + nd, changed)) return false;
      if (!narrow(b[j * d + a], b[i * d + a] - nd, changed)) return false;
    }
    return true;
  }

  bool contract(Box& b) const {
    for (int round = 0; round < 12; ++round) {
      bool changed = false;
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j)
          if (!contract_pair(b, i, j, changed)) return false;
      for (auto [i, j] : order_pairs) {
        Interval& xi = b[i * d];
        Interval& xj = b[j * d];
        if (xi.hi > xj.hi) {
          xi.hi = xj.hi;
          changed = true;
        }
        if (xj.lo < xi.lo) {
          xj.lo = xi.lo;
          changed = true;
        }
        if (xi.empty() || xj.empty()) return false;
      }
      if (!changed) break;
    }
    return true;
  }

  std::vector<std::vector<Rational>> snap(const std::vector<double>& x) const {
    std::vector<std::vector<Rational>> c(t, std::vector<Rational>(d));
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t a = 0; a < d; ++a) {
        Rational v = from_double(x[i * d + a]);
        const auto& iv = sys.boxes[i][a];
        c[i][a] = std::clamp(v, iv.lo, iv.hi);
      }
    return c;
  }

  double min_slack(const std::vector<double>& x) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = i + 1; j < t; ++j) {
        double d2 = 0;
        for (std::size_t a = 0; a < d; ++a) {
          double v = x[i * d + a] - x[j * d + a];
          d2 += v * v;
        }
        best = std::min(best, d2 - s2_lo[i * t + j]);
      }
    return best;
  }

  std::vector<double> midpoint(const Box& b) const {
    std::vector<double> m(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) m[k] = b[k].mid();
    return m;
  }

  // Deterministic push-apart search for a quick certified witness.
  std::optional<std::vector<std::vector<Rational>>> heuristic() const {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (t * 131 + d));
    std::vector<double> lo(t * d), hi(t * d), r(t);
    for (std::size_t i = 0; i < t; ++i) {
      r[i] = to_double(sys.radii[i]);
      for (std::size_t a = 0; a < d; ++a) {
        lo[i * d + a] = to_double(sys.boxes[i][a].lo);
        hi[i * d + a] = to_double(sys.boxes[i][a].hi);
      }
    }
    std::vector<double> x(t * d);
    const int starts = t <= 1 ? 1 : 24;
    for (int s = 0; s < starts; ++s) {
      for (std::size_t k = 0; k < x.size(); ++k) {
        std::uniform_real_distribution<double> u(lo[k], hi[k]);
        x[k] = s == 0 ? 0.5 * (lo[k] + hi[k]) : u(rng);
      }
      for (int it = 0; it < 600; ++it) {
        bool moved = false;
        for (std::size_t i = 0; i < t; ++i)
          for (std::size_t j = i + 1; j < t; ++j) {
            double target = (r[i] + r[j]) * (1 + 1e-10) + 1e-13;
            double d2 = 0;
            for (std::size_t a = 0; a < d; ++a) {
              double v = x[i * d + a] - x[j * d + a];
              d2 += v * v;
            }
            double dist = std::sqrt(d2);
            if (dist >= target) continue;
            moved = true;
            std::vector<double> dir(d);
            if (dist < 1e-15) {
              std::normal_distribution<double> nd;
              double nn = 0;
              for (auto& v : dir) nn += (v = nd(rng)) * v;
              nn = std::sqrt(nn);
              for (auto& v : dir) v /= nn;
            } else {
              for (std::size_t a = 0; a < d; ++a) dir[a] = (x[i * d + a] - x[j * d + a]) / dist;
            }
            double push = 0.5 * (target - dist) * 1.05;
            for (std::size_t a = 0; a < d; ++a) {
              x[i * d + a] = std::clamp(x[i * d + a] + push * dir[a], lo[i * d + a], hi[i * d + a]);
              x[j * d + a] = std::clamp(x[j * d + a] - push * dir[a], lo[j * d + a], hi[j * d + a]);
            }
          }
        if (!moved) break;
      }
      auto c = snap(x);
      if (certify_centers(sys, c)) return c;
    }
    return std::nullopt;
  }
};

FeasibilityVerdict make_feasible(std::vector<std::vector<Rational>> centers, double alpha, std::size_t explored) {
  FeasibilityVerdict v;
  v.status = Status::Feasible;
  v.exact_certified = true;
  v.explored = explored;
  Rational half = from_double(alpha) / 2;
  for (auto& c : centers) {
    std::vector<RationalInterval> b;
    for (auto& x : c) b.push_back({x - half, x + half});
    v.witness.push_back(std::move(b));
  }
  return v;
}

}  // namespace

FeasibilityVerdict solve_branch_and_prune(const QuadraticSystem& sys, double alpha, std::size_t budget,
                                          const SolverOptions& opt) {
  if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
  if (sys.d > 8) throw std::invalid_argument("dimension above 8 unsupported");
  FeasibilityVerdict out;
  if (sys.trivially_infeasible) {
    out.status = Status::Infeasible;
    out.note = sys.reason;
    return out;
  }
  if (sys.size() == 0) return make_feasible({}, alpha, 0);
  // volume bound: disjoint interiors inside the knapsack
  {
    double vol = 0.0, cap = 1.0;
    for (const auto& r : sys.radii) vol += ball_volume(sys.d, to_double(r));
    for (const auto& s : sys.sides) cap *= to_double(s);
    if (vol > cap * (1 + 1e-12)) {
      out.status = Status::Infeasible;
      out.note = "volume bound";
      return out;
    }
  }
  Solver S(sys, opt);
  // try the exact box midpoints first; collapsed boxes are certified here
  {
    std::vector<std::vector<Rational>> c;
    for (const auto& b : sys.boxes) {
      std::vector<Rational> m;
      for (const auto& iv : b) m.push_back(iv.mid());
      c.push_back(std::move(m));
    }
    if (certify_centers(sys, c)) return make_feasible(std::move(c), alpha, 1);
  }
  if (opt.heuristic_start)
    if (auto c = S.heuristic()) return make_feasible(std::move(*c), alpha, 1);

  std::vector<Box> stack;
  stack.push_back(S.root());
  std::size_t explored = 0;
  bool undecided = false;
  while (!stack.empty()) {
    if (explored >= budget) {
      out.status = Status::Unknown;
      out.explored = explored;
      out.note = "budget exhausted";
      return out;
    }
    Box b = std::move(stack.back());
    stack.pop_back();
    ++explored;
    if (!S.contract(b)) continue;
    auto m = S.midpoint(b);
    if (S.min_slack(m) >= -opt.certtol) {
      auto c = S.snap(m);
      if (certify_centers(sys, c)) return make_feasible(std::move(c), alpha, explored);
    }
    std::size_t widest = 0;
    for (std::size_t k = 1; k < b.size(); ++k)
      if (b[k].width() > b[widest].width()) widest = k;
    if (b[widest].width() < opt.min_width) {
      undecided = true;
      continue;
    }
    double mid = b[widest].mid();
    Box left = b, right = std::move(b);
    left[widest].hi = mid;
    right[widest].lo = mid;
    double sl = S.min_slack(S.midpoint(left)), sr = S.min_slack(S.midpoint(right));
    if (sl > sr) {
      stack.push_back(std::move(right));
      stack.push_back(std::move(left));
    } else {
      stack.push_back(std::move(left));
      stack.push_back(std::move(right));
    }
  }
  out.explored = explored;
  out.status = undecided ? Status::Unknown : Status::Infeasible;
  if (undecided) out.note = "boxes below resolution";
  return out;
}

FeasibilityVerdict refine_placement(const FeasibilityVerdict& v, const Rational& alpha_target) {
  if (v.status != Status::Feasible) throw std::invalid_argument("refine_placement needs a feasible verdict");
  if (alpha_target <= 0) throw std::invalid_argument("alpha_target must be positive");
  FeasibilityVerdict out = v;
  for (auto& b : out.witness)
    for (auto& iv : b) {
      if (iv.width() <= alpha_target) continue;
      Rational m = iv.mid(), h = alpha_target / 2;
      iv = {m - h, m + h};
    }
  return out;
}

Rational default_alpha_target(std::size_t n, const Rational& eps) {
  Rational base = Rational(1) / Rational(1000000000000LL);
  double e = static_cast<double>(n) / to_double(eps);
  if (e <= 4096) {
    Rational p = Rational(1) / Rational(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(std::ceil(e))));
    if (p < base) return p;
  }
  return base;
}

}  // namespace geopack
