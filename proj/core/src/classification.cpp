#include "geopack/classification.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace geopack {

namespace {

double rational_log(const Rational& r) {
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, mpq_numref(r.backend().data()));
  double md = mpz_get_d_2exp(&ed, mpq_denref(r.backend().data()));
  return std::log(mn) - std::log(md) + static_cast<double>(en - ed) * std::log(2.0);
}

bool logs_decide(double lr, double ls, bool& result) {
  double gap = lr - ls;
  if (std::abs(gap) > 1e-9 * std::max(1.0, std::abs(ls))) {
    result = gap > 0;
    return true;
  }
  return false;
}

}  // namespace

double Scale::log() const { return power.convert_to<double>() * std::log(to_double(base)); }

double Scale::value() const { return std::exp(log()); }

std::optional<Rational> Scale::exact(unsigned max_power) const {
  if (power > max_power) return std::nullopt;
  return rational_pow(base, power.convert_to<unsigned>());
}

bool Scale::below(const Rational& r) const {
  if (r <= 0) return false;
  bool res = false;
  if (logs_decide(rational_log(r), log(), res)) return res;
  if (auto e = exact(1u << 20)) return *e < r;
  return rational_log(r) > log();
}

bool Scale::below(double r) const {
  if (r <= 0) return false;
  bool res = false;
  if (logs_decide(std::log(r), log(), res)) return res;
  if (auto e = exact(1u << 20)) return *e < from_double(r);
  return std::log(r) > log();
}

int inverse_eps(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie in (0,1)");
  return static_cast<int>(ceil_ll(Rational(1) / eps));
}

ShiftResult shifting_by_class(const std::vector<int>& cls, const std::vector<Rational>& weights, const Rational& eps) {
  if (cls.size() != weights.size()) throw std::invalid_argument("class/weight size mismatch");
  const int K = inverse_eps(eps);
  ShiftResult out;
  std::vector<Rational> w(static_cast<std::size_t>(K) + 2, Rational(0));
  for (std::size_t i = 0; i < cls.size(); ++i) {
    out.total_weight += weights[i];
    if (cls[i] >= 1 && cls[i] <= K) w[static_cast<std::size_t>(cls[i])] += weights[i];
  }
  out.tau = K;
  for (int k = 1; k <= K; ++k)
    if (w[static_cast<std::size_t>(k)] <= eps * out.total_weight) {
      out.tau = k;
      break;
    }
  out.class_weight = w[static_cast<std::size_t>(out.tau)];
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (cls[i] == out.tau) out.members.push_back(i);
  return out;
}

int shifting_by_class(const std::vector<int>& cls, const std::vector<double>& weights, double eps, int K) {
  std::vector<double> w(static_cast<std::size_t>(K) + 2, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    total += weights[i];
    if (cls[i] >= 1 && cls[i] <= K) w[static_cast<std::size_t>(cls[i])] += weights[i];
  }
  int best = 1;
  for (int k = 1; k <= K; ++k) {
    if (w[static_cast<std::size_t>(k)] <= eps * total) return k;
    if (w[static_cast<std::size_t>(k)] < w[static_cast<std::size_t>(best)]) best = k;
  }
  return best;
}

ShiftResult shifting_partition(const std::vector<double>& keys, const std::vector<Rational>& weights,
                               const std::vector<double>& rho, const Rational& eps) {
  const int K = inverse_eps(eps);
  if (rho.size() < static_cast<std::size_t>(K) + 1) throw std::invalid_argument("rho sequence too short");
  for (std::size_t k = 0; k < rho.size(); ++k)
    if (!(rho[k] > 0) || (k > 0 && !(rho[k] < rho[k - 1])))
      throw std::invalid_argument("rho must be positive and strictly decreasing");
  std::vector<int> cls(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    int c = 0;
    while (c < static_cast<int>(rho.size()) && !(keys[i] > rho[static_cast<std::size_t>(c)])) ++c;
    cls[i] = c;
  }
  return shifting_by_class(cls, weights, eps);
}

double size_key(const Item& item) { return item.r_in(); }

bool key_above(const Item& item, const Scale& s) {
  return item.is_round() ? s.below(item.radius) : s.below(item.polygon->r_in);
}

SizeClasses size_gap(const std::vector<Item>& items, const Rational& eps, unsigned exponent) {
  if (exponent < 2) throw std::invalid_argument("gap exponent must be at least 2");
  const int K = inverse_eps(eps);
  SizeClasses sc;
  sc.eps = eps;
  sc.exponent = exponent;
  auto rho = [&](int k) { return Scale{eps, boost::multiprecision::pow(BigInt(exponent), static_cast<unsigned>(k))}; };
  std::vector<int> cls(items.size());
  std::vector<Rational> w(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    int c = 0;
    while (c <= K && !key_above(items[i], rho(c))) ++c;
    cls[i] = c;
    w[i] = items[i].profit;
  }
  auto sh = shifting_by_class(cls, w, eps);
  sc.tau = sh.tau;
  sc.eps_large = rho(sc.tau - 1);
  sc.eps_small = rho(sc.tau);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (cls[i] < sc.tau)
      sc.large.push_back(i);
    else if (cls[i] == sc.tau)
      sc.medium.push_back(i);
    else
      sc.small.push_back(i);
  }
  return sc;
}

Rational LevelSplit::cell_side(int level) const {
  return unit / Rational(boost::multiprecision::pow(BigInt(g), static_cast<unsigned>(level)));
}

namespace {

void assign_levels(LevelSplit& s, const std::vector<Item>& items) {
  const double u = to_double(s.unit);
  s.delta_large.assign(1, 0.0);
  s.delta_small.assign(1, std::numeric_limits<double>::infinity());
  s.delta_cell.assign(1, u);
  s.L.clear();
  s.M.clear();
  s.medium_area = 0.0;
  s.depth = 0;
  auto ensure = [&](int l) {
    while (static_cast<int>(s.delta_cell.size()) <= l) {
      double prev = s.delta_cell.back();
      s.delta_large.push_back(s.dl * prev);
      s.delta_small.push_back(s.ds * prev);
      s.delta_cell.push_back(s.dc * prev);
    }
  };
  for (std::size_t i = 0; i < items.size(); ++i) {
    double r = items[i].r_in();
    if (!(r > 0)) continue;
    int l = 1;
    for (;; ++l) {
      ensure(l);
      if (r > s.delta_large[static_cast<std::size_t>(l)]) {
        s.L[l].push_back(i);
        break;
      }
      if (r > s.delta_small[static_cast<std::size_t>(l)]) {
        s.M[l].push_back(i);
        s.medium_area += items[i].volume();
        break;
      }
    }
    s.depth = std::max(s.depth, l);
  }
}

}  // namespace

LevelSplit level_split_fat(const std::vector<Item>& items, const Rational& eps, double f, bool enforce_range,
                           const Rational& unit) {
  if (f < 1) throw std::invalid_argument("fatness must be at least 1");
  const int K = inverse_eps(eps);
  const double e = to_double(eps);
  if (enforce_range && !(e < 1.0 / (10.0 * f * f)))
    throw std::invalid_argument("eps must be below 1/(10 f^2) = " + std::to_string(1.0 / (10.0 * f * f)));
  LevelSplit s;
  s.eps = eps;
  s.f = f;
  s.paper = true;
  s.unit = unit;
  s.beta = e * e / 16.0;
  s.gamma = e / (72.0 * f);
  const double logP = std::log(s.beta * s.gamma);
  const int T = 2 * K;
  std::vector<double> area(static_cast<std::size_t>(T) + 1, 0.0);
  for (const auto& it : items) {
    double r = it.r_in() / to_double(unit);
    if (!(r > 0) || r > 1.0) continue;  // rho_0 = 1
    double u = std::log(r) / logP;
    long long fl = static_cast<long long>(std::floor(u));
    int k = static_cast<int>(((fl % T) + T) % T) + 1;
    area[static_cast<std::size_t>(k)] += it.volume();
  }
  s.k = K + 1;
  for (int k = K + 1; k <= T; ++k)
    if (area[static_cast<std::size_t>(k)] < area[static_cast<std::size_t>(s.k)]) s.k = k;
  for (int k = K + 1; k <= T; ++k) {
    double dl = std::pow(s.beta * s.gamma, k - 1);
    s.D.push_back({dl, s.gamma * dl, s.beta * s.gamma * dl});
  }
  s.dl = std::pow(s.beta * s.gamma, s.k - 1);
  s.dc = s.gamma * s.dl;
  s.ds = s.beta * s.dc;
  assign_levels(s, items);
  return s;
}

std::vector<std::array<double, 3>> desk_candidates(const Rational& eps, double f, int g) {
  if (g < 2) throw std::invalid_argument("grid refinement must be at least 2");
  if (f < 1) throw std::invalid_argument("fatness must be at least 1");
  const int J = inverse_eps(eps);
  const double dc = 1.0 / g;
  std::vector<std::array<double, 3>> D;
  for (int j = 1; j <= J; ++j) {
    double dl = dc / (2.0 * f) * std::pow(static_cast<double>(g), -static_cast<double>(j - 1) / J);
    double ds = dl * std::pow(static_cast<double>(g), -1.0 / J);
    D.push_back({dl, dc, ds});
  }
  return D;
}

LevelSplit level_split_desk(const std::vector<Item>& items, const Rational& eps, double f, int g,
                            std::size_t candidate, const Rational& unit) {
  LevelSplit s;
  s.eps = eps;
  s.f = f;
  s.g = g;
  s.unit = unit;
  s.D = desk_candidates(eps, f, g);
  if (candidate >= s.D.size()) throw std::invalid_argument("candidate index out of range");
  s.k = static_cast<int>(candidate);
  s.dl = s.D[candidate][0];
  s.dc = s.D[candidate][1];
  s.ds = s.D[candidate][2];
  assign_levels(s, items);
  return s;
}

}  // namespace geopack
