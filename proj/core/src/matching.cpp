#include "geopack/dp.hpp"

#include <algorithm>

namespace geopack {

MatchingResult matching_assign(std::size_t n_items, std::size_t n_slots,
                               const std::function<bool(std::size_t, std::size_t)>& fits,
                               const std::vector<Rational>& profits) {
  if (profits.size() != n_items) throw std::invalid_argument("one profit per item required");
  MatchingResult out;
  out.item_to_slot.assign(n_items, std::nullopt);
  out.value = 0;
  if (n_items == 0 || n_slots == 0) return out;
  const std::size_t n = std::max(n_items, n_slots);
  // cost = -weight on a padded square matrix, 1-indexed as in the classic formulation
  std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(n + 1, Rational(0)));
  Rational total = 1;
  for (std::size_t i = 0; i < n_items; ++i) {
    if (profits[i] < 0) throw std::invalid_argument("profits must be nonnegative");
    total += profits[i];
    for (std::size_t j = 0; j < n_slots; ++j)
      if (fits(i, j)) a[i + 1][j + 1] = -profits[i];
  }
  const Rational INF = total * Rational(static_cast<long long>(4 * (n + 2)));
  std::vector<Rational> u(n + 1, Rational(0)), v(n + 1, Rational(0));
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<Rational> minv(n + 1, INF);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      std::size_t i0 = p[j0], j1 = 0;
      Rational delta = INF;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = a[i0][j] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    std::size_t i = p[j];
    if (i == 0 || i > n_items || j > n_slots) continue;
    if (!fits(i - 1, j - 1)) continue;
    out.item_to_slot[i - 1] = j - 1;
    out.value += profits[i - 1];
  }
  return out;
}

}  // namespace geopack
