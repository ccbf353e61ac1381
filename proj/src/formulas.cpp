#include "mbd/formulas.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mbd {

int floor_log2(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("floor_log2(0)");
  return static_cast<int>(std::bit_width(x)) - 1;
}

int ceil_log2(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("ceil_log2(0)");
  return x == 1 ? 0 : static_cast<int>(std::bit_width(x - 1));
}

GameValue path_gamma_smb_prime(int n) {
  if (n <= 0) throw std::invalid_argument("path_gamma_smb_prime: n must be positive");
  // Even paths have a perfect matching, so Dominator wins by pairing.
  if (n % 2 == 0) return GameValue::infinite();
  return GameValue::finite(floor_log2(static_cast<std::uint64_t>(n)) + 1);
}

int sigma(int n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("sigma: n must be even and >= 4");
  const int p = 1 << ceil_log2(static_cast<std::uint64_t>(n));
  return (p - n) / 2 + 1;
}

StallerValues tadpole_values(TadpoleParams p) {
  if (p.n < 3 || p.k < 1) throw std::invalid_argument("tadpole_values: need n >= 3, k >= 1");
  StallerValues out{GameValue::infinite(), GameValue::infinite()};
  if (p.n % 2 == 0 && p.k % 2 == 1) {
    out.gamma_smb_prime =
        GameValue::finite(ceil_log2(static_cast<std::uint64_t>(p.n + p.k + sigma(p.n))));
  }
  return out;
}

StallerValues f_prime_values(int k) {
  if (k < 1) throw std::invalid_argument("f_prime_values: k must be positive");
  return {GameValue::infinite(), GameValue::finite(k + 1)};
}

RealizationTriple realization_triple(int r, int s, int t) {
  if (!(2 <= r && r <= s && s <= t)) {
    throw std::invalid_argument("realization_triple: need 2 <= r <= s <= t");
  }
  return {r, GameValue::finite(s), GameValue::finite(t)};
}

bool log_bound_holds(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 2) throw std::invalid_argument("log_bound_holds: need a >= 1, b >= 2");
  const int lhs = std::max(floor_log2(a) + 1, ceil_log2(b - 1));
  return lhs >= ceil_log2(a + b) - 1;
}

DegreeAndOrderBounds bounds(const Graph& g) {
  const int n = g.order();
  return {g.min_degree() + 1, (n + 1) / 2, n / 2};
}

}  // namespace mbd
