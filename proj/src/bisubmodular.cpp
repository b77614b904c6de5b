#include "halfflow/bisubmodular.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

#include "halfflow/errors.hpp"

namespace halfflow {

namespace {

constexpr int popcount(unsigned v) { return std::popcount(v); }

constexpr int classify(SignedSubset x) {
  const unsigned plus = x & kPlusPart;
  const unsigned minus = (x & kMinusPart) >> 3;
  const int np = popcount(plus), nm = popcount(minus);
  if (plus == 0 || minus == 7) return 3;
  if (np >= 2 && nm <= 1) return 1;
  if (np == 3 && nm == 2) return 6;
  if (np == 2 && nm == 2) return 4;
  // np == 1 from here on.
  if (nm == 2 && (minus | plus) == 7) return 2;
  return 5;
}

constexpr std::array<int, 64> kTypes = [] {
  std::array<int, 64> t{};
  for (int x = 0; x < 64; ++x) t[x] = classify(static_cast<SignedSubset>(x));
  return t;
}();

// Delta*_1; Delta*_b is b times this.
constexpr std::array<std::int64_t, 64> kUnitDelta = [] {
  std::array<std::int64_t, 64> d{};
  for (int x = 0; x < 64; ++x) {
    switch (kTypes[x]) {
      case 1: d[x] = 2; break;
      case 2:
      case 3: d[x] = 0; break;
      default: d[x] = 1; break;
    }
  }
  return d;
}();

}  // namespace

std::int64_t delta_b(std::int64_t b, unsigned y, unsigned z) {
  if ((y & z) != 0 || y > 7 || z > 7) throw std::invalid_argument("delta_b: arguments must be disjoint subsets");
  const int ny = popcount(y), nz = popcount(z);
  if (ny >= 2) return 2 * b;
  if (ny == 1 && nz <= 1) return b;
  return 0;
}

int classify_type(SignedSubset x) { return kTypes[x & kAllSigned]; }

std::int64_t delta_star(std::int64_t b, SignedSubset x) { return b * kUnitDelta[x & kAllSigned]; }

std::int64_t subset_sum(const BlockVector& x, SignedSubset mask) {
  std::int64_t s = 0;
  for (int e = 0; e < 6; ++e)
    if (mask & (1u << e)) s += x[e];
  return s;
}

bool in_base(std::int64_t b, const BlockVector& x) {
  if (subset_sum(x, kAllSigned) != delta_star(b, kAllSigned)) return false;
  for (int m = 0; m < 64; ++m)
    if (subset_sum(x, static_cast<SignedSubset>(m)) > delta_star(b, static_cast<SignedSubset>(m))) return false;
  return true;
}

std::int64_t exchange_capacity(std::int64_t b, const BlockVector& x, int u, int v) {
  if (u == v || u < 0 || v < 0 || u > 5 || v > 5) throw std::invalid_argument("exchange_capacity: bad elements");
  if (!in_base(b, x)) throw NotInBase("block vector is not in the base polyhedron");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const unsigned fixed = (1u << u) | (1u << v);
  for (unsigned m = 0; m < 64; ++m) {
    if ((m & fixed) != (1u << u)) continue;
    auto mask = static_cast<SignedSubset>(m);
    best = std::min(best, delta_star(b, mask) - subset_sum(x, mask));
  }
  return best;
}

std::array<std::int64_t, 3> project_phi_doubled(const BlockVector& x) {
  return {x[0] - x[3], x[1] - x[4], x[2] - x[5]};
}

bool in_delta_polytope(std::int64_t b, const std::array<std::int64_t, 3>& z) {
  for (int i = 0; i < 3; ++i) {
    if (z[i] < 0) return false;
    if (z[i] > z[(i + 1) % 3] + z[(i + 2) % 3]) return false;
  }
  return z[0] + z[1] + z[2] <= 4 * b;
}

}  // namespace halfflow
