#include <functional>
#include <random>

#include "doctest.h"
#include "halfflow/bisubmodular.hpp"
#include "halfflow/errors.hpp"

using namespace halfflow;

namespace {

SignedSubset set_of(std::initializer_list<int> plus, std::initializer_list<int> minus) {
  unsigned x = 0;
  for (int i : plus) x |= plus_element(i);
  for (int i : minus) x |= minus_element(i);
  return static_cast<SignedSubset>(x);
}

// Exchange capacity straight from its definition.
std::int64_t brute_exchange(std::int64_t b, const BlockVector& x, int u, int v) {
  std::int64_t best = INT64_MAX;
  for (unsigned m = 0; m < 64; ++m)
    if ((m >> u & 1) && !(m >> v & 1))
      best = std::min(best, delta_star(b, static_cast<SignedSubset>(m)) - subset_sum(x, static_cast<SignedSubset>(m)));
  return best;
}

}  // namespace

TEST_CASE("types of signed subsets") {
  CHECK(classify_type(set_of({1, 2, 3}, {2})) == 1);
  CHECK(classify_type(0) == 3);
  CHECK(classify_type(set_of({1, 2}, {1, 2})) == 4);
  CHECK(classify_type(set_of({1}, {2, 3})) == 2);
  CHECK(classify_type(set_of({2}, {1})) == 5);
  CHECK(classify_type(set_of({1, 2, 3}, {1, 3})) == 6);
  CHECK(classify_type(kAllSigned) == 3);
  CHECK(classify_type(kMinusPart) == 3);
  // Every subset gets exactly one type.
  int counts[7] = {};
  for (unsigned m = 0; m < 64; ++m) {
    int t = classify_type(static_cast<SignedSubset>(m));
    REQUIRE(t >= 1);
    REQUIRE(t <= 6);
    ++counts[t];
  }
  CHECK(counts[2] == 3);
  CHECK(counts[6] == 3);
  CHECK(counts[1] + counts[2] + counts[3] + counts[4] + counts[5] + counts[6] == 64);
}

TEST_CASE("Delta_b values") {
  CHECK(delta_b(5, 0b011, 0) == 10);
  CHECK(delta_b(3, 0b001, 0b110) == 0);
  CHECK(delta_b(3, 0, 0b101) == 0);
  CHECK(delta_b(3, 0b001, 0b010) == 3);
  CHECK(delta_b(3, 0b001, 0) == 3);
}

TEST_CASE("Delta*_b values") {
  CHECK(delta_star(1, set_of({1, 2}, {})) == 2);
  CHECK(delta_star(1, set_of({1}, {2, 3})) == 0);
  CHECK(delta_star(4, kAllSigned) == 0);
  CHECK(delta_star(4, set_of({1, 2}, {1, 2})) == 4);
  CHECK(delta_star(4, set_of({3}, {})) == 4);
  CHECK(delta_star(4, set_of({1, 2, 3}, {1, 2})) == 4);
}

TEST_CASE("base membership") {
  CHECK(in_base(1, {0, 0, 0, 0, 0, 0}));
  CHECK(in_base(1, {1, 1, 0, -1, -1, 0}));
  CHECK_FALSE(in_base(1, {1, 0, 0, -1, 0, 0}));
  CHECK_FALSE(in_base(1, {1, 0, 0, 0, 0, 0}));
}

TEST_CASE("exchange capacities") {
  const int p1 = 0, p3 = 2, m1 = 3, m2 = 4, m3 = 5;
  CHECK(exchange_capacity(1, {0, 0, 0, 0, 0, 0}, p1, m2) == 1);
  CHECK(exchange_capacity(1, {0, 0, 0, 0, 0, 0}, p1, m1) == 0);
  CHECK(exchange_capacity(1, {1, 1, 0, -1, -1, 0}, p3, m3) == 0);
  CHECK_THROWS_AS(exchange_capacity(1, {1, 0, 0, -1, 0, 0}, p1, m2), NotInBase);
}

TEST_CASE("exchange capacities match the definition on every integral base vector") {
  for (std::int64_t b : {1, 2}) {
    BlockVector x{};
    long bases = 0;
    std::function<void(int)> walk = [&](int e) {
      if (e == 6) {
        if (!in_base(b, x)) return;
        ++bases;
        for (int u = 0; u < 6; ++u)
          for (int v = 0; v < 6; ++v) {
            if (u == v) continue;
            const std::int64_t k = exchange_capacity(b, x, u, v);
            REQUIRE(k == brute_exchange(b, x, u, v));
            // Moving by the capacity stays in the base; one more unit leaves it.
            BlockVector y = x;
            y[u] += k;
            y[v] -= k;
            CHECK(in_base(b, y));
            y[u] += 1;
            y[v] -= 1;
            CHECK_FALSE(in_base(b, y));
          }
        return;
      }
      for (std::int64_t val = -2 * b; val <= 2 * b; ++val) {
        x[e] = val;
        walk(e + 1);
      }
    };
    walk(0);
    CHECK(bases > 0);
  }
}

TEST_CASE("projection and the bisubmodular polytope") {
  CHECK(project_phi_doubled({0, 0, 0, 0, 0, 0}) == std::array<std::int64_t, 3>{0, 0, 0});
  CHECK(project_phi_doubled({1, 1, 0, -1, -1, 0}) == std::array<std::int64_t, 3>{2, 2, 0});
  CHECK(project_phi_doubled({3, 0, 0, -3, 0, 0}) == std::array<std::int64_t, 3>{6, 0, 0});
  for (std::int64_t b : {1, 2, 5}) {
    CHECK(in_delta_polytope(b, {2 * b, 2 * b, 0}));
    CHECK(in_delta_polytope(b, {0, 0, 0}));
    CHECK_FALSE(in_delta_polytope(b, {2 * b, 0, 0}));
    CHECK_FALSE(in_delta_polytope(b, {2 * b, 2 * b, 2}));
    CHECK_FALSE(in_delta_polytope(b, {-1, 0, 1}));
  }
}

TEST_CASE("the polytope of Delta_b is cut out by Delta_b itself") {
  // z(Y) - z(Z) <= Delta_b(Y, Z) for all disjoint (Y, Z), on a grid of doubled points.
  for (std::int64_t b : {1, 2, 3}) {
    for (std::int64_t a = -2; a <= 4 * b + 2; ++a)
      for (std::int64_t c = -2; c <= 4 * b + 2; ++c)
        for (std::int64_t d = -2; d <= 4 * b + 2; ++d) {
          const std::array<std::int64_t, 3> z{a, c, d};
          bool ok = true;
          for (unsigned y = 0; y < 8 && ok; ++y)
            for (unsigned w = 0; w < 8 && ok; ++w) {
              if (y & w) continue;
              std::int64_t lhs = 0;
              for (int i = 0; i < 3; ++i) lhs += ((y >> i & 1) ? z[i] : 0) - ((w >> i & 1) ? z[i] : 0);
              if (lhs > 2 * delta_b(b, y, w)) ok = false;
            }
          CHECK(ok == in_delta_polytope(b, z));
        }
  }
}
