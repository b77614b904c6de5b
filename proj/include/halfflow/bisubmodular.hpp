#pragma once

// The bisubmodular function Delta_b on pairs of disjoint subsets of {1,2,3}
// and its submodular extension Delta*_b on the signed ground set
// {1+, 2+, 3+, 1-, 2-, 3-}.
//
// A signed subset is a 6-bit mask: bit e < 3 is (e+1)+, bit e >= 3 is (e-2)-.
// Block vectors are indexed the same way.

#include <array>
#include <cstdint>

namespace halfflow {

using SignedSubset = std::uint8_t;
using BlockVector = std::array<std::int64_t, 6>;

inline constexpr SignedSubset kAllSigned = 0x3F;
inline constexpr SignedSubset kPlusPart = 0x07;
inline constexpr SignedSubset kMinusPart = 0x38;

constexpr SignedSubset plus_element(int i) { return static_cast<SignedSubset>(1u << (i - 1)); }
constexpr SignedSubset minus_element(int i) { return static_cast<SignedSubset>(1u << (i + 2)); }
// Element bar: i+ <-> i-.
constexpr int complement_element(int e) { return e < 3 ? e + 3 : e - 3; }

// Delta_b(Y, Z) for disjoint Y, Z given as 3-bit masks.
std::int64_t delta_b(std::int64_t b, unsigned y, unsigned z);

// Type 1..6 of a signed subset (see delta_star).
int classify_type(SignedSubset x);

// Delta*_b: 2b on type 1, 0 on types 2 and 3, b on types 4, 5, 6.
std::int64_t delta_star(std::int64_t b, SignedSubset x);

// x(X) for a signed subset X.
std::int64_t subset_sum(const BlockVector& x, SignedSubset mask);

// x(full) = Delta*(full) and x(X) <= Delta*(X) for all X.
bool in_base(std::int64_t b, const BlockVector& x);

// min { Delta*(X) - x(X) : u in X, v not in X }.  Throws NotInBase.
std::int64_t exchange_capacity(std::int64_t b, const BlockVector& x, int u, int v);

// 2 phi(x): component i is x(i+) - x(i-).
std::array<std::int64_t, 3> project_phi_doubled(const BlockVector& x);

// Membership of z = z_doubled / 2 in the polytope of Delta_b:
// z >= 0, z1 + z2 + z3 <= 2b, and each z_i at most the sum of the other two.
bool in_delta_polytope(std::int64_t b, const std::array<std::int64_t, 3>& z_doubled);

}  // namespace halfflow
