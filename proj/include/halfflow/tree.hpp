#pragma once

// Geometry of a finite tree Gamma, its subdivision Gamma* (edge midpoints
// added) and the lattice Gamma* x Z* on which potentials live.
//
// All lengths are integer quarter-units: one Gamma edge has length 4, so a
// Gamma* step is 2 and a Gamma** step is 1.  Radii are stored the same way
// (r4 = 4 r).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace halfflow {

class Tree {
 public:
  Tree() = default;
  // Vertex i gets labels[i].  `open_ends` marks leaves created by truncating
  // an infinite ray; no potential may ever reach them.
  Tree(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges,
       std::vector<int> open_ends = {});

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  // Neighbors in increasing vertex order; neighbor k (1-based) is neighbors(v)[k-1].
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  // 1-based position of w in neighbors(v), 0 if not adjacent.
  int neighbor_index(int v, int w) const;
  bool adjacent(int u, int v) const { return neighbor_index(u, v) != 0; }
  bool is_open_end(int v) const { return open_end_[v] != 0; }
  int find_vertex(const std::string& label) const;

  int lca(int u, int v) const;
  int vertex_distance(int u, int v) const;
  // Neighbor of u on the path to target (u != target).
  int next_toward(int u, int target) const;
  std::vector<int> vertex_path(int u, int v) const;

 private:
  int lift(int v, int steps) const;

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> open_end_;
  std::vector<int> depth_;
  std::vector<std::vector<int>> up_;  // up_[j][v] = 2^j-th ancestor (root maps to itself)
};

// A point of Gamma**: the point at quarter offset q from u toward v.
// Canonical form: vertices are (w, w, 0); interior points have 1 <= q <= 3
// and u < v.
struct TreePoint {
  int u = 0;
  int v = 0;
  int q = 0;

  static TreePoint vertex(int w) { return {w, w, 0}; }
  // Point at offset q (0..4) from a toward b along edge ab, canonicalized.
  static TreePoint on_edge(int a, int b, int q);

  bool is_vertex() const { return q == 0; }
  bool on_gamma_star() const { return q % 2 == 0; }
  auto operator<=>(const TreePoint&) const = default;
};

// A point (p, r) with r = r4 / 4.
struct LatticePoint {
  TreePoint p;
  int r4 = 0;

  // Gamma* x Z*: p in Gamma*, r a half-integer, and p is a vertex iff r is an integer.
  bool in_star_lattice() const;
  // Gamma** x Z**: quarter grid, p in Gamma* iff r in Z*.
  bool in_double_star_lattice() const;
  auto operator<=>(const LatticePoint&) const = default;
};

enum class Color { Black, White, None };

int dist4(const Tree& tree, const TreePoint& a, const TreePoint& b);

// Point at quarter distance t4 from `from` on the geodesic to `to`.
TreePoint point_along(const Tree& tree, const TreePoint& from, const TreePoint& to, int t4);

// Number of Gamma*-neighbors (= components of Gamma* minus p) of p in Gamma*.
int star_degree(const Tree& tree, const TreePoint& p);
// p ->* k: the k-th Gamma*-neighbor of p.
TreePoint star_step(const Tree& tree, const TreePoint& p, int k);
// p -> k: the k-th Gamma-neighbor of a vertex p.
TreePoint vertex_step(const Tree& tree, const TreePoint& p, int k);
// Index k such that x lies in the component of Gamma* - p containing p ->* k.
int component_of(const Tree& tree, const TreePoint& p, const TreePoint& x);

// Coloring relative to the basepoint vertex 0.
Color color(const Tree& tree, const LatticePoint& x);

std::vector<LatticePoint> lattice_neighbors(const Tree& tree, const LatticePoint& x);
bool lattice_adjacent(const Tree& tree, const LatticePoint& x, const LatticePoint& y);
// Covering relation x < y: adjacent, and x is Black or y is White.
bool covers(const Tree& tree, const LatticePoint& x, const LatticePoint& y);
// Partial order x <= y (reflexive-transitive closure of covers; chains have length <= 2).
bool leq(const Tree& tree, const LatticePoint& x, const LatticePoint& y);

struct Neighborhood {
  std::vector<LatticePoint> up;    // {y : x <= y, r(y) >= 0}
  std::vector<LatticePoint> down;  // {y : y <= x, r(y) >= 0}
};
Neighborhood local_neighborhood(const Tree& tree, const LatticePoint& x);

// Coordinatewise midpoint in Gamma** x Z** (no validity check on inputs).
LatticePoint midpoint(const Tree& tree, const LatticePoint& x, const LatticePoint& y);
// The unique comparable pair (floor, ceil) in Gamma* x Z* with midpoint z.
std::pair<LatticePoint, LatticePoint> round_pair(const Tree& tree, const LatticePoint& z);

// max_i d(p_i, q_i) + |r_i - s_i| in quarter-units.
int d_inf(const Tree& tree, std::span<const LatticePoint> x, std::span<const LatticePoint> y);

}  // namespace halfflow
