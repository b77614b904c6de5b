#include "halfflow/tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>

namespace halfflow {

Tree::Tree(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges,
           std::vector<int> open_ends)
    : labels_(std::move(labels)) {
  const int n = num_vertices();
  if (n == 0) throw std::invalid_argument("tree has no vertices");
  if (static_cast<int>(edges.size()) != n - 1) throw std::invalid_argument("tree must have n-1 edges");
  adj_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw std::invalid_argument("bad tree edge");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw std::invalid_argument("parallel tree edge");
  }
  open_end_.assign(n, 0);
  for (int v : open_ends) open_end_.at(v) = 1;

  depth_.assign(n, -1);
  std::vector<int> parent(n, 0);
  std::queue<int> queue;
  depth_[0] = 0;
  queue.push(0);
  int seen = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : adj_[v]) {
      if (depth_[w] >= 0) continue;
      depth_[w] = depth_[v] + 1;
      parent[w] = v;
      ++seen;
      queue.push(w);
    }
  }
  if (seen != n) throw std::invalid_argument("tree is not connected");

  int levels = 1;
  while ((1 << levels) < n) ++levels;
  up_.assign(levels, parent);
  for (int j = 1; j < levels; ++j)
    for (int v = 0; v < n; ++v) up_[j][v] = up_[j - 1][up_[j - 1][v]];
}

int Tree::neighbor_index(int v, int w) const {
  const auto& list = adj_[v];
  auto it = std::lower_bound(list.begin(), list.end(), w);
  if (it == list.end() || *it != w) return 0;
  return static_cast<int>(it - list.begin()) + 1;
}

int Tree::find_vertex(const std::string& label) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (labels_[v] == label) return v;
  return -1;
}

int Tree::lift(int v, int steps) const {
  for (int j = 0; steps > 0; ++j, steps >>= 1)
    if (steps & 1) v = up_[j][v];
  return v;
}

int Tree::lca(int a, int b) const {
  if (depth_[a] < depth_[b]) std::swap(a, b);
  a = lift(a, depth_[a] - depth_[b]);
  if (a == b) return a;
  for (int j = static_cast<int>(up_.size()) - 1; j >= 0; --j) {
    if (up_[j][a] != up_[j][b]) {
      a = up_[j][a];
      b = up_[j][b];
    }
  }
  return up_[0][a];
}

int Tree::vertex_distance(int u, int v) const {
  return depth_[u] + depth_[v] - 2 * depth_[lca(u, v)];
}

int Tree::next_toward(int u, int target) const {
  if (u == target) throw std::invalid_argument("next_toward: u == target");
  if (depth_[target] > depth_[u]) {
    int w = lift(target, depth_[target] - depth_[u] - 1);
    if (up_[0][w] == u) return w;
  }
  return up_[0][u];
}

std::vector<int> Tree::vertex_path(int u, int v) const {
  int m = lca(u, v);
  std::vector<int> head, tail;
  for (int x = u; x != m; x = up_[0][x]) head.push_back(x);
  for (int x = v; x != m; x = up_[0][x]) tail.push_back(x);
  head.push_back(m);
  head.insert(head.end(), tail.rbegin(), tail.rend());
  return head;
}

TreePoint TreePoint::on_edge(int a, int b, int q) {
  if (q < 0 || q > 4) throw std::invalid_argument("edge offset out of range");
  if (q == 0) return vertex(a);
  if (q == 4) return vertex(b);
  if (a > b) return {b, a, 4 - q};
  return {a, b, q};
}

bool LatticePoint::in_star_lattice() const {
  if (!p.on_gamma_star() || r4 % 2 != 0) return false;
  return p.is_vertex() == (r4 % 4 == 0);
}

bool LatticePoint::in_double_star_lattice() const {
  return p.on_gamma_star() == (r4 % 2 == 0);
}

namespace {

struct End {
  int vertex;
  int offset;
};

int ends_of(const TreePoint& x, End out[2]) {
  if (x.is_vertex()) {
    out[0] = {x.u, 0};
    return 1;
  }
  out[0] = {x.u, x.q};
  out[1] = {x.v, 4 - x.q};
  return 2;
}

// Offset of x from u along edge uv, if x lies on that closed edge.
std::optional<int> offset_on(const TreePoint& x, int u, int v) {
  if (x.is_vertex()) {
    if (x.u == u) return 0;
    if (x.u == v) return 4;
    return std::nullopt;
  }
  if (x.u == u && x.v == v) return x.q;
  if (x.u == v && x.v == u) return 4 - x.q;
  return std::nullopt;
}

void require_on_tree(const Tree& tree, const TreePoint& x) {
  if (x.is_vertex()) {
    if (x.u < 0 || x.u >= tree.num_vertices() || x.v != x.u)
      throw std::invalid_argument("point is not a tree vertex");
  } else if (x.q < 0 || x.q > 4 || !tree.adjacent(x.u, x.v)) {
    throw std::invalid_argument("point is not on a tree edge");
  }
}

}  // namespace

int dist4(const Tree& tree, const TreePoint& a, const TreePoint& b) {
  if (a.is_vertex() && b.is_vertex()) return 4 * tree.vertex_distance(a.u, b.u);
  if (!a.is_vertex()) {
    if (auto pb = offset_on(b, a.u, a.v)) return std::abs(a.q - *pb);
  } else if (auto pa = offset_on(a, b.u, b.v)) {
    return std::abs(*pa - b.q);
  }
  End ea[2], eb[2];
  int na = ends_of(a, ea), nb = ends_of(b, eb);
  int best = std::numeric_limits<int>::max();
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      best = std::min(best, ea[i].offset + 4 * tree.vertex_distance(ea[i].vertex, eb[j].vertex) +
                                eb[j].offset);
  return best;
}

TreePoint point_along(const Tree& tree, const TreePoint& from, const TreePoint& to, int t4) {
  const int d = dist4(tree, from, to);
  if (t4 < 0 || t4 > d) throw std::invalid_argument("point_along: offset outside geodesic");
  if (t4 == 0) return from;
  if (t4 == d) return to;
  // Both on one closed edge.
  if (!from.is_vertex() || !to.is_vertex()) {
    const TreePoint& carrier = from.is_vertex() ? to : from;
    auto pf = offset_on(from, carrier.u, carrier.v);
    auto pt = offset_on(to, carrier.u, carrier.v);
    if (pf && pt) {
      int pos = *pf + (*pt > *pf ? t4 : -t4);
      return TreePoint::on_edge(carrier.u, carrier.v, pos);
    }
  }
  End ea[2], eb[2];
  int na = ends_of(from, ea), nb = ends_of(to, eb);
  End best_a{}, best_b{};
  int best = std::numeric_limits<int>::max();
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      int len = ea[i].offset + 4 * tree.vertex_distance(ea[i].vertex, eb[j].vertex) + eb[j].offset;
      if (len < best) {
        best = len;
        best_a = ea[i];
        best_b = eb[j];
      }
    }
  if (t4 <= best_a.offset) {
    int other = from.u == best_a.vertex ? from.v : from.u;
    return TreePoint::on_edge(best_a.vertex, other, best_a.offset - t4);
  }
  int rest = t4 - best_a.offset;
  std::vector<int> path = tree.vertex_path(best_a.vertex, best_b.vertex);
  int span_len = 4 * (static_cast<int>(path.size()) - 1);
  if (rest <= span_len) {
    int idx = rest / 4, rem = rest % 4;
    if (rem == 0) return TreePoint::vertex(path[idx]);
    return TreePoint::on_edge(path[idx], path[idx + 1], rem);
  }
  rest -= span_len;
  int other = to.u == best_b.vertex ? to.v : to.u;
  return TreePoint::on_edge(best_b.vertex, other, rest);
}

int star_degree(const Tree& tree, const TreePoint& p) {
  return p.is_vertex() ? tree.degree(p.u) : 2;
}

TreePoint star_step(const Tree& tree, const TreePoint& p, int k) {
  if (k < 1 || k > star_degree(tree, p)) throw std::invalid_argument("star_step: bad index");
  if (p.is_vertex()) return TreePoint::on_edge(p.u, tree.neighbors(p.u)[k - 1], 2);
  if (p.q != 2) throw std::invalid_argument("star_step: point not in Gamma*");
  return TreePoint::vertex(k == 1 ? p.u : p.v);
}

TreePoint vertex_step(const Tree& tree, const TreePoint& p, int k) {
  if (!p.is_vertex()) throw std::invalid_argument("vertex_step: point is not a vertex");
  if (k < 1 || k > tree.degree(p.u)) throw std::invalid_argument("vertex_step: bad index");
  return TreePoint::vertex(tree.neighbors(p.u)[k - 1]);
}

int component_of(const Tree& tree, const TreePoint& p, const TreePoint& x) {
  if (p == x) throw std::invalid_argument("component_of: x == p");
  if (p.is_vertex()) {
    const int w = p.u;
    if (!x.is_vertex() && (x.u == w || x.v == w)) return tree.neighbor_index(w, x.u == w ? x.v : x.u);
    return tree.neighbor_index(w, tree.next_toward(w, x.u));
  }
  if (auto pos = offset_on(x, p.u, p.v)) return *pos < p.q ? 1 : 2;
  return dist4(tree, x, TreePoint::vertex(p.u)) < dist4(tree, x, TreePoint::vertex(p.v)) ? 1 : 2;
}

Color color(const Tree& tree, const LatticePoint& x) {
  if (!x.p.is_vertex() || x.r4 % 4 != 0) return Color::None;
  int d = tree.vertex_distance(0, x.p.u);
  int r = x.r4 / 4;
  return ((d + r) % 2 + 2) % 2 == 0 ? Color::Black : Color::White;
}

std::vector<LatticePoint> lattice_neighbors(const Tree& tree, const LatticePoint& x) {
  std::vector<LatticePoint> out;
  const int deg = star_degree(tree, x.p);
  for (int k = 1; k <= deg; ++k) {
    TreePoint q = star_step(tree, x.p, k);
    out.push_back({q, x.r4 - 2});
    out.push_back({q, x.r4 + 2});
  }
  return out;
}

bool lattice_adjacent(const Tree& tree, const LatticePoint& x, const LatticePoint& y) {
  return std::abs(x.r4 - y.r4) == 2 && dist4(tree, x.p, y.p) == 2;
}

bool covers(const Tree& tree, const LatticePoint& x, const LatticePoint& y) {
  if (!lattice_adjacent(tree, x, y)) return false;
  return color(tree, x) == Color::Black || color(tree, y) == Color::White;
}

bool leq(const Tree& tree, const LatticePoint& x, const LatticePoint& y) {
  if (x == y) return true;
  if (covers(tree, x, y)) return true;
  if (color(tree, x) != Color::Black || color(tree, y) != Color::White) return false;
  if (dist4(tree, x.p, y.p) + std::abs(x.r4 - y.r4) != 4) return false;
  for (const auto& m : lattice_neighbors(tree, x))
    if (covers(tree, x, m) && covers(tree, m, y)) return true;
  return false;
}

Neighborhood local_neighborhood(const Tree& tree, const LatticePoint& x) {
  auto closure = [&](bool upward) {
    std::vector<LatticePoint> out{x};
    std::vector<LatticePoint> frontier{x};
    for (int depth = 0; depth < 2; ++depth) {
      std::vector<LatticePoint> next;
      for (const auto& a : frontier)
        for (const auto& b : lattice_neighbors(tree, a)) {
          bool ok = upward ? covers(tree, a, b) : covers(tree, b, a);
          if (ok && std::find(out.begin(), out.end(), b) == out.end()) {
            out.push_back(b);
            next.push_back(b);
          }
        }
      frontier = std::move(next);
    }
    std::erase_if(out, [](const LatticePoint& y) { return y.r4 < 0; });
    std::sort(out.begin(), out.end());
    return out;
  };
  return {closure(true), closure(false)};
}

LatticePoint midpoint(const Tree& tree, const LatticePoint& x, const LatticePoint& y) {
  int d = dist4(tree, x.p, y.p);
  if (d % 2 != 0 || (x.r4 + y.r4) % 2 != 0) throw std::invalid_argument("midpoint off the quarter grid");
  return {point_along(tree, x.p, y.p, d / 2), (x.r4 + y.r4) / 2};
}

std::pair<LatticePoint, LatticePoint> round_pair(const Tree& tree, const LatticePoint& z) {
  require_on_tree(tree, z.p);
  if (!z.in_double_star_lattice()) throw std::invalid_argument("round_pair: point not in Gamma** x Z**");
  if (z.in_star_lattice()) return {z, z};
  auto ordered = [&](const LatticePoint& a, const LatticePoint& b) {
    if (leq(tree, a, b)) return std::pair{a, b};
    if (leq(tree, b, a)) return std::pair{b, a};
    throw std::logic_error("round_pair: candidates are not comparable");
  };
  if (!z.p.on_gamma_star()) {
    // Odd quarter offset: the two Gamma* points of this edge at distance 1,
    // with radii r4 -+ 1 assigned so that vertices get integral radii.
    TreePoint a = TreePoint::on_edge(z.p.u, z.p.v, z.p.q - 1);
    TreePoint b = TreePoint::on_edge(z.p.u, z.p.v, z.p.q + 1);
    LatticePoint xa{a, z.r4 - 1}, xb{b, z.r4 + 1};
    if (!xa.in_star_lattice()) {
      xa.r4 = z.r4 + 1;
      xb.r4 = z.r4 - 1;
    }
    return ordered(xa, xb);
  }
  if (z.p.is_vertex()) return ordered({z.p, z.r4 - 2}, {z.p, z.r4 + 2});
  return ordered({TreePoint::vertex(z.p.u), z.r4}, {TreePoint::vertex(z.p.v), z.r4});
}

int d_inf(const Tree& tree, std::span<const LatticePoint> x, std::span<const LatticePoint> y) {
  if (x.size() != y.size()) throw std::invalid_argument("d_inf: size mismatch");
  int best = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    best = std::max(best, dist4(tree, x[i].p, y[i].p) + std::abs(x[i].r4 - y[i].r4));
  return best;
}

}  // namespace halfflow
