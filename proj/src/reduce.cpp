#include "halfflow/reduce.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "halfflow/errors.hpp"

namespace halfflow {

namespace {

int farthest(int n, const std::vector<std::vector<int>>& adj, int from, int* dist_out) {
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  int best = from;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (dist[v] > dist[best]) best = v;
    for (int w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  *dist_out = dist[best];
  return best;
}

}  // namespace

SigmaTree build_sigma(int k) {
  if (k < 2) throw std::invalid_argument("build_sigma needs at least two leaves");
  SigmaTree s;
  auto add = [&]() {
    s.labels.push_back("u" + std::to_string(s.labels.size()));
    return static_cast<int>(s.labels.size()) - 1;
  };
  if (k == 2) {
    int a = add(), b = add();
    s.edges.emplace_back(a, b);
    s.leaves = {a, b};
    s.diameter = 1;
    return s;
  }
  // Rooted balanced binary tree; the degree-2 root is contracted afterwards.
  std::function<int(int)> build = [&](int leaves) -> int {
    int v = add();
    if (leaves == 1) {
      s.leaves.push_back(v);
      return v;
    }
    int left = build((leaves + 1) / 2);
    int right = build(leaves / 2);
    s.edges.emplace_back(v, left);
    s.edges.emplace_back(v, right);
    return v;
  };
  const int left = build((k + 1) / 2);
  const int right = build(k / 2);
  s.edges.emplace_back(left, right);

  const int n = static_cast<int>(s.labels.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : s.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int d = 0;
  int end = farthest(n, adj, s.leaves.front(), &d);
  farthest(n, adj, end, &d);
  s.diameter = d;
  return s;
}

PerturbedProblem perturb(const MultiflowInstance& original) {
  const int k = original.num_terminals();
  const int m = original.num_edges();
  SigmaTree sigma = build_sigma(k);
  PerturbedProblem out{original.with_uniform_cost(2), {}, 0, 0, 0, {}, {}, {}};
  out.sigma_diameter = sigma.diameter;
  out.anchor_offset = (2 * m + 1) * sigma.diameter;
  out.gamma0_diameter = 2 * out.anchor_offset + sigma.diameter;
  // Descent moves each coordinate by at most one unit per step, so rays
  // longer than the anchor offset plus d(Gamma_0) plus a margin are never exhausted.
  const int ray_length = out.anchor_offset + out.gamma0_diameter + 8;

  std::vector<std::string> labels = sigma.labels;
  std::vector<std::pair<int, int>> edges = sigma.edges;
  std::vector<int> open_ends;
  out.ray.resize(k);
  for (int s = 0; s < k; ++s) {
    out.ray[s].push_back(sigma.leaves[s]);
    const std::string& name = original.name(original.terminals()[s]);
    for (int t = 1; t <= ray_length; ++t) {
      labels.push_back(name + ":" + std::to_string(t));
      int v = static_cast<int>(labels.size()) - 1;
      edges.emplace_back(out.ray[s].back(), v);
      out.ray[s].push_back(v);
    }
    open_ends.push_back(out.ray[s].back());
  }
  const int n = static_cast<int>(labels.size());
  out.ray_of.assign(n, -1);
  out.position.assign(n, -1);
  for (int s = 0; s < k; ++s)
    for (int t = 0; t <= ray_length; ++t) {
      out.ray_of[out.ray[s][t]] = s;
      out.position[out.ray[s][t]] = t;
    }
  out.embedding.tree = std::make_shared<const Tree>(std::move(labels), edges, open_ends);
  out.embedding.anchor.assign(original.num_nodes(), -1);
  for (int s = 0; s < k; ++s) out.embedding.anchor[original.terminals()[s]] = out.ray[s][out.anchor_offset];
  return out;
}

namespace {

// Band index of the ray edge between adjacent vertices a and b, or -1.
int band_of(const PerturbedProblem& pr, int a, int b) {
  if (pr.ray_of[a] < 0 || pr.ray_of[a] != pr.ray_of[b]) return -1;
  const int t = std::min(pr.position[a], pr.position[b]);
  const int band = t / pr.sigma_diameter;
  const int bands = pr.anchor_offset / pr.sigma_diameter;
  return band < bands ? band : -1;
}

bool ball_contains(const Tree& tree, const LatticePoint& x, int vertex) {
  return dist4(tree, x.p, TreePoint::vertex(vertex)) <= x.r4;
}

}  // namespace

bool hit_test(const PerturbedProblem& pr, const Potential& potential, int edge, int band) {
  const Tree& tree = pr.embedding.gamma();
  const auto& e = pr.instance.edge(edge);
  const LatticePoint &x = potential.at[e.u], &y = potential.at[e.v];
  const int d = dist4(tree, x.p, y.p);
  if (d - x.r4 - y.r4 <= 0) return false;
  // The gap between the balls runs along the geodesic from radius r_u to d - r_v.
  TreePoint prev = point_along(tree, x.p, y.p, x.r4);
  for (int t = x.r4 + 4; t <= d - y.r4; t += 4) {
    TreePoint next = point_along(tree, x.p, y.p, t);
    if (!prev.is_vertex() || !next.is_vertex()) throw std::logic_error("ball boundary off the vertex set");
    if (band_of(pr, prev.u, next.u) == band) return true;
    prev = next;
  }
  return false;
}

Recovery recover(const MultiflowInstance& original, const TreeEmbedding& star, const PerturbedProblem& pr,
                 const Potential& perturbed) {
  const Tree& tree = pr.embedding.gamma();
  const int bands = pr.anchor_offset / pr.sigma_diameter;
  Recovery out;
  for (int k = 0; k < bands && out.band < 0; ++k) {
    bool clean = true;
    for (int e = 0; e < pr.instance.num_edges() && clean; ++e) clean = !hit_test(pr, perturbed, e, k);
    if (clean) out.band = k;
  }
  if (out.band < 0) throw NoCleanBand("every band is hit by some edge");

  // e_s joins positions cut-1 and cut on ray s; C_s is the far side.
  const int cut = (out.band + 1) * pr.sigma_diameter;
  const int k = original.num_terminals();
  out.potential.at.resize(original.num_nodes());
  for (int i = 0; i < original.num_nodes(); ++i) {
    const LatticePoint& x = perturbed.at[i];
    std::vector<int> holds;
    for (int s = 0; s < k; ++s)
      if (ball_contains(tree, x, pr.ray[s][cut - 1]) && ball_contains(tree, x, pr.ray[s][cut])) holds.push_back(s);
    LatticePoint y;
    if (holds.size() >= 2) {
      y = {TreePoint::vertex(0), 4};
    } else if (holds.size() == 1) {
      y = {TreePoint::on_edge(0, star.anchor[original.terminals()[holds[0]]], 2), 2};
    } else {
      // The ball avoids every e_s, so its center decides the component.
      int side = -1;
      const TreePoint& c = x.p;
      int probe = c.u;
      if (!c.is_vertex()) {
        int s_u = pr.ray_of[c.u], s_v = pr.ray_of[c.v];
        int t_u = pr.position[c.u], t_v = pr.position[c.v];
        if (s_u >= 0 && s_u == s_v && std::max(t_u, t_v) == cut && std::min(t_u, t_v) == cut - 1)
          throw std::logic_error("ball center on e_s without containing it");
      }
      if (pr.ray_of[probe] >= 0 && pr.position[probe] >= cut) side = pr.ray_of[probe];
      y = {TreePoint::vertex(side < 0 ? 0 : star.anchor[original.terminals()[side]]), 0};
    }
    out.potential.at[i] = y;
  }
  for (int s = 0; s < k; ++s) {
    int t = original.terminals()[s];
    out.potential.at[t] = {TreePoint::vertex(star.anchor[t]), 0};
  }
  return out;
}

}  // namespace halfflow
