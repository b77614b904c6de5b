#include "halfflow/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <set>

#include "halfflow/bisubmodular.hpp"
#include "halfflow/descent.hpp"
#include "halfflow/errors.hpp"

namespace halfflow {

namespace {

// Shared backtracking state; x is meaningful where placed is set.
struct Search {
  const MultiflowInstance& instance;
  const Tree& tree;
  std::vector<int> order;  // nonterminals in assignment order
  Potential x;
  long visited = 0;
  long work_limit = std::numeric_limits<long>::max();
  std::vector<char> placed;

  // Every edge from v to a placed node is satisfied.
  bool consistent(int v) const {
    for (int e : instance.incident(v)) {
      int w = instance.other_end(e, v);
      if (!placed[w]) continue;
      const auto &a = x.at[v], &b = x.at[w];
      if (dist4(tree, a.p, b.p) - a.r4 - b.r4 > 4 * instance.edge(e).cost) return false;
    }
    return true;
  }
};

}  // namespace

std::int64_t dual_enum(const MultiflowInstance& instance) {
  const int k = instance.num_terminals();
  const int free_nodes = instance.num_nodes() - k;
  const double per_node = 3.0 + 5.0 * k;
  if (free_nodes * std::log10(per_node) > 8.0) throw TooLarge("dual enumeration exceeds 1e8 candidates");
  TreeEmbedding star = star_embedding(instance);
  for (const auto& e : instance.edges())
    if (e.cost != 0) throw std::invalid_argument("dual_enum expects zero edge costs");

  std::vector<LatticePoint> menu;
  for (int r = 0; r <= 2; ++r) menu.push_back({TreePoint::vertex(0), 4 * r});
  for (int s = 0; s < k; ++s) {
    const int leaf = star.anchor[instance.terminals()[s]];
    for (int r = 0; r <= 2; ++r) menu.push_back({TreePoint::vertex(leaf), 4 * r});
    menu.push_back({TreePoint::on_edge(0, leaf, 2), 2});
    menu.push_back({TreePoint::on_edge(0, leaf, 2), 6});
  }
  std::stable_sort(menu.begin(), menu.end(), [](const auto& a, const auto& b) { return a.r4 < b.r4; });

  Search search{instance, star.gamma(), {}, {}, 0, std::numeric_limits<long>::max(), {}};
  search.x.at.resize(instance.num_nodes());
  search.placed.assign(instance.num_nodes(), 0);
  for (int t : instance.terminals()) {
    search.x.at[t] = {TreePoint::vertex(star.anchor[t]), 0};
    search.placed[t] = 1;
  }
  for (int v = 0; v < instance.num_nodes(); ++v)
    if (!instance.is_terminal(v)) search.order.push_back(v);

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t pos, std::int64_t cost) {
    if (cost >= best) return;
    if (pos == search.order.size()) {
      best = cost;
      return;
    }
    const int v = search.order[pos];
    for (const auto& cand : menu) {
      const std::int64_t add = instance.capacity(v) * cand.r4 / 2;
      if (cost + add >= best) break;
      search.x.at[v] = cand;
      search.placed[v] = 1;
      if (search.consistent(v)) go(pos + 1, cost + add);
      search.placed[v] = 0;
    }
  };
  go(0, 0);
  if (best == std::numeric_limits<std::int64_t>::max()) throw std::logic_error("dual_enum found no potential");
  return best;
}

std::int64_t flow_enum(const SubflowNetwork& net) {
  const auto& arcs = net.arcs();
  if (arcs.size() > 10) throw TooLarge("flow_enum supports at most 10 arcs");
  // The 4^10 budget is what ten arcs of capacity 3 need.
  double combos = 1;
  for (const auto& a : arcs) {
    if (a.capacity >= kInfiniteCapacity) throw TooLarge("flow_enum needs bounded arcs");
    combos *= static_cast<double>(a.capacity + 1);
  }
  if (combos > 1048576.0) throw TooLarge("flow_enum exceeds 4^10 flow vectors");
  std::vector<std::int64_t> flow(arcs.size(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  for (;;) {
    std::vector<std::int64_t> excess(net.num_nodes(), 0);
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      excess[arcs[a].to] += flow[a];
      excess[arcs[a].from] -= flow[a];
    }
    bool ok = true;
    for (int v = 0; v < net.num_nodes() && ok; ++v)
      if (v != net.source() && v != net.sink() && net.block_of(v) < 0 && excess[v] != 0) ok = false;
    for (const auto& block : net.blocks()) {
      if (!ok) break;
      BlockVector x{};
      for (int e = 0; e < 6; ++e) x[e] = excess[block.nodes[e]];
      ok = in_base(block.b, x);
    }
    if (ok) best = std::max(best, excess[net.sink()]);
    std::size_t a = 0;
    while (a < arcs.size() && flow[a] == arcs[a].capacity) flow[a++] = 0;
    if (a == arcs.size()) break;
    ++flow[a];
  }
  return best;
}

std::int64_t cut_enum(const SubflowNetwork& net) {
  std::vector<int> free_nodes;
  for (int v = 0; v < net.num_nodes(); ++v)
    if (v != net.source() && v != net.sink()) free_nodes.push_back(v);
  if (free_nodes.size() > 20) throw TooLarge("cut_enum supports at most 20 free nodes");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint32_t mask = 0; mask < (1u << free_nodes.size()); ++mask) {
    NodeSet x(net.num_nodes(), 0);
    x[net.source()] = 1;
    for (std::size_t i = 0; i < free_nodes.size(); ++i)
      if (mask & (1u << i)) x[free_nodes[i]] = 1;
    if (auto c = cut_capacity(net, x)) best = std::min(best, *c);
  }
  return best;
}

std::vector<TreePoint> gamma0_star_points(const MultiflowInstance& instance, const TreeEmbedding& embedding) {
  const Tree& tree = embedding.gamma();
  std::set<TreePoint> points;
  const auto& terms = instance.terminals();
  for (std::size_t a = 0; a < terms.size(); ++a)
    for (std::size_t b = a + 1; b < terms.size(); ++b) {
      auto path = tree.vertex_path(embedding.anchor[terms[a]], embedding.anchor[terms[b]]);
      for (std::size_t i = 0; i < path.size(); ++i) {
        points.insert(TreePoint::vertex(path[i]));
        if (i + 1 < path.size()) points.insert(TreePoint::on_edge(path[i], path[i + 1], 2));
      }
    }
  return {points.begin(), points.end()};
}

namespace {

int round_up_radius(const TreePoint& p, int r4) {
  r4 = std::max(r4, 0);
  while (!LatticePoint{p, r4}.in_star_lattice()) ++r4;
  return r4;
}

}  // namespace

ConvexityReport convexity_probe(const MultiflowInstance& instance, const TreeEmbedding& embedding, long pairs,
                                std::uint64_t seed) {
  const Tree& tree = embedding.gamma();
  const auto points = gamma0_star_points(instance, embedding);
  std::mt19937_64 rng(seed);
  auto pick = [&](int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); };

  // Smallest radii making p feasible, plus a random surplus.
  auto complete = [&](Potential& x) {
    for (int i = 0; i < instance.num_nodes(); ++i) {
      if (instance.is_terminal(i)) continue;
      int need = 0;
      for (int e : instance.incident(i)) {
        int j = instance.other_end(e, i);
        need = std::max(need, dist4(tree, x.at[i].p, x.at[j].p) - static_cast<int>(4 * instance.edge(e).cost));
      }
      x.at[i].r4 = round_up_radius(x.at[i].p, need + 4 * (pick(4) == 0 ? pick(3) : 0));
    }
  };
  auto random_potential = [&]() {
    Potential x = initial_potential(instance, embedding);
    for (int i = 0; i < instance.num_nodes(); ++i)
      if (!instance.is_terminal(i)) x.at[i].p = points[pick(static_cast<int>(points.size()))];
    complete(x);
    return x;
  };
  // A nearby potential: a few coordinates moved by one or two Gamma* steps.
  auto perturbed = [&](const Potential& base) {
    Potential y = base;
    for (int i = 0; i < instance.num_nodes(); ++i) {
      if (instance.is_terminal(i) || pick(2) == 0) continue;
      TreePoint p = y.at[i].p;
      for (int step = pick(3); step > 0; --step) p = star_step(tree, p, 1 + pick(star_degree(tree, p)));
      if (p.is_vertex() && tree.is_open_end(p.u)) continue;
      y.at[i].p = p;
    }
    complete(y);
    return y;
  };

  ConvexityReport rep;
  const int n = instance.num_nodes();
  for (long t = 0; t < pairs; ++t) {
    Potential x = random_potential();
    Potential y = pick(2) == 0 ? random_potential() : perturbed(x);
    auto gx = g_value(instance, embedding, x), gy = g_value(instance, embedding, y);
    if (!gx || !gy) throw std::logic_error("convexity probe sampled an infeasible potential");
    Potential lo, hi;
    lo.at.resize(n);
    hi.at.resize(n);
    for (int i = 0; i < n; ++i) {
      auto [a, b] = round_pair(tree, midpoint(tree, x.at[i], y.at[i]));
      lo.at[i] = a;
      hi.at[i] = b;
    }
    auto glo = g_value(instance, embedding, lo), ghi = g_value(instance, embedding, hi);
    ++rep.pairs;
    if (!glo || !ghi || *gx + *gy < *glo + *ghi) ++rep.violations;
  }
  return rep;
}

OptimumSearch search_optimum(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                             const Potential& from, long work_limit, const Potential* incumbent) {
  const Tree& tree = embedding.gamma();
  const auto points = gamma0_star_points(instance, embedding);
  const int radius4 = 4 * gamma0_diameter(instance, embedding);

  Search search{instance, tree, {}, {}, 0, work_limit, {}};
  search.x.at.resize(instance.num_nodes());
  search.placed.assign(instance.num_nodes(), 0);
  for (int t : instance.terminals()) {
    search.x.at[t] = {TreePoint::vertex(embedding.anchor[t]), 0};
    search.placed[t] = 1;
  }
  // Breadth-first from the terminals so that constraints bite early.
  std::vector<char> queued(instance.num_nodes(), 0);
  std::vector<int> queue(instance.terminals().begin(), instance.terminals().end());
  for (int t : queue) queued[t] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (int e : instance.incident(queue[h])) {
      int w = instance.other_end(e, queue[h]);
      if (!queued[w]) {
        queued[w] = 1;
        queue.push_back(w);
        search.order.push_back(w);
      }
    }
  for (int v = 0; v < instance.num_nodes(); ++v)
    if (!queued[v]) search.order.push_back(v);

  auto tick = [&]() {
    if (++search.visited > search.work_limit) throw TooLarge("optimum search exceeded its work limit");
  };
  // Smallest lattice radius at p satisfying every edge to an already placed node.
  auto min_radius = [&](int v, const TreePoint& p) {
    int need = 0;
    for (int e : instance.incident(v)) {
      int w = instance.other_end(e, v);
      if (!search.placed[w]) continue;
      need = std::max(need, dist4(tree, p, search.x.at[w].p) - search.x.at[w].r4 -
                                static_cast<int>(4 * instance.edge(e).cost));
    }
    return round_up_radius(p, need);
  };
  // radius4 is a multiple of 4: vertices take radii 0 mod 4, midpoints 2 mod 4.
  auto max_radius = [&](const TreePoint& p) { return p.is_vertex() ? radius4 : radius4 - 2; };

  OptimumSearch out;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  int best_d = std::numeric_limits<int>::max();
  bool incumbent_ok = false;
  if (incumbent) {
    if (auto g = g_value(instance, embedding, *incumbent)) {
      // Only strictly better potentials are searched for; the incumbent is the fallback.
      best = *g;
      incumbent_ok = true;
    }
  }

  // Radii beyond the cost bound are useless; a free node takes the largest radius since
  // growing a radius never violates an edge.
  std::function<void(std::size_t, std::int64_t)> minimize = [&](std::size_t pos, std::int64_t cost) {
    tick();
    if (pos == search.order.size()) {
      best = std::min(best, cost);
      return;
    }
    const int v = search.order[pos];
    const std::int64_t c = instance.capacity(v);
    search.placed[v] = 1;
    for (const auto& p : points) {
      tick();
      const int lo = min_radius(v, p), hi = max_radius(p);
      if (lo > hi) continue;
      if (c == 0) {
        search.x.at[v] = {p, hi};
        minimize(pos + 1, cost);
        continue;
      }
      for (int r4 = lo; r4 <= hi && cost + c * r4 / 2 < best; r4 += 4) {
        tick();
        search.x.at[v] = {p, r4};
        minimize(pos + 1, cost + c * r4 / 2);
      }
    }
    search.placed[v] = 0;
  };
  minimize(0, 0);
  out.g_min = best;

  if (incumbent_ok && *g_value(instance, embedding, *incumbent) == best)
    best_d = d_inf(tree, from.at, incumbent->at);
  std::function<void(std::size_t, std::int64_t, int)> closest = [&](std::size_t pos, std::int64_t cost, int d) {
    tick();
    if (pos == search.order.size()) {
      if (cost == best) best_d = std::min(best_d, d);
      return;
    }
    const int v = search.order[pos];
    const std::int64_t c = instance.capacity(v);
    search.placed[v] = 1;
    for (const auto& p : points) {
      tick();
      const int dp = dist4(tree, p, from.at[v].p);
      if (std::max(d, dp) >= best_d) continue;
      const int lo = min_radius(v, p), hi = max_radius(p);
      for (int r4 = lo; r4 <= hi && cost + c * r4 / 2 <= best; r4 += 4) {
        tick();
        const int dv = dp + std::abs(r4 - from.at[v].r4);
        if (std::max(d, dv) >= best_d) {
          if (r4 >= from.at[v].r4) break;
          continue;
        }
        search.x.at[v] = {p, r4};
        closest(pos + 1, cost + c * r4 / 2, std::max(d, dv));
      }
    }
    search.placed[v] = 0;
  };
  closest(0, 0, 0);
  out.d_inf4 = best_d;
  out.visited = search.visited;
  return out;
}

}  // namespace halfflow
