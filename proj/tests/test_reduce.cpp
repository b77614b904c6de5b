#include <queue>
#include <random>

#include "doctest.h"
#include "halfflow/descent.hpp"
#include "halfflow/errors.hpp"
#include "halfflow/extract.hpp"
#include "halfflow/reduce.hpp"
#include "support.hpp"

using namespace halfflow;
namespace ht = halfflow::testing;

namespace {

int bfs_diameter(const SigmaTree& s) {
  const int n = static_cast<int>(s.labels.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : s.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int best = 0;
  for (int src = 0; src < n; ++src) {
    std::vector<int> d(n, -1);
    std::queue<int> q;
    d[src] = 0;
    q.push(src);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      best = std::max(best, d[v]);
      for (int w : adj[v])
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          q.push(w);
        }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("Sigma trees") {
  auto two = build_sigma(2);
  CHECK(two.labels.size() == 2);
  CHECK(two.edges.size() == 1);
  CHECK(two.diameter == 1);
  auto three = build_sigma(3);
  CHECK(three.diameter == 2);
  CHECK(three.labels.size() == 4);
  auto eight = build_sigma(8);
  CHECK(eight.diameter <= 6);
  for (int k = 2; k <= 40; ++k) {
    auto s = build_sigma(k);
    CHECK(static_cast<int>(s.leaves.size()) == k);
    CHECK(s.diameter == bfs_diameter(s));
    CHECK(s.edges.size() + 1 == s.labels.size());
    std::vector<int> deg(s.labels.size(), 0);
    for (auto [a, b] : s.edges) {
      ++deg[a];
      ++deg[b];
    }
    for (std::size_t v = 0; v < deg.size(); ++v) CHECK((deg[v] == 1 || deg[v] == 3 || (k == 2 && deg[v] == 1)));
    for (int leaf : s.leaves) CHECK(deg[leaf] == 1);
    int lg = 0;
    while ((1 << lg) < k) ++lg;
    CHECK(s.diameter <= 2 * lg);
  }
}

TEST_CASE("perturbed geometry") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    auto inst = ht::random_instance(rng);
    PerturbedProblem pr = perturb(inst);
    const Tree& tree = pr.embedding.gamma();
    CHECK(pr.anchor_offset == (2 * inst.num_edges() + 1) * pr.sigma_diameter);
    CHECK(pr.gamma0_diameter == gamma0_diameter(pr.instance, pr.embedding));
    for (const auto& e : pr.instance.edges()) CHECK(e.cost == 2);
    for (int s = 0; s < inst.num_terminals(); ++s) {
      const int anchor = pr.embedding.anchor[inst.terminals()[s]];
      CHECK(pr.ray_of[anchor] == s);
      CHECK(pr.position[anchor] == pr.anchor_offset);
      CHECK(tree.is_open_end(pr.ray[s].back()));
    }
    for (int v = 0; v < tree.num_vertices(); ++v) CHECK(tree.degree(v) <= 3);
  }
  auto no_edges = MultiflowInstance({"s", "t", "a"}, {}, {"s", "t"}, {{"a", 1}});
  PerturbedProblem pr = perturb(no_edges);
  CHECK(pr.anchor_offset == pr.sigma_diameter);
}

TEST_CASE("hit tests") {
  auto inst = ht::load_fixture("k13.json");
  PerturbedProblem pr = perturb(inst);
  const Tree& tree = pr.embedding.gamma();
  const int s = inst.index_of("s"), m = inst.index_of("m");
  const int e = inst.find_edge(s, m);
  Potential x = initial_potential(pr.instance, pr.embedding);
  // Overlapping balls never hit.
  for (int band = 0; band < 2 * inst.num_edges() + 1; ++band) CHECK_FALSE(hit_test(pr, x, e, band));
  // Put m at u_s with radius 0: the gap is the whole ray up to the anchor.
  x.at[m] = {TreePoint::vertex(pr.ray[0][0]), 0};
  const int gap4 = dist4(tree, x.at[m].p, x.at[s].p);
  CHECK(gap4 == 4 * pr.anchor_offset);
  for (int band = 0; band < 2 * inst.num_edges() + 1; ++band) CHECK(hit_test(pr, x, e, band));
  // Radius reaching past the first band leaves it clean.
  x.at[m] = {TreePoint::vertex(pr.ray[0][0]), 4 * pr.sigma_diameter};
  CHECK_FALSE(hit_test(pr, x, e, 0));
  CHECK(hit_test(pr, x, e, 1));
  // Zero-length gap.
  x.at[m] = {TreePoint::vertex(pr.ray[0][0]), 4 * pr.anchor_offset};
  for (int band = 0; band < 2 * inst.num_edges() + 1; ++band) CHECK_FALSE(hit_test(pr, x, e, band));
}

TEST_CASE("recovery of a star potential") {
  for (const char* f : {"k13.json", "triangle.json", "inner_triangle.json", "disconnected.json"}) {
    auto inst = ht::load_fixture(f);
    PerturbedProblem pr = perturb(inst);
    auto res = steepest_descent(pr.instance, pr.embedding);
    auto star = star_embedding(inst);
    Recovery rec = recover(inst, star, pr, res.potential);
    CHECK(rec.band >= 0);
    CHECK(rec.band <= 2 * inst.num_edges());
    CHECK_FALSE(potential_violation(inst, star, rec.potential).has_value());
    CHECK(*g_value(inst, star, rec.potential) == res.multiflow.value2());
    for (const auto& x : rec.potential.at) {
      CHECK(x.r4 % 2 == 0);
      CHECK(x.r4 <= 4);
    }
    // Every S-path gets total radius at least one.
    CHECK(certify(inst, star, rec.potential, res.multiflow).optimal());
  }
}

TEST_CASE("a potential whose gaps cover every band has no clean band") {
  auto inst = ht::load_fixture("k13.json");
  PerturbedProblem pr = perturb(inst);
  auto star = star_embedding(inst);
  Potential x = initial_potential(pr.instance, pr.embedding);
  x.at[inst.index_of("m")] = {TreePoint::vertex(pr.ray[0][0]), 0};
  CHECK_THROWS_AS(recover(inst, star, pr, x), NoCleanBand);
}

TEST_CASE("recovered coordinates take one of the three star forms") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 30; ++t) {
    auto inst = ht::random_instance(rng);
    PerturbedProblem pr = perturb(inst);
    auto res = steepest_descent(pr.instance, pr.embedding);
    auto star = star_embedding(inst);
    Recovery rec = recover(inst, star, pr, res.potential);
    for (int i = 0; i < inst.num_nodes(); ++i) {
      const auto& y = rec.potential.at[i];
      const bool center = y == LatticePoint{TreePoint::vertex(0), 4};
      const bool half = y.r4 == 2 && !y.p.is_vertex() && (y.p.u == 0 || y.p.v == 0);
      const bool leaf = y.r4 == 0 && y.p.is_vertex();
      CHECK((center || half || leaf));
    }
    CHECK(*g_value(inst, star, rec.potential) == res.multiflow.value2());
  }
}
