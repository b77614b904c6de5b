#include "halfflow/descent.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "halfflow/errors.hpp"

namespace halfflow {

namespace {

std::vector<int> anchors(const MultiflowInstance& instance, const TreeEmbedding& embedding) {
  std::vector<int> out;
  for (int t : instance.terminals()) out.push_back(embedding.anchor[t]);
  return out;
}

}  // namespace

int gamma0_diameter(const MultiflowInstance& instance, const TreeEmbedding& embedding) {
  const Tree& tree = embedding.gamma();
  auto q = anchors(instance, embedding);
  int best = 0;
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = a + 1; b < q.size(); ++b) best = std::max(best, tree.vertex_distance(q[a], q[b]));
  return best;
}

int gamma0_center(const MultiflowInstance& instance, const TreeEmbedding& embedding) {
  const Tree& tree = embedding.gamma();
  auto q = anchors(instance, embedding);
  // The center of a tree spanned by leaves q lies on a longest q-q path.
  int a = q[0], b = q[0], best = -1;
  for (int x : q)
    for (int y : q)
      if (tree.vertex_distance(x, y) > best) {
        best = tree.vertex_distance(x, y);
        a = x;
        b = y;
      }
  int center = -1, radius = std::numeric_limits<int>::max();
  for (int v : tree.vertex_path(a, b)) {
    int ecc = 0;
    for (int x : q) ecc = std::max(ecc, tree.vertex_distance(v, x));
    if (ecc < radius || (ecc == radius && v < center)) {
      radius = ecc;
      center = v;
    }
  }
  return center;
}

Potential initial_potential(const MultiflowInstance& instance, const TreeEmbedding& embedding) {
  const int center = gamma0_center(instance, embedding);
  const int radius4 = 4 * gamma0_diameter(instance, embedding);
  Potential x;
  x.at.resize(instance.num_nodes());
  for (int i = 0; i < instance.num_nodes(); ++i) {
    if (instance.is_terminal(i))
      x.at[i] = {TreePoint::vertex(embedding.anchor[i]), 0};
    else
      x.at[i] = {TreePoint::vertex(center), radius4};
  }
  return x;
}

DescentResult steepest_descent(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                               const DescentObserver& observer) {
  DescentResult out;
  out.initial = initial_potential(instance, embedding);
  Potential x = out.initial;
  auto g0 = g_value(instance, embedding, x);
  if (!g0) throw InfeasiblePotential("initial potential is infeasible");
  std::int64_t g = *g0;
  out.stats.g_trace.push_back(g);
  // g decreases strictly and is bounded below by 0.
  const long max_rounds = g + 2;

  for (long round = 0;; ++round) {
    if (round > max_rounds) throw std::logic_error("descent failed to terminate");
    DoubleCoverNetwork net = build_cover(instance, embedding, x);
    SubflowResult flow = max_subflow(net.tilde());
    out.stats.augmentations += flow.augmentations;
    NodeSet cut = procedure_b(net, flow.min_cut);
    DescentRound info;
    info.iteration = out.stats.iterations;
    info.network = &net;
    info.flow = &flow;
    info.normal_cut = &cut;
    info.current = &x;
    info.g_current = g;

    if (cut == net.source_only()) {
      Circulation circ = procedure_a(net, flow);
      out.support = support_zeta(instance, net, circ);
      if (auto why = admissibility_violation(instance, embedding, x, out.support))
        throw std::logic_error("support is not admissible: " + *why);
      out.multiflow = extract_multiflow(instance, embedding, x, out.support);
      if (observer) observer(info);
      break;
    }

    auto [cut_f, cut_i] = split_fi(net, cut);
    Potential best;
    std::int64_t best_g = 0;
    bool have = false;
    for (const NodeSet* y : {&cut_f, &cut_i}) {
      Potential cand = apply_cut(instance, embedding, net, *y);
      auto gc = g_value(instance, embedding, cand);
      if (!gc) throw std::logic_error("normal cut produced an infeasible potential");
      if (*gc - g != g_delta(net, *y)) throw std::logic_error("cut capacity disagrees with the change of g");
      if (!have || *gc < best_g) {
        best = std::move(cand);
        best_g = *gc;
        have = true;
      }
    }
    if (best_g >= g) throw std::logic_error("descent step does not decrease g");
    info.cut_f = &cut_f;
    info.cut_i = &cut_i;
    info.next = &best;
    info.g_next = best_g;
    if (observer) observer(info);
    x = std::move(best);
    g = best_g;
    out.stats.g_trace.push_back(g);
    ++out.stats.iterations;
  }
  out.potential = x;
  return out;
}

}  // namespace halfflow
