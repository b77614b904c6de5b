#include "halfflow/extract.hpp"

#include <algorithm>
#include <map>

#include "halfflow/errors.hpp"

namespace halfflow {

std::int64_t HalfIntegralMultiflow::value2() const {
  std::int64_t v = 0;
  for (const auto& p : paths) v += p.lambda2;
  return v;
}

std::vector<std::int64_t> HalfIntegralMultiflow::node_load2(const MultiflowInstance& instance) const {
  std::vector<std::int64_t> load(instance.num_nodes(), 0);
  for (const auto& p : paths)
    for (std::size_t l = 1; l + 1 < p.nodes.size(); ++l) load[p.nodes[l]] += p.lambda2;
  return load;
}

std::vector<std::int64_t> HalfIntegralMultiflow::edge_load2(const MultiflowInstance& instance) const {
  std::vector<std::int64_t> load(instance.num_edges(), 0);
  for (const auto& p : paths)
    for (std::size_t l = 0; l + 1 < p.nodes.size(); ++l) {
      int e = instance.find_edge(p.nodes[l], p.nodes[l + 1]);
      if (e >= 0) load[e] += p.lambda2;
    }
  return load;
}

HalfIntegralMultiflow extract_multiflow(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                                        const Potential& potential, const AdmissibleSupport& support) {
  const Tree& tree = embedding.gamma();
  std::vector<std::int64_t> z = support.twice;  // 2 zeta, updated in place
  // comp[e][side]: component of edge e at its u (side 0) or v (side 1) endpoint.
  // Only supported edges are tight, so only they have distinct endpoints.
  std::vector<std::array<int, 2>> comp(instance.num_edges(), {0, 0});
  for (int e = 0; e < instance.num_edges(); ++e) {
    if (z[e] == 0) continue;
    const auto& edge = instance.edge(e);
    if (!instance.is_terminal(edge.u)) comp[e][0] = component_of(tree, potential.at[edge.u].p, potential.at[edge.v].p);
    if (!instance.is_terminal(edge.v)) comp[e][1] = component_of(tree, potential.at[edge.v].p, potential.at[edge.u].p);
  }
  auto comp_at = [&](int e, int node) { return comp[e][instance.edge(e).u == node ? 0 : 1]; };
  auto component_sum = [&](int node, int k) {
    std::int64_t s = 0;
    for (int e : instance.incident(node))
      if (comp_at(e, node) == k) s += z[e];
    return s;
  };

  std::map<std::vector<int>, std::int64_t> found;
  for (;;) {
    int start = -1, first = -1;
    for (int s : instance.terminals()) {
      for (int e : instance.incident(s))
        if (z[e] > 0) {
          first = e;
          break;
        }
      if (first >= 0) {
        start = s;
        break;
      }
    }
    if (start < 0) break;

    std::vector<int> nodes{start};
    std::vector<int> used{first};
    std::int64_t mu = z[first];
    int prev_edge = first;
    int cur = instance.other_end(first, start);
    nodes.push_back(cur);
    while (!instance.is_terminal(cur)) {
      if (nodes.size() > static_cast<std::size_t>(instance.num_nodes()))
        throw SupportInconsistent("path does not terminate");
      const int arity = star_degree(tree, potential.at[cur].p);
      const int k = comp_at(prev_edge, cur);
      int next_edge = -1;
      for (int k2 = 1; k2 <= arity && next_edge < 0; ++k2) {
        if (k2 == k) continue;
        std::int64_t cap = -1;
        if (arity == 3) {
          const int k3 = 6 - k - k2;
          std::int64_t slack = component_sum(cur, k) + component_sum(cur, k2) - component_sum(cur, k3);
          if (slack <= 0) continue;
          cap = slack / 2;
        }
        for (int e : instance.incident(cur)) {
          if (e == prev_edge || z[e] <= 0 || comp_at(e, cur) != k2) continue;
          next_edge = e;
          mu = std::min(mu, z[e]);
          if (cap >= 0) mu = std::min(mu, cap);
          break;
        }
      }
      if (next_edge < 0) throw SupportInconsistent("no admissible continuation at '" + instance.name(cur) + "'");
      used.push_back(next_edge);
      prev_edge = next_edge;
      cur = instance.other_end(next_edge, cur);
      nodes.push_back(cur);
    }
    if (cur == start || mu <= 0) throw SupportInconsistent("degenerate path");
    for (int e : used) z[e] -= mu;
    found[nodes] += mu;
  }
  for (int e = 0; e < instance.num_edges(); ++e)
    if (z[e] != 0) throw SupportInconsistent("support not exhausted");

  HalfIntegralMultiflow out;
  for (auto& [nodes, lambda2] : found) out.paths.push_back({nodes, lambda2});
  return out;
}

CertificateReport certify(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                          const Potential& potential, const HalfIntegralMultiflow& flow) {
  const Tree& tree = embedding.gamma();
  CertificateReport rep;
  auto fail = [&](std::string why) { rep.violations.push_back(std::move(why)); };

  if (auto why = potential_violation(instance, embedding, potential)) {
    fail("potential: " + *why);
    return rep;
  }
  rep.potential_feasible = true;

  rep.flow_feasible = true;
  rep.o1 = rep.o2 = rep.o3 = true;
  for (const auto& path : flow.paths) {
    const auto& n = path.nodes;
    bool ok = path.lambda2 > 0 && n.size() >= 2 && instance.is_terminal(n.front()) && instance.is_terminal(n.back()) &&
              n.front() != n.back();
    for (std::size_t l = 0; ok && l < n.size(); ++l) {
      if (n[l] < 0 || n[l] >= instance.num_nodes()) ok = false;
      else if (l > 0 && l + 1 < n.size() && instance.is_terminal(n[l])) ok = false;
      else if (l > 0 && instance.find_edge(n[l - 1], n[l]) < 0) ok = false;
    }
    if (ok) {
      std::vector<int> sorted = n;
      std::sort(sorted.begin(), sorted.end());
      ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    if (!ok) {
      rep.flow_feasible = false;
      fail("malformed path");
    }
  }
  if (!rep.flow_feasible) return rep;

  auto node_load = flow.node_load2(instance);
  auto edge_load = flow.edge_load2(instance);
  for (int i = 0; i < instance.num_nodes(); ++i) {
    if (instance.is_terminal(i)) continue;
    if (node_load[i] > 2 * instance.capacity(i)) {
      rep.flow_feasible = false;
      fail("capacity exceeded at '" + instance.name(i) + "'");
    }
    if (potential.at[i].r4 > 0 && node_load[i] != 2 * instance.capacity(i)) {
      rep.o3 = false;
      fail("positive node '" + instance.name(i) + "' not saturated");
    }
  }
  for (int e = 0; e < instance.num_edges(); ++e) {
    if (edge_load[e] == 0) continue;
    const auto& edge = instance.edge(e);
    const auto &x = potential.at[edge.u], &y = potential.at[edge.v];
    if (dist4(tree, x.p, y.p) - x.r4 - y.r4 != 4 * edge.cost) {
      rep.o2 = false;
      fail("flow on a non-tight edge");
    }
  }

  for (int i = 0; i < instance.num_nodes(); ++i)
    if (!instance.is_terminal(i)) rep.dual4 += 2 * instance.capacity(i) * potential.at[i].r4;
  for (const auto& path : flow.paths) {
    const auto& n = path.nodes;
    const int dq = dist4(tree, TreePoint::vertex(embedding.anchor[n.front()]), TreePoint::vertex(embedding.anchor[n.back()]));
    rep.primal4 += path.lambda2 * dq / 2;
    std::int64_t along = 0;
    for (std::size_t l = 0; l + 1 < n.size(); ++l) {
      const auto &x = potential.at[n[l]], &y = potential.at[n[l + 1]];
      const int d = dist4(tree, x.p, y.p);
      const std::int64_t a = instance.edge(instance.find_edge(n[l], n[l + 1])).cost;
      along += d;
      rep.primal4 -= 2 * a * path.lambda2;
      rep.slack4[1] += path.lambda2 * (4 * a - d + x.r4 + y.r4) / 2;
    }
    if (along != dq) {
      rep.o1 = false;
      fail("path distances do not telescope");
    }
    rep.slack4[2] += path.lambda2 * (along - dq) / 2;
  }
  for (int i = 0; i < instance.num_nodes(); ++i)
    if (!instance.is_terminal(i)) rep.slack4[0] += (2 * instance.capacity(i) - node_load[i]) * potential.at[i].r4;
  rep.gap4 = rep.dual4 - rep.primal4;
  if (rep.slack4[0] + rep.slack4[1] + rep.slack4[2] != rep.gap4) fail("slack decomposition does not match the gap");
  if (rep.gap4 != 0) fail("duality gap " + std::to_string(rep.gap4) + "/4");
  return rep;
}

}  // namespace halfflow
