#include "halfflow/potential.hpp"

namespace halfflow {

std::optional<std::string> potential_violation(const MultiflowInstance& instance,
                                               const TreeEmbedding& embedding,
                                               const Potential& potential) {
  const Tree& tree = embedding.gamma();
  if (static_cast<int>(potential.at.size()) != instance.num_nodes()) return "size mismatch";
  for (int i = 0; i < instance.num_nodes(); ++i) {
    const LatticePoint& x = potential.at[i];
    if (!x.in_star_lattice() || x.r4 < 0) return "node '" + instance.name(i) + "' is off the lattice";
    if (instance.is_terminal(i) && (x.r4 != 0 || x.p != TreePoint::vertex(embedding.anchor[i])))
      return "terminal '" + instance.name(i) + "' is not pinned";
  }
  for (const auto& e : instance.edges()) {
    const LatticePoint &x = potential.at[e.u], &y = potential.at[e.v];
    if (dist4(tree, x.p, y.p) - x.r4 - y.r4 > 4 * e.cost)
      return "edge '" + instance.name(e.u) + "'-'" + instance.name(e.v) + "' is violated";
  }
  return std::nullopt;
}

std::optional<std::int64_t> g_value(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                                    const Potential& potential) {
  if (potential_violation(instance, embedding, potential)) return std::nullopt;
  std::int64_t g = 0;
  for (int i = 0; i < instance.num_nodes(); ++i)
    if (!instance.is_terminal(i)) g += instance.capacity(i) * potential.at[i].r4 / 2;
  return g;
}

nlohmann::json tree_point_to_json(const Tree& tree, const TreePoint& p) {
  return {{"edge", {tree.label(p.u), tree.label(p.v)}}, {"q", p.q}};
}

}  // namespace halfflow
