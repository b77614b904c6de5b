#include "halfflow/cover.hpp"

#include <algorithm>

#include "halfflow/bisubmodular.hpp"
#include "halfflow/errors.hpp"

namespace halfflow {

std::vector<int> CoverGroup::plus_nodes() const {
  std::vector<int> out;
  for (int v : plus)
    if (v >= 0) out.push_back(v);
  return out;
}

std::vector<int> CoverGroup::minus_nodes() const {
  std::vector<int> out;
  for (int v : minus)
    if (v >= 0) out.push_back(v);
  return out;
}

NodeSet DoubleCoverNetwork::source_only() const {
  NodeSet x(num_nodes(), 0);
  x[kSource] = 1;
  return x;
}

nlohmann::json DoubleCoverNetwork::to_json() const {
  nlohmann::json nodes = nlohmann::json::array(), arcs = nlohmann::json::array(), tilde = nlohmann::json::array();
  for (int v = 0; v < num_nodes(); ++v) {
    const char* side = side_[v] == Side::F ? "F" : side_[v] == Side::I ? "I" : "";
    nodes.push_back({{"id", v}, {"label", labels_[v]}, {"bar", complement_[v]}, {"side", side}});
  }
  auto bound = [](std::int64_t c) -> nlohmann::json {
    if (c >= kInfiniteCapacity) return "inf";
    return c;
  };
  for (const auto& a : arcs_)
    arcs.push_back({{"from", a.from}, {"to", a.to}, {"lower", a.lower}, {"upper", bound(a.upper)}});
  for (const auto& a : tilde_.arcs()) tilde.push_back({{"from", a.from}, {"to", a.to}, {"capacity", bound(a.capacity)}});
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : tilde_.blocks()) blocks.push_back({{"nodes", b.nodes}, {"b", b.b}});
  return {{"nodes", nodes}, {"arcs", arcs}, {"tilde_arcs", tilde}, {"blocks", blocks}};
}

std::vector<int> tight_edges(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                             const Potential& potential) {
  if (auto why = potential_violation(instance, embedding, potential)) throw InfeasiblePotential(*why);
  std::vector<int> out;
  for (int e = 0; e < instance.num_edges(); ++e) {
    const auto& edge = instance.edge(e);
    const LatticePoint &x = potential.at[edge.u], &y = potential.at[edge.v];
    if (dist4(embedding.gamma(), x.p, y.p) - x.r4 - y.r4 == 4 * edge.cost) out.push_back(e);
  }
  return out;
}

namespace {

Side side_of(const Tree& tree, const LatticePoint& x, int k) {
  Color c = color(tree, x);
  if (c == Color::None) c = color(tree, {star_step(tree, x.p, k), x.r4 - 2});
  if (c == Color::Black) return Side::F;
  if (c == Color::White) return Side::I;
  throw std::logic_error("uncolored neighbor of an uncolored point");
}

}  // namespace

DoubleCoverNetwork build_cover(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                               const Potential& potential) {
  const Tree& tree = embedding.gamma();
  for (const auto& e : instance.edges())
    if (e.cost <= 0 || e.cost % 2 != 0) throw DegenerateInstance("edge costs must be positive and even");
  std::vector<int> tight = tight_edges(instance, embedding, potential);

  DoubleCoverNetwork net;
  net.potential_ = potential;
  auto add_node = [&](std::string label, int owner) {
    net.labels_.push_back(std::move(label));
    net.owner_.push_back(owner);
    net.side_.push_back(Side::None);
    return static_cast<int>(net.labels_.size()) - 1;
  };
  add_node("a+", -1);
  add_node("a-", -1);

  net.groups_.resize(instance.num_nodes());
  for (int i = 0; i < instance.num_nodes(); ++i) {
    CoverGroup& g = net.groups_[i];
    g.node = i;
    const std::string& name = instance.name(i);
    if (instance.is_terminal(i)) {
      g.role = NodeRole::Terminal;
      g.plus[0] = add_node(name + "+", i);
      g.minus[0] = add_node(name + "-", i);
      continue;
    }
    const LatticePoint& x = potential.at[i];
    if (x.p.is_vertex() && tree.is_open_end(x.p.u)) throw std::logic_error("potential reached a truncated ray end");
    g.arity = star_degree(tree, x.p);
    if (g.arity < 2 || g.arity > 3)
      throw DegenerateInstance("node '" + name + "' sits at a point of Gamma*-degree " + std::to_string(g.arity));
    g.positive = x.r4 > 0;
    g.role = g.arity == 2 ? NodeRole::Flat : g.positive ? NodeRole::PositiveSingular : NodeRole::ZeroSingular;
    if (g.role == NodeRole::PositiveSingular) {
      g.plus[0] = add_node(name + "_0+", i);
      g.minus[0] = add_node(name + "_0-", i);
    }
    for (int k = 1; k <= g.arity; ++k) {
      g.plus[k] = add_node(name + "_" + std::to_string(k) + "+", i);
      g.minus[k] = add_node(name + "_" + std::to_string(k) + "-", i);
    }
    for (int k = 0; k <= g.arity; ++k) {
      if (g.plus[k] < 0) continue;
      Side s = side_of(tree, x, k == 0 ? 1 : k);
      net.side_[g.plus[k]] = s;
      net.side_[g.minus[k]] = s;
    }
  }

  net.complement_.assign(net.num_nodes(), -1);
  net.complement_[DoubleCoverNetwork::kSource] = DoubleCoverNetwork::kSink;
  net.complement_[DoubleCoverNetwork::kSink] = DoubleCoverNetwork::kSource;
  for (const auto& g : net.groups_)
    for (int k = 0; k < 4; ++k)
      if (g.plus[k] >= 0) {
        net.complement_[g.plus[k]] = g.minus[k];
        net.complement_[g.minus[k]] = g.plus[k];
      }

  auto add_arc = [&](int from, int to, std::int64_t lower, std::int64_t upper) {
    net.arcs_.push_back({from, to, lower, upper});
    return static_cast<int>(net.arcs_.size()) - 1;
  };
  for (const auto& g : net.groups_) {
    const std::int64_t c = instance.capacity(g.node);
    switch (g.role) {
      case NodeRole::Terminal:
        add_arc(g.plus[0], g.minus[0], 0, kInfiniteCapacity);
        break;
      case NodeRole::Flat: {
        const std::int64_t lower = g.positive ? c : 0;
        add_arc(g.plus[1], g.minus[2], lower, c);
        add_arc(g.plus[2], g.minus[1], lower, c);
        break;
      }
      case NodeRole::PositiveSingular:
        add_arc(g.plus[0], g.minus[0], 2 * c, 2 * c);
        for (int k = 1; k <= 3; ++k) {
          add_arc(g.plus[k], g.plus[0], 0, c);
          add_arc(g.minus[0], g.minus[k], 0, c);
        }
        break;
      case NodeRole::ZeroSingular:
        break;
    }
  }

  for (int e : tight) {
    const auto& edge = instance.edge(e);
    const LatticePoint &xu = potential.at[edge.u], &xv = potential.at[edge.v];
    TightPair pair{e, 0, 0, -1, -1};
    if (!instance.is_terminal(edge.u)) pair.k_u = component_of(tree, xu.p, xv.p);
    if (!instance.is_terminal(edge.v)) pair.k_v = component_of(tree, xv.p, xu.p);
    const CoverGroup &gu = net.groups_[edge.u], &gv = net.groups_[edge.v];
    const int t = static_cast<int>(net.tight_.size());
    pair.plus_arc = add_arc(gu.minus[pair.k_u], gv.plus[pair.k_v], 0, kInfiniteCapacity);
    pair.minus_arc = add_arc(gv.minus[pair.k_v], gu.plus[pair.k_u], 0, kInfiniteCapacity);
    net.arcs_[pair.plus_arc].tight = t;
    net.arcs_[pair.minus_arc].tight = t;
    net.tight_.push_back(pair);
  }

  net.tilde_ = SubflowNetwork(net.num_nodes(), DoubleCoverNetwork::kSource, DoubleCoverNetwork::kSink);
  for (auto& a : net.arcs_) {
    if (a.lower > 0) {
      a.tilde_out = net.tilde_.add_arc(a.from, DoubleCoverNetwork::kSink, a.lower);
      a.tilde_in = net.tilde_.add_arc(DoubleCoverNetwork::kSource, a.to, a.lower);
      if (a.upper > a.lower) a.tilde_arc = net.tilde_.add_arc(a.from, a.to, a.upper - a.lower);
    } else {
      a.tilde_arc = net.tilde_.add_arc(a.from, a.to, a.upper);
    }
  }
  for (const auto& g : net.groups_) {
    if (g.role != NodeRole::ZeroSingular) continue;
    net.tilde_.add_block({g.plus[1], g.plus[2], g.plus[3], g.minus[1], g.minus[2], g.minus[3]},
                         instance.capacity(g.node));
  }
  net.tilde_.set_complement(net.complement_);
  return net;
}

Circulation procedure_a(const DoubleCoverNetwork& net, const SubflowResult& result) {
  if (result.min_cut != net.source_only()) throw NotOptimalYet("minimal minimum cut is not {a+}");
  Circulation circ;
  circ.flow.assign(net.arcs().size(), 0);
  for (std::size_t a = 0; a < net.arcs().size(); ++a) {
    const CoverArc& arc = net.arcs()[a];
    std::int64_t f = 0;
    if (arc.lower > 0) f += result.flow[arc.tilde_in];
    if (arc.tilde_arc >= 0) f += result.flow[arc.tilde_arc];
    circ.flow[a] = f;
  }
  if (auto why = circulation_violation(net, circ)) throw std::logic_error("procedure_a: " + *why);
  return circ;
}

std::optional<std::string> circulation_violation(const DoubleCoverNetwork& net, const Circulation& circ) {
  if (circ.flow.size() != net.arcs().size()) return "size mismatch";
  std::vector<std::int64_t> excess(net.num_nodes(), 0);
  for (std::size_t a = 0; a < net.arcs().size(); ++a) {
    const CoverArc& arc = net.arcs()[a];
    if (circ.flow[a] < arc.lower || circ.flow[a] > arc.upper)
      return "arc " + net.label(arc.from) + "->" + net.label(arc.to) + " out of bounds";
    excess[arc.to] += circ.flow[a];
    excess[arc.from] -= circ.flow[a];
  }
  const SubflowNetwork& tilde = net.tilde();
  for (const auto& block : tilde.blocks()) {
    BlockVector x{};
    for (int e = 0; e < 6; ++e) x[e] = excess[block.nodes[e]];
    if (!in_base(block.b, x)) return "block excess outside the base polyhedron";
  }
  for (int v = 0; v < net.num_nodes(); ++v)
    if (tilde.block_of(v) < 0 && excess[v] != 0) return "conservation fails at " + net.label(v);
  return std::nullopt;
}

AdmissibleSupport support_zeta(const MultiflowInstance& instance, const DoubleCoverNetwork& net,
                               const Circulation& circ) {
  AdmissibleSupport s;
  s.twice.assign(instance.num_edges(), 0);
  for (const auto& t : net.tight()) s.twice[t.edge] = circ.flow[t.plus_arc] + circ.flow[t.minus_arc];
  return s;
}

std::optional<std::string> admissibility_violation(const MultiflowInstance& instance,
                                                   const TreeEmbedding& embedding, const Potential& potential,
                                                   const AdmissibleSupport& support) {
  const Tree& tree = embedding.gamma();
  if (static_cast<int>(support.twice.size()) != instance.num_edges()) return "size mismatch";
  std::vector<char> is_tight(instance.num_edges(), 0);
  for (int e : tight_edges(instance, embedding, potential)) is_tight[e] = 1;
  for (int e = 0; e < instance.num_edges(); ++e) {
    if (support.twice[e] < 0) return "negative support";
    if (support.twice[e] > 0 && !is_tight[e]) return "support on a non-tight edge";
  }
  for (int i = 0; i < instance.num_nodes(); ++i) {
    if (instance.is_terminal(i)) continue;
    const LatticePoint& x = potential.at[i];
    const int arity = star_degree(tree, x.p);
    std::array<std::int64_t, 4> z{};  // doubled zeta per component
    for (int e : instance.incident(i)) {
      if (support.twice[e] == 0) continue;
      int j = instance.other_end(e, i);
      z[component_of(tree, x.p, potential.at[j].p)] += support.twice[e];
    }
    const std::int64_t c2 = 2 * instance.capacity(i);
    const std::int64_t total = z[1] + z[2] + z[3];
    const std::string who = " at '" + instance.name(i) + "'";
    if (total % 2 != 0) return "non-integral degree" + who;
    if (arity == 2) {
      if (z[1] != z[2] || z[1] > c2) return "flat balance" + who;
    } else if (arity == 3) {
      if (!in_delta_polytope(instance.capacity(i), {z[1], z[2], z[3]})) return "singular polytope" + who;
    } else {
      return "degenerate position" + who;
    }
    if (x.r4 > 0 && total != 2 * c2) return "positive node not saturated" + who;
  }
  return std::nullopt;
}

namespace {

bool contains(const NodeSet& x, int v) { return v >= 0 && x[v]; }

// Exact set equality of x restricted to the group against a listed subset.
bool restricted_equals(const CoverGroup& g, const NodeSet& x, const std::vector<int>& want) {
  for (int k = 0; k < 4; ++k)
    for (int v : {g.plus[k], g.minus[k]}) {
      if (v < 0) continue;
      bool in_want = std::find(want.begin(), want.end(), v) != want.end();
      if (static_cast<bool>(x[v]) != in_want) return false;
    }
  return true;
}

std::vector<int> minus_all_but(const CoverGroup& g, int k) {
  std::vector<int> out;
  for (int j = 0; j < 4; ++j)
    if (g.minus[j] >= 0 && j != k) out.push_back(g.minus[j]);
  return out;
}

}  // namespace

std::optional<CutPattern> group_pattern(const CoverGroup& g, const NodeSet& x) {
  using K = CutPattern::Kind;
  if (restricted_equals(g, x, {})) return CutPattern{K::Stay, 0};
  if (g.role == NodeRole::Terminal) return std::nullopt;
  if (restricted_equals(g, x, g.plus_nodes())) return CutPattern{K::Up, 0};
  if (restricted_equals(g, x, g.minus_nodes())) return CutPattern{K::Down, 0};
  for (int k = 1; k <= g.arity; ++k) {
    if (restricted_equals(g, x, {g.plus[k]})) return CutPattern{K::PlusOne, k};
    std::vector<int> rest = minus_all_but(g, k);
    if (restricted_equals(g, x, rest)) return CutPattern{K::MinusAllBut, k};
    rest.push_back(g.plus[k]);
    if (restricted_equals(g, x, rest)) return CutPattern{K::Move, k};
  }
  return std::nullopt;
}

LatticePoint pattern_move(const Tree& tree, const LatticePoint& x, const CutPattern& pattern) {
  using K = CutPattern::Kind;
  switch (pattern.kind) {
    case K::Stay: return x;
    case K::PlusOne: return {star_step(tree, x.p, pattern.k), x.r4 + 2};
    case K::MinusAllBut: return {star_step(tree, x.p, pattern.k), x.r4 - 2};
    case K::Move:
      if (!x.p.is_vertex()) throw PatternError("move pattern at a midpoint");
      return {vertex_step(tree, x.p, pattern.k), x.r4};
    case K::Up: return {x.p, x.r4 + 4};
    case K::Down: return {x.p, x.r4 - 4};
  }
  throw PatternError("unknown pattern");
}

std::optional<std::string> normality_violation(const DoubleCoverNetwork& net, const NodeSet& x) {
  if (!x[DoubleCoverNetwork::kSource] || x[DoubleCoverNetwork::kSink]) return "not an (a+,a-)-cut";
  for (int v = 0; v < net.num_nodes(); ++v)
    if (x[v] && x[net.complement(v)]) return "not a transversal at " + net.label(v);
  for (const auto& g : net.groups()) {
    if (g.role == NodeRole::Terminal) {
      if (x[g.plus[0]] || x[g.minus[0]]) return "cut meets terminal " + net.label(g.plus[0]);
      continue;
    }
    auto p = group_pattern(g, x);
    using K = CutPattern::Kind;
    if (!p) return "group of " + net.label(g.plus[1]) + " matches no pattern";
    if (!g.positive && (p->kind == K::Down || p->kind == K::MinusAllBut))
      return "zero node " + net.label(g.plus[1]) + " has a lowering pattern";
  }
  return std::nullopt;
}

NodeSet procedure_b(const DoubleCoverNetwork& net, const NodeSet& min_cut) {
  NodeSet x = min_cut;
  for (const auto& g : net.groups()) {
    if (g.role != NodeRole::PositiveSingular && g.role != NodeRole::ZeroSingular) continue;
    int branch = 0;
    for (int k = 1; k <= 3; ++k) branch += contains(x, g.plus[k]) ? 1 : 0;
    if (branch >= 2 || contains(x, g.plus[0]))
      for (int v : g.plus_nodes()) x[v] = 1;
  }
  if (auto why = normality_violation(net, x)) throw NormalizationFailed(*why);
  auto before = cut_capacity(net.tilde(), min_cut), after = cut_capacity(net.tilde(), x);
  if (before != after) throw NormalizationFailed("normalization changed the cut capacity");
  return x;
}

std::pair<NodeSet, NodeSet> split_fi(const DoubleCoverNetwork& net, const NodeSet& x) {
  NodeSet f(net.num_nodes(), 0), i(net.num_nodes(), 0);
  f[DoubleCoverNetwork::kSource] = i[DoubleCoverNetwork::kSource] = 1;
  for (int v = 0; v < net.num_nodes(); ++v) {
    if (!x[v]) continue;
    if (net.side(v) == Side::F) f[v] = 1;
    if (net.side(v) == Side::I) i[v] = 1;
  }
  return {f, i};
}

Potential apply_cut(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                    const DoubleCoverNetwork& net, const NodeSet& y) {
  Potential out = net.potential();
  for (const auto& g : net.groups()) {
    auto pattern = group_pattern(g, y);
    if (!pattern) throw PatternError("cut matches no pattern at '" + instance.name(g.node) + "'");
    if (g.role == NodeRole::Terminal) continue;
    out.at[g.node] = pattern_move(embedding.gamma(), out.at[g.node], *pattern);
  }
  return out;
}

std::int64_t g_delta(const DoubleCoverNetwork& net, const NodeSet& y) {
  auto cut = cut_capacity(net.tilde(), y);
  if (!cut) throw InfiniteCut("cut has infinite capacity");
  return *cut - *cut_capacity(net.tilde(), net.source_only());
}

}  // namespace halfflow
