#pragma once

// The double covering network of a potential and the translation between
// its cuts and local moves of the potential.
//
// Node classes of a nonterminal i at (p, r):
//   flat      p has two Gamma*-neighbors; nodes i_1+-, i_2+-.
//   singular  p is a vertex of degree 3; nodes i_1+- .. i_3+-, plus a hub
//             i_0+- when r > 0.  A zero singular node is a Delta*_{c(i)} block.
// A node is positive if r > 0 and zero otherwise.  Terminal s has s+-.
//
// The working network D~ adds a source a+ and sink a-; every arc with a
// positive lower bound l (v+ -> u-) is replaced by v+ -> a- and a+ -> u-,
// both of capacity l.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "halfflow/instance.hpp"
#include "halfflow/potential.hpp"
#include "halfflow/subflow.hpp"

namespace halfflow {

enum class NodeRole { Terminal, Flat, PositiveSingular, ZeroSingular };
enum class Side : char { None, F, I };

struct CoverGroup {
  int node = -1;
  NodeRole role = NodeRole::Terminal;
  bool positive = false;
  int arity = 0;  // Gamma*-degree of p(i); 0 for terminals
  // Index 0: hub (positive singular) or the terminal itself; 1..arity: components.
  std::array<int, 4> plus{-1, -1, -1, -1};
  std::array<int, 4> minus{-1, -1, -1, -1};

  std::vector<int> plus_nodes() const;   // U_i+ (hub included)
  std::vector<int> minus_nodes() const;  // U_i- (hub included)
};

// Arc of the lower/upper bounded network D.
struct CoverArc {
  int from;
  int to;
  std::int64_t lower;
  std::int64_t upper;    // kInfiniteCapacity when unbounded
  int tight = -1;        // index into tight pairs for e+- arcs
  int tilde_arc = -1;    // copy in D~ (arcs without lower bound)
  int tilde_out = -1;    // from -> a- in D~ (lower-bounded arcs)
  int tilde_in = -1;     // a+ -> to in D~ (lower-bounded arcs)
};

// Tight edge ij with i = edge.u, j = edge.v, at components k_i, k_j.
struct TightPair {
  int edge;
  int k_u;  // 0 for a terminal endpoint
  int k_v;
  int plus_arc;   // e+ = u_k- -> v_k'+
  int minus_arc;  // e- = v_k'- -> u_k+
};

class DoubleCoverNetwork {
 public:
  static constexpr int kSource = 0;  // a+
  static constexpr int kSink = 1;    // a-

  int num_nodes() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_[v]; }
  int complement(int v) const { return complement_[v]; }
  Side side(int v) const { return side_[v]; }
  int owner(int v) const { return owner_[v]; }  // instance node, -1 for a+-
  const std::vector<CoverGroup>& groups() const { return groups_; }
  const std::vector<CoverArc>& arcs() const { return arcs_; }
  const std::vector<TightPair>& tight() const { return tight_; }
  const SubflowNetwork& tilde() const { return tilde_; }
  const Potential& potential() const { return potential_; }
  NodeSet source_only() const;

  nlohmann::json to_json() const;

 private:
  friend DoubleCoverNetwork build_cover(const MultiflowInstance&, const TreeEmbedding&, const Potential&);

  std::vector<std::string> labels_;
  std::vector<int> complement_;
  std::vector<Side> side_;
  std::vector<int> owner_;
  std::vector<CoverGroup> groups_;
  std::vector<CoverArc> arcs_;
  std::vector<TightPair> tight_;
  SubflowNetwork tilde_;
  Potential potential_;
};

// Edges with d(p_i, p_j) - r_i - r_j = a_ij.  Throws InfeasiblePotential.
std::vector<int> tight_edges(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                             const Potential& potential);

// Throws InfeasiblePotential, or DegenerateInstance when some cost is not a
// positive even integer or a nonterminal sits where Gamma* has degree other
// than 2 or 3.
DoubleCoverNetwork build_cover(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                               const Potential& potential);

// Circulation of D, one value per D arc.
struct Circulation {
  std::vector<std::int64_t> flow;
};

// Circulation from a maximum flow of D~ whose minimal minimum cut is {a+}.
// Throws NotOptimalYet otherwise.
Circulation procedure_a(const DoubleCoverNetwork& net, const SubflowResult& result);
std::optional<std::string> circulation_violation(const DoubleCoverNetwork& net, const Circulation& circulation);

// Doubled edge support: twice[e] = 2 zeta(e) = phi(e+) + phi(e-), zero off tight edges.
struct AdmissibleSupport {
  std::vector<std::int64_t> twice;
};
AdmissibleSupport support_zeta(const MultiflowInstance& instance, const DoubleCoverNetwork& net,
                               const Circulation& circulation);
// Independent check of the admissibility conditions for a potential.
std::optional<std::string> admissibility_violation(const MultiflowInstance& instance,
                                                   const TreeEmbedding& embedding, const Potential& potential,
                                                   const AdmissibleSupport& support);

// Normalizes the minimal minimum cut.  Throws NormalizationFailed if the
// result is not normal or changes the cut capacity.
NodeSet procedure_b(const DoubleCoverNetwork& net, const NodeSet& min_cut);
std::optional<std::string> normality_violation(const DoubleCoverNetwork& net, const NodeSet& x);

// {a+} plus the part of X in U_F, and {a+} plus the part in U_I.
std::pair<NodeSet, NodeSet> split_fi(const DoubleCoverNetwork& net, const NodeSet& x);

// Intersection pattern of a cut with one group.
struct CutPattern {
  enum class Kind { Stay, PlusOne, MinusAllBut, Move, Up, Down };
  Kind kind = Kind::Stay;
  int k = 0;
  bool operator==(const CutPattern&) const = default;
};
std::optional<CutPattern> group_pattern(const CoverGroup& group, const NodeSet& x);
// Lattice point reached from x by a pattern; throws PatternError if undefined.
LatticePoint pattern_move(const Tree& tree, const LatticePoint& x, const CutPattern& pattern);

// The potential (p, r)^Y.  Throws PatternError when some group matches no pattern.
Potential apply_cut(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                    const DoubleCoverNetwork& net, const NodeSet& y);

// c~(delta Y) + rho(Y - a+) - c~(delta {a+}).  Throws InfiniteCut.
std::int64_t g_delta(const DoubleCoverNetwork& net, const NodeSet& y);

}  // namespace halfflow
