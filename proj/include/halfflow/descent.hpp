#pragma once

// Steepest descent on potentials of a nondegenerate instance: each step
// solves a maximum submodular flow on the double covering network and moves
// to the better of the two halves of its normal minimum cut.

#include <cstdint>
#include <functional>
#include <vector>

#include "halfflow/cover.hpp"
#include "halfflow/extract.hpp"
#include "halfflow/instance.hpp"
#include "halfflow/potential.hpp"

namespace halfflow {

// Vertex of the subtree spanned by the anchors minimizing the largest
// distance to an anchor (lowest index on ties), and that subtree's diameter
// in Gamma units.
int gamma0_center(const MultiflowInstance& instance, const TreeEmbedding& embedding);
int gamma0_diameter(const MultiflowInstance& instance, const TreeEmbedding& embedding);

// Terminals pinned, every nonterminal at (center, d(Gamma_0)).
Potential initial_potential(const MultiflowInstance& instance, const TreeEmbedding& embedding);

// What one round of the descent saw.  `next` is null on the final round.
struct DescentRound {
  int iteration = 0;
  const DoubleCoverNetwork* network = nullptr;
  const SubflowResult* flow = nullptr;
  const NodeSet* normal_cut = nullptr;
  const NodeSet* cut_f = nullptr;
  const NodeSet* cut_i = nullptr;
  const Potential* current = nullptr;
  const Potential* next = nullptr;
  std::int64_t g_current = 0;
  std::int64_t g_next = 0;
};
using DescentObserver = std::function<void(const DescentRound&)>;

struct DescentStats {
  int iterations = 0;
  std::vector<std::int64_t> g_trace;  // g at every visited potential
  long augmentations = 0;
};

struct DescentResult {
  Potential initial;
  Potential potential;
  AdmissibleSupport support;
  HalfIntegralMultiflow multiflow;
  DescentStats stats;
};

DescentResult steepest_descent(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                               const DescentObserver& observer = {});

}  // namespace halfflow
