#pragma once

// Brute-force reference computations for small inputs.  None of these share
// code paths with the descent solver beyond the basic geometry.

#include <cstdint>

#include "halfflow/instance.hpp"
#include "halfflow/potential.hpp"
#include "halfflow/subflow.hpp"

namespace halfflow {

// Minimum of sum 2 c(i) r(i) over star potentials with r <= 2, i.e. twice
// the maximum flow value.  Any node with r >= 1 may move to (v0, 1), so the
// box contains an optimum.  Throws TooLarge when (3+5k)^(n-k) > 1e8.
std::int64_t dual_enum(const MultiflowInstance& instance);

// Maximum flow value by enumerating all integral arc flows.  Throws TooLarge
// for more than 10 arcs, unbounded arcs, or more than 4^10 flow vectors.
std::int64_t flow_enum(const SubflowNetwork& network);

// Minimum cut capacity by enumerating all source-sink cuts (<= 20 free nodes).
std::int64_t cut_enum(const SubflowNetwork& network);

struct ConvexityReport {
  long pairs = 0;
  long violations = 0;
};

// Samples feasible potential pairs x, y on the subtree spanned by the anchors
// and checks g(x) + g(y) >= g(floor((x+y)/2)) + g(ceil((x+y)/2)).
ConvexityReport convexity_probe(const MultiflowInstance& instance, const TreeEmbedding& embedding, long pairs,
                                std::uint64_t seed);

struct OptimumSearch {
  std::int64_t g_min = 0;
  int d_inf4 = 0;  // min over optimal potentials of the distance from `from`
  long visited = 0;
};

// Exhaustive search over potentials with p in Gamma_0* and r <= d(Gamma_0).
// A feasible `incumbent` seeds both bounds and counts as a candidate optimum.
// Throws TooLarge once `work_limit` search nodes are exceeded.
OptimumSearch search_optimum(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                             const Potential& from, long work_limit, const Potential* incumbent = nullptr);

// All Gamma* points of the subtree spanned by the anchors, in increasing order.
std::vector<TreePoint> gamma0_star_points(const MultiflowInstance& instance, const TreeEmbedding& embedding);

}  // namespace halfflow
