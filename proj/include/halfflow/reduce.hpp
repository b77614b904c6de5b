#pragma once

// Reduction of the original problem (zero costs, star embedding) to a
// nondegenerate one: unit-free cost 2 on every edge, and a trivalent tree
// Sigma whose leaves u_s carry rays P_s with the terminal q_s at distance
// (2m+1)D from u_s.  Rays are materialized finitely; their far ends are
// marked open and must never be reached.

#include <memory>
#include <vector>

#include "halfflow/instance.hpp"
#include "halfflow/potential.hpp"
#include "halfflow/tree.hpp"

namespace halfflow {

struct SigmaTree {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> leaves;  // one per terminal, in terminal order
  int diameter = 0;
};

// Balanced trivalent tree with k >= 2 leaves.
SigmaTree build_sigma(int k);

struct PerturbedProblem {
  MultiflowInstance instance;  // original graph, all costs 2
  TreeEmbedding embedding;
  int sigma_diameter = 0;                 // D
  int anchor_offset = 0;                  // (2m+1)D
  int gamma0_diameter = 0;                // 2(2m+1)D + D
  std::vector<std::vector<int>> ray;      // ray[s][t]: vertex at distance t from u_s
  std::vector<int> ray_of;                // per vertex: terminal rank, -1 inside Sigma proper
  std::vector<int> position;              // per vertex: distance from u_s along its ray
};

PerturbedProblem perturb(const MultiflowInstance& original);

// Whether edge e of the instance hits band k of the rays under a potential.
bool hit_test(const PerturbedProblem& problem, const Potential& potential, int edge, int band);

struct Recovery {
  Potential potential;      // on the star embedding of the original instance
  int band = -1;            // clean band used
};

// Star potential from an optimal potential of the perturbed problem.
// Throws NoCleanBand.
Recovery recover(const MultiflowInstance& original, const TreeEmbedding& star, const PerturbedProblem& problem,
                 const Potential& perturbed);

}  // namespace halfflow
