#pragma once

#include <cstdint>
#include <vector>

#include "halfflow/instance.hpp"
#include "halfflow/potential.hpp"

namespace halfflow {

struct MultiwayCut {
  std::vector<int> nodes;  // increasing node index
  std::int64_t capacity = 0;
};

// Nonterminals with r >= 1/2.  For a half-integral optimal potential the
// capacity is at most the doubled flow value.
MultiwayCut round_cut(const MultiflowInstance& instance, const Potential& potential);

// True iff no terminal reaches another terminal in G - nodes.
bool verify_cut(const MultiflowInstance& instance, const std::vector<int>& nodes);

}  // namespace halfflow
