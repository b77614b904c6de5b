#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "halfflow/instance.hpp"
#include "halfflow/tree.hpp"

namespace halfflow {

// One lattice point per instance node.
struct Potential {
  std::vector<LatticePoint> at;

  bool operator==(const Potential&) const = default;
};

// First violated condition among: lattice membership and r >= 0, the edge
// inequality d(p_i, p_j) - r_i - r_j <= a_ij, and terminal pinning.
std::optional<std::string> potential_violation(const MultiflowInstance& instance,
                                               const TreeEmbedding& embedding,
                                               const Potential& potential);

// Sum of 2 c(i) r(i); nullopt (infinity) when the potential is infeasible.
std::optional<std::int64_t> g_value(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                                    const Potential& potential);

nlohmann::json tree_point_to_json(const Tree& tree, const TreePoint& p);

}  // namespace halfflow
