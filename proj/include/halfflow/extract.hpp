#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "halfflow/cover.hpp"
#include "halfflow/instance.hpp"
#include "halfflow/potential.hpp"

namespace halfflow {

struct FlowPath {
  std::vector<int> nodes;  // terminal, nonterminals..., terminal
  std::int64_t lambda2;    // twice the flow on the path

  auto operator<=>(const FlowPath&) const = default;
};

// Multiflow with half-integral path values, stored doubled.
struct HalfIntegralMultiflow {
  std::vector<FlowPath> paths;  // distinct paths in lexicographic order

  std::int64_t value2() const;
  std::vector<std::int64_t> node_load2(const MultiflowInstance& instance) const;
  std::vector<std::int64_t> edge_load2(const MultiflowInstance& instance) const;
};

// Path decomposition of an admissible support.  Throws SupportInconsistent.
HalfIntegralMultiflow extract_multiflow(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                                        const Potential& potential, const AdmissibleSupport& support);

// Complementary slackness report, all quantities in quarter-units
// (four times their true value).
struct CertificateReport {
  bool potential_feasible = false;
  bool flow_feasible = false;
  bool o1 = false;  // path distances telescope to d(q_s, q_t)
  bool o2 = false;  // flow only on tight edges
  bool o3 = false;  // positive nodes saturated
  std::int64_t dual4 = 0;    // 4 * sum 2 c(i) r(i)
  std::int64_t primal4 = 0;  // 4 * (sum lambda d(q_s,q_t) - sum a(e) f(e))
  std::int64_t gap4 = 0;
  std::int64_t slack4[3] = {0, 0, 0};  // node, edge and path slack terms; they sum to gap4
  std::vector<std::string> violations;

  bool optimal() const { return potential_feasible && flow_feasible && o1 && o2 && o3 && gap4 == 0; }
};

CertificateReport certify(const MultiflowInstance& instance, const TreeEmbedding& embedding,
                          const Potential& potential, const HalfIntegralMultiflow& flow);

}  // namespace halfflow
