#pragma once

// End-to-end solve: perturb, descend, extract, recover the star dual, certify
// both problems and round the dual into a node-multiway cut.

#include <string>

#include <nlohmann/json.hpp>

#include "halfflow/apps.hpp"
#include "halfflow/descent.hpp"
#include "halfflow/extract.hpp"
#include "halfflow/instance.hpp"
#include "halfflow/reduce.hpp"

namespace halfflow {

struct SolveReport {
  TreeEmbedding star;
  Potential dual;                       // optimal star potential
  HalfIntegralMultiflow multiflow;      // maximum multiflow
  MultiwayCut cut;
  DescentStats stats;
  int gamma0_diameter = 0;              // of the perturbed embedding
  int band = -1;
  CertificateReport perturbed_certificate;
  CertificateReport certificate;        // against the original star problem
  bool cut_valid = false;

  bool verified() const {
    return perturbed_certificate.optimal() && certificate.optimal() && cut_valid &&
           cut.capacity <= multiflow.value2();
  }
};

SolveReport solve_instance(const MultiflowInstance& instance);

struct OutputOptions {
  bool emit_cut = false;
  bool emit_dual = false;
  bool stats = false;
};

// Deterministic JSON rendering of a solve.
nlohmann::json report_to_json(const MultiflowInstance& instance, const SolveReport& report,
                              const OutputOptions& options);

}  // namespace halfflow
