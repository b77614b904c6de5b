#include "halfflow/solver.hpp"

namespace halfflow {

SolveReport solve_instance(const MultiflowInstance& instance) {
  SolveReport rep;
  PerturbedProblem perturbed = perturb(instance);
  DescentResult descent = steepest_descent(perturbed.instance, perturbed.embedding);
  rep.multiflow = std::move(descent.multiflow);
  rep.stats = std::move(descent.stats);
  rep.gamma0_diameter = perturbed.gamma0_diameter;
  rep.perturbed_certificate = certify(perturbed.instance, perturbed.embedding, descent.potential, rep.multiflow);

  rep.star = star_embedding(instance);
  Recovery recovered = recover(instance, rep.star, perturbed, descent.potential);
  rep.dual = std::move(recovered.potential);
  rep.band = recovered.band;
  rep.certificate = certify(instance, rep.star, rep.dual, rep.multiflow);

  rep.cut = round_cut(instance, rep.dual);
  rep.cut_valid = verify_cut(instance, rep.cut.nodes);
  return rep;
}

nlohmann::json report_to_json(const MultiflowInstance& instance, const SolveReport& report,
                              const OutputOptions& options) {
  nlohmann::json out;
  out["value2"] = report.multiflow.value2();
  nlohmann::json paths = nlohmann::json::array();
  for (const auto& p : report.multiflow.paths) {
    nlohmann::json nodes = nlohmann::json::array();
    for (int v : p.nodes) nodes.push_back(instance.name(v));
    paths.push_back({{"nodes", nodes}, {"lambda2", p.lambda2}});
  }
  out["paths"] = paths;
  if (options.emit_dual) {
    nlohmann::json p = nlohmann::json::object(), r4 = nlohmann::json::object();
    for (int i = 0; i < instance.num_nodes(); ++i) {
      p[instance.name(i)] = tree_point_to_json(report.star.gamma(), report.dual.at[i].p);
      r4[instance.name(i)] = report.dual.at[i].r4;
    }
    out["dual"] = {{"p", p}, {"r4", r4}};
  }
  if (options.emit_cut) {
    nlohmann::json nodes = nlohmann::json::array();
    for (int v : report.cut.nodes) nodes.push_back(instance.name(v));
    out["multiway_cut"] = nodes;
    out["multiway_cut_capacity"] = report.cut.capacity;
  }
  if (options.stats) {
    out["stats"] = {{"iterations", report.stats.iterations},
                    {"g_trace", report.stats.g_trace},
                    {"augmentations", report.stats.augmentations},
                    {"gamma0_diameter", report.gamma0_diameter},
                    {"band", report.band}};
  }
  return out;
}

}  // namespace halfflow
