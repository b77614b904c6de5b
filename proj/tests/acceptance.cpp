// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "halfflow/bisubmodular.hpp"
#include "halfflow/cover.hpp"
#include "halfflow/descent.hpp"
#include "halfflow/errors.hpp"
#include "halfflow/oracle.hpp"
#include "halfflow/reduce.hpp"
#include "halfflow/solver.hpp"
#include "halfflow/subflow.hpp"
#include "support.hpp"

namespace hf = halfflow;
namespace ht = halfflow::testing;

namespace {

struct Line {
  int id;
  bool pass;
  std::string detail;
};

std::vector<Line> lines;

void report(int id, bool pass, const std::string& detail) {
  lines.push_back({id, pass, detail});
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Run {
  hf::MultiflowInstance instance;
  hf::SolveReport report;
  double seconds;
};

// Instances exercised by criteria 1, 2, 3, 9 and 10.
std::vector<hf::MultiflowInstance> random_corpus() {
  std::vector<hf::MultiflowInstance> out;
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 220; ++t) out.push_back(ht::random_instance(rng));
  // Extra small instances so that the exhaustive dual is always reachable.
  ht::RandomShape small;
  small.max_nodes = 9;
  small.max_edges = 14;
  small.max_free = 5;
  for (int t = 0; t < 80; ++t) out.push_back(ht::random_instance(rng, small));
  return out;
}

std::vector<hf::MultiflowInstance> fixture_corpus() {
  std::vector<hf::MultiflowInstance> out;
  for (const char* name : {"k13.json", "triangle.json", "disconnected.json", "inner_triangle.json"})
    out.push_back(ht::load_fixture(name));
  return out;
}

bool small_enough_for_dual_enum(const hf::MultiflowInstance& inst) {
  return inst.num_nodes() - inst.num_terminals() <= 5;
}

// 1. Strong duality with an exact zero gap and a per-instance time bound.
void criterion_strong_duality(const std::vector<Run>& runs) {
  int gap_fail = 0, slow = 0, random_runs = 0;
  double worst = 0;
  for (const auto& run : runs) {
    ++random_runs;
    const auto& c = run.report.certificate;
    const auto& pc = run.report.perturbed_certificate;
    if (!c.optimal() || !pc.optimal() || c.gap4 != 0 || pc.gap4 != 0 ||
        c.slack4[0] + c.slack4[1] + c.slack4[2] != c.gap4)
      ++gap_fail;
    worst = std::max(worst, run.seconds);
    if (run.seconds >= 1.0) ++slow;
  }
  std::ostringstream d;
  d << runs.size() << " instances, nonzero gaps " << gap_fail << ", over 1 s " << slow << ", slowest " << worst
    << " s";
  report(1, runs.size() >= 200 && gap_fail == 0 && slow == 0, d.str());
}

// 2. Equality with the exhaustive dual on every instance it can handle.
void criterion_oracle(const std::vector<Run>& runs, const std::vector<Run>& fixtures) {
  int checked = 0, mismatches = 0;
  bool k13 = false, tri = false;
  auto check = [&](const Run& run) {
    if (!small_enough_for_dual_enum(run.instance)) return;
    ++checked;
    const std::int64_t oracle = hf::dual_enum(run.instance);
    if (oracle != run.report.multiflow.value2()) ++mismatches;
    return;
  };
  for (const auto& r : runs) check(r);
  for (const auto& r : fixtures) check(r);
  k13 = hf::dual_enum(fixtures[0].instance) == 2 && fixtures[0].report.multiflow.value2() == 2;
  tri = hf::dual_enum(fixtures[1].instance) == 6 && fixtures[1].report.multiflow.value2() == 6;
  std::ostringstream d;
  d << checked << " instances checked, mismatches " << mismatches << ", star fixture " << (k13 ? "ok" : "bad")
    << ", triangle fixture " << (tri ? "ok" : "bad");
  report(2, checked >= 50 && mismatches == 0 && k13 && tri, d.str());
}

// 3. Half-integrality of every path value and radius.
void criterion_half_integrality(const std::vector<Run>& runs) {
  long violations = 0, radii = 0, paths = 0;
  for (const auto& run : runs) {
    for (const auto& p : run.report.multiflow.paths) {
      ++paths;
      if (p.lambda2 <= 0) ++violations;
    }
    for (const auto& x : run.report.dual.at) {
      ++radii;
      if (x.r4 % 2 != 0 || !x.in_star_lattice()) ++violations;
    }
    auto load = run.report.multiflow.node_load2(run.instance);
    for (int v = 0; v < run.instance.num_nodes(); ++v)
      if (!run.instance.is_terminal(v) && load[v] > 2 * run.instance.capacity(v)) ++violations;
  }
  std::ostringstream d;
  d << runs.size() << " runs, " << paths << " paths, " << radii << " radii, violations " << violations;
  report(3, violations == 0, d.str());
}

// 4. Submodularity and normal-extension identities of Delta*_b.
void criterion_delta_star() {
  auto t0 = std::chrono::steady_clock::now();
  long violations = 0;
  for (std::int64_t b : {0, 1, 2, 7}) {
    if (hf::delta_star(b, 0) != 0) ++violations;
    for (unsigned x = 0; x < 64; ++x)
      for (unsigned y = 0; y < 64; ++y) {
        const auto sx = static_cast<hf::SignedSubset>(x), sy = static_cast<hf::SignedSubset>(y);
        if (hf::delta_star(b, sx) + hf::delta_star(b, sy) <
            hf::delta_star(b, sx & sy) + hf::delta_star(b, sx | sy))
          ++violations;
      }
    for (unsigned y = 0; y < 8; ++y)
      for (unsigned z = 0; z < 8; ++z) {
        if (y & z) continue;
        const auto x = static_cast<hf::SignedSubset>(y | (z << 3));
        if (hf::delta_star(b, x) != hf::delta_b(b, y, z)) ++violations;
      }
    for (unsigned x = 0; x < 64; ++x) {
      const unsigned plus = x & 7, minus = (x >> 3) & 7;
      const unsigned both = plus & minus, none = 7 & ~(plus | minus);
      const auto under = static_cast<hf::SignedSubset>(x & ~(both | (both << 3)));
      const auto over = static_cast<hf::SignedSubset>(x | none | (none << 3));
      const auto sx = static_cast<hf::SignedSubset>(x);
      if (hf::delta_star(b, over) != hf::delta_star(b, under) || hf::delta_star(b, under) > hf::delta_star(b, sx))
        ++violations;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "b in {0,1,2,7}, violations " << violations << ", " << secs << " s";
  report(4, violations == 0 && secs < 0.1, d.str());
}

// 5. Projection of the base polyhedron onto the bisubmodular polyhedron.
void criterion_projection() {
  long violations = 0, bases = 0, lifted = 0;
  for (std::int64_t b : {1, 2}) {
    const int lo = static_cast<int>(-2 * b), hi = static_cast<int>(2 * b);
    std::set<std::array<std::int64_t, 3>> images;
    hf::BlockVector x{};
    std::function<void(int)> walk = [&](int e) {
      if (e == 6) {
        if (!hf::in_base(b, x)) return;
        ++bases;
        auto z = hf::project_phi_doubled(x);
        if (!hf::in_delta_polytope(b, z)) ++violations;
        images.insert(z);
        return;
      }
      for (int v = lo; v <= hi; ++v) {
        x[e] = v;
        walk(e + 1);
      }
    };
    walk(0);
    for (int z1 = 0; z1 <= b; ++z1)
      for (int z2 = 0; z2 <= b; ++z2)
        for (int z3 = 0; z3 <= b; ++z3) {
          std::array<std::int64_t, 3> zd{2 * z1, 2 * z2, 2 * z3};
          if (!hf::in_delta_polytope(b, zd)) continue;
          ++lifted;
          if (!images.count(zd)) ++violations;
        }
  }
  std::ostringstream d;
  d << bases << " base vectors projected, " << lifted << " integer points lifted, violations " << violations;
  report(5, violations == 0 && bases > 0, d.str());
}

// Random bounded network for criterion 6.  With `with_block`, six nodes form
// a Delta*_b block.
hf::SubflowNetwork random_network(std::mt19937_64& rng, bool with_block) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = with_block ? 8 : pick(3, 7);
  hf::SubflowNetwork net(n, 0, 1);
  if (with_block) net.add_block({2, 3, 4, 5, 6, 7}, pick(0, 2));
  const int arcs = pick(with_block ? 6 : 3, with_block ? 10 : 9);
  for (int a = 0; a < arcs; ++a) {
    int u = pick(0, n - 1), v = pick(0, n - 1);
    if (u == v || v == 0 || u == 1) {
      --a;
      continue;
    }
    net.add_arc(u, v, pick(1, 3));
  }
  return net;
}

// Residual reachability from the source, recomputed independently of the solver.
hf::NodeSet residual_reach(const hf::SubflowNetwork& net, const hf::SubflowResult& res) {
  const int n = net.num_nodes();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t a = 0; a < net.arcs().size(); ++a) {
    const auto& arc = net.arcs()[a];
    if (res.flow[a] < arc.capacity) adj[arc.from].push_back(arc.to);
    if (res.flow[a] > 0) adj[arc.to].push_back(arc.from);
  }
  for (const auto& block : net.blocks()) {
    hf::BlockVector x{};
    for (int e = 0; e < 6; ++e) x[e] = res.excess[block.nodes[e]];
    // Passing flow through the block from u to v raises the excess at u and lowers it at v.
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v)
        if (u != v && hf::exchange_capacity(block.b, x, u, v) > 0) adj[block.nodes[u]].push_back(block.nodes[v]);
  }
  hf::NodeSet seen(n, 0);
  std::deque<int> queue{net.source()};
  seen[net.source()] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
  }
  return seen;
}

// 6. Maximum submodular flow against exhaustive flow and cut enumeration.
void criterion_subflow(const std::vector<hf::MultiflowInstance>& cover_sources) {
  std::mt19937_64 rng(77);
  int networks = 0, mismatches = 0, reach_fail = 0, minimal_fail = 0;
  for (int t = 0; t < 80; ++t) {
    const hf::SubflowNetwork net = random_network(rng, t % 2 == 1);
    const hf::SubflowResult res = hf::max_subflow(net);
    ++networks;
    const std::int64_t fe = hf::flow_enum(net), ce = hf::cut_enum(net);
    auto cap = hf::cut_capacity(net, res.min_cut);
    if (res.value != fe || res.value != ce || !cap || *cap != res.value) ++mismatches;
    if (residual_reach(net, res) != res.min_cut) ++reach_fail;
    // The returned cut is contained in every minimum cut.
    std::vector<int> free_nodes;
    for (int v = 0; v < net.num_nodes(); ++v)
      if (v != net.source() && v != net.sink()) free_nodes.push_back(v);
    for (std::uint32_t mask = 0; mask < (1u << free_nodes.size()); ++mask) {
      hf::NodeSet x(net.num_nodes(), 0);
      x[net.source()] = 1;
      for (std::size_t i = 0; i < free_nodes.size(); ++i)
        if (mask & (1u << i)) x[free_nodes[i]] = 1;
      auto c = hf::cut_capacity(net, x);
      if (!c || *c != res.value) continue;
      for (int v = 0; v < net.num_nodes(); ++v)
        if (res.min_cut[v] && !x[v]) {
          ++minimal_fail;
          mask = ~0u - 1;
          break;
        }
    }
  }
  // Skew-symmetric cover networks met along actual descents.
  long covers = 0, transversal_fail = 0, cover_cap_fail = 0;
  for (const auto& inst : cover_sources) {
    auto pr = hf::perturb(inst);
    hf::steepest_descent(pr.instance, pr.embedding, [&](const hf::DescentRound& round) {
      ++covers;
      const auto& tilde = round.network->tilde();
      if (!hf::verify_min_cut_transversal(tilde, round.flow->min_cut)) ++transversal_fail;
      auto cap = hf::cut_capacity(tilde, round.flow->min_cut);
      if (!cap || *cap != round.flow->value) ++cover_cap_fail;
      if (residual_reach(tilde, *round.flow) != round.flow->min_cut) ++reach_fail;
    });
  }
  std::ostringstream d;
  d << networks << " random networks: value mismatches " << mismatches << ", reachability failures " << reach_fail
    << ", non-minimal cuts " << minimal_fail << "; " << covers << " cover networks: non-transversal cuts "
    << transversal_fail << ", cut/value mismatches " << cover_cap_fail;
  report(6, networks >= 50 && mismatches == 0 && reach_fail == 0 && minimal_fail == 0 && transversal_fail == 0 &&
                cover_cap_fail == 0 && covers > 0,
         d.str());
}

// 7. Iteration count against the distance to the nearest optimum and d(Gamma_0).
void criterion_iterations(const std::vector<hf::MultiflowInstance>& instances) {
  int checked = 0, skipped = 0, geodesic_fail = 0, diameter_fail = 0, value_fail = 0;
  std::ostringstream worst;
  for (const auto& inst : instances) {
    if (!small_enough_for_dual_enum(inst)) continue;
    auto pr = hf::perturb(inst);
    auto descent = hf::steepest_descent(pr.instance, pr.embedding);
    hf::OptimumSearch opt;
    try {
      opt = hf::search_optimum(pr.instance, pr.embedding, descent.initial, 4'000'000, &descent.potential);
    } catch (const hf::TooLarge&) {
      ++skipped;
      continue;
    }
    ++checked;
    const int m = descent.stats.iterations;
    if (opt.g_min != descent.stats.g_trace.back()) ++value_fail;
    if (4 * m > opt.d_inf4 + 8) ++geodesic_fail;
    if (m > pr.gamma0_diameter) {
      if (diameter_fail == 0)
        worst << "; first excess: " << m << " iterations vs d(Gamma_0) = " << pr.gamma0_diameter
              << " on an instance with " << inst.num_nodes() << " nodes and " << inst.num_edges() << " edges";
      ++diameter_fail;
    }
  }
  std::ostringstream d;
  d << checked << " instances (" << skipped << " over the search budget): optimum mismatches " << value_fail
    << ", m > D_inf + 2: " << geodesic_fail << ", m > d(Gamma_0): " << diameter_fail << worst.str();
  report(7, checked > 0 && value_fail == 0 && geodesic_fail == 0 && diameter_fail == 0, d.str());
}

// 8. Discrete midpoint convexity of g on sampled pairs.
void criterion_convexity(const std::vector<hf::MultiflowInstance>& fixtures) {
  long pairs = 0, violations = 0;
  int probes = 0;
  for (const auto& inst : fixtures) {
    auto star = hf::star_embedding(inst);
    auto rep = hf::convexity_probe(inst, star, 10'000, 1);
    pairs += rep.pairs;
    violations += rep.violations;
    ++probes;
    auto pr = hf::perturb(inst);
    rep = hf::convexity_probe(pr.instance, pr.embedding, 10'000, 2);
    pairs += rep.pairs;
    violations += rep.violations;
    ++probes;
  }
  std::ostringstream d;
  d << probes << " probes of 10000 pairs (" << pairs << " total), violations " << violations;
  report(8, violations == 0 && pairs >= 10'000L * probes, d.str());
}

// 9. Rounded multiway cut is valid and within twice the flow value.
void criterion_cut(const std::vector<Run>& runs) {
  int invalid = 0, too_big = 0;
  for (const auto& run : runs) {
    if (!hf::verify_cut(run.instance, run.report.cut.nodes) || !run.report.cut_valid) ++invalid;
    if (run.report.cut.capacity > run.report.multiflow.value2()) ++too_big;
  }
  std::ostringstream d;
  d << runs.size() << " runs, invalid cuts " << invalid << ", capacity above twice the flow " << too_big;
  report(9, invalid == 0 && too_big == 0, d.str());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// 10. Byte-identical output across runs, in-process and through the CLI.
void criterion_determinism(const std::vector<hf::MultiflowInstance>& instances) {
  int differ = 0, compared = 0;
  hf::OutputOptions all{true, true, true};
  for (std::size_t i = 0; i < instances.size(); i += 10) {
    const auto& inst = instances[i];
    auto a = hf::report_to_json(inst, hf::solve_instance(inst), all).dump(2);
    auto b = hf::report_to_json(inst, hf::solve_instance(inst), all).dump(2);
    ++compared;
    if (a != b) ++differ;
  }
  int cli_differ = 0, cli_runs = 0;
  const auto dir = std::filesystem::temp_directory_path() / "halfflow_acceptance";
  std::filesystem::create_directories(dir);
  for (const char* name : {"k13.json", "triangle.json", "inner_triangle.json"}) {
    std::string outs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const auto out = (dir / (std::string(name) + "." + std::to_string(rep))).string();
      const std::string cmd = std::string("\"") + HALFFLOW_CLI_PATH + "\" solve --input \"" +
                              ht::fixture_path(name) + "\" --emit-cut --emit-dual --stats > \"" + out + "\"";
      if (std::system(cmd.c_str()) != 0) ++cli_differ;
      outs[rep] = slurp(out);
    }
    ++cli_runs;
    if (outs[0] != outs[1] || outs[0].empty()) ++cli_differ;
  }
  std::ostringstream d;
  d << compared << " in-process pairs differing " << differ << ", " << cli_runs << " CLI pairs differing "
    << cli_differ;
  report(10, differ == 0 && cli_differ == 0, d.str());
}

}  // namespace

int main() {
  const auto corpus = random_corpus();
  const auto fixtures = fixture_corpus();

  std::vector<Run> runs, fixture_runs;
  for (const auto& inst : corpus) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = hf::solve_instance(inst);
    runs.push_back({inst, std::move(rep), seconds_since(t0)});
  }
  for (const auto& inst : fixtures) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = hf::solve_instance(inst);
    fixture_runs.push_back({inst, std::move(rep), seconds_since(t0)});
  }
  std::vector<Run> all_runs = runs;
  all_runs.insert(all_runs.end(), fixture_runs.begin(), fixture_runs.end());

  criterion_strong_duality(runs);
  criterion_oracle(runs, fixture_runs);
  criterion_half_integrality(all_runs);
  criterion_delta_star();
  criterion_projection();
  std::vector<hf::MultiflowInstance> cover_sources = fixtures;
  for (std::size_t i = 0; i < corpus.size(); i += 15) cover_sources.push_back(corpus[i]);
  criterion_subflow(cover_sources);
  std::vector<hf::MultiflowInstance> iteration_set = fixtures;
  iteration_set.insert(iteration_set.end(), corpus.begin(), corpus.end());
  criterion_iterations(iteration_set);
  criterion_convexity(fixtures);
  criterion_cut(all_runs);
  criterion_determinism(corpus);

  int failed = 0;
  for (const auto& l : lines) failed += l.pass ? 0 : 1;
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
