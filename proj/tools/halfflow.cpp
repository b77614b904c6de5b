// Command-line front end.
//
//   halfflow solve --input FILE [--output FILE] [--emit-cut] [--emit-dual] [--stats] [--verify]
//   halfflow oracle --input FILE [--probe PAIRS]
//
// Exit codes: 0 success, 1 usage or I/O error, 2 unbounded instance,
// 3 malformed or invalid instance, 4 oracle input too large,
// 5 certificate check failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "halfflow/errors.hpp"
#include "halfflow/instance.hpp"
#include "halfflow/oracle.hpp"
#include "halfflow/solver.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kUnbounded = 2, kInvalid = 3, kTooLarge = 4, kUnverified = 5 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("HALFFLOW_SEED");
  return s ? std::strtoull(s, nullptr, 10) : 1;
}

int run_solve(const std::string& input, const std::string& output, const halfflow::OutputOptions& options,
              bool verify) {
  auto instance = halfflow::parse_instance(read_file(input));
  auto report = halfflow::solve_instance(instance);
  std::string text = halfflow::report_to_json(instance, report, options).dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write " + output);
    out << text;
  }
  if (verify && !report.verified()) {
    for (const auto& v : report.perturbed_certificate.violations) std::cerr << "perturbed: " << v << "\n";
    for (const auto& v : report.certificate.violations) std::cerr << "original: " << v << "\n";
    if (!report.cut_valid) std::cerr << "multiway cut leaves a terminal pair connected\n";
    return kUnverified;
  }
  return kOk;
}

int run_oracle(const std::string& input, long probe) {
  auto instance = halfflow::parse_instance(read_file(input));
  if (probe > 0) {
    auto star = halfflow::star_embedding(instance);
    auto rep = halfflow::convexity_probe(instance, star, probe, seed_from_env());
    std::cout << "pairs " << rep.pairs << " violations " << rep.violations << "\n";
    return rep.violations == 0 ? kOk : kUnverified;
  }
  std::cout << halfflow::dual_enum(instance) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Half-integral maximum node-capacitated multiflow"};
  app.require_subcommand(1);

  std::string input, output;
  halfflow::OutputOptions options;
  bool verify = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--input", input, "Instance JSON file")->required();
  solve->add_option("--output", output, "Write the result here instead of stdout");
  solve->add_flag("--emit-cut", options.emit_cut, "Include the rounded node-multiway cut");
  solve->add_flag("--emit-dual", options.emit_dual, "Include the optimal dual potential");
  solve->add_flag("--stats", options.stats, "Include descent statistics");
  solve->add_flag("--verify", verify, "Check optimality certificates; exit 5 on failure");

  long probe = 0;
  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference value for small instances");
  oracle->add_option("--input", input, "Instance JSON file")->required();
  oracle->add_option("--probe", probe, "Run a convexity probe with this many pairs (seed: HALFFLOW_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve->parsed()) return run_solve(input, output, options, verify);
    return run_oracle(input, probe);
  } catch (const halfflow::UnboundedInstance& e) {
    std::cerr << "unbounded: " << e.what() << "\n";
    return kUnbounded;
  } catch (const halfflow::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kInvalid;
  } catch (const halfflow::ValidationError& e) {
    std::cerr << "invalid instance: " << e.what() << "\n";
    return kInvalid;
  } catch (const halfflow::TooLarge& e) {
    std::cerr << "too large: " << e.what() << "\n";
    return kTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
