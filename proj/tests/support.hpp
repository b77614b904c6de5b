#pragma once
// Shared helpers for the test binaries: fixture loading and a seeded random
// instance generator.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "halfflow/instance.hpp"

namespace halfflow::testing {

inline std::string fixture_path(const std::string& name) { return std::string(HALFFLOW_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture_text(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline MultiflowInstance load_fixture(const std::string& name) { return parse_instance(read_fixture_text(name)); }

struct RandomShape {
  int max_nodes = 12;
  int max_edges = 20;
  int min_terminals = 2;
  int max_terminals = 5;
  int max_capacity = 4;
  int max_free = 100;  // upper bound on the number of nonterminals
};

// Random instance without terminal-terminal edges.  Nonterminals are named
// v0, v1, ...; terminals s0, s1, ...  Node order is shuffled.
inline MultiflowInstance random_instance(std::mt19937_64& rng, const RandomShape& shape = {}) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int k = uniform(shape.min_terminals, shape.max_terminals);
  const int free_hi = std::min(shape.max_nodes - k, shape.max_free);
  const int n_free = uniform(1, std::max(1, free_hi));
  std::vector<std::string> names;
  std::vector<std::string> terminals;
  for (int s = 0; s < k; ++s) terminals.push_back("s" + std::to_string(s));
  names = terminals;
  for (int i = 0; i < n_free; ++i) names.push_back("v" + std::to_string(i));
  std::shuffle(names.begin(), names.end(), rng);

  std::vector<std::pair<int, int>> candidates;
  auto is_term = [&](const std::string& x) { return x[0] == 's'; };
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a + 1; b < names.size(); ++b)
      if (!is_term(names[a]) || !is_term(names[b])) candidates.emplace_back(static_cast<int>(a), static_cast<int>(b));
  std::shuffle(candidates.begin(), candidates.end(), rng);
  const int m_hi = std::min<int>(shape.max_edges, static_cast<int>(candidates.size()));
  const int m = uniform(std::min(m_hi, static_cast<int>(names.size()) - 1), m_hi);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int e = 0; e < m; ++e) {
    auto [a, b] = candidates[e];
    if (uniform(0, 1)) std::swap(a, b);
    edges.emplace_back(names[a], names[b]);
  }
  std::map<std::string, std::int64_t> capacity;
  for (const auto& x : names)
    if (!is_term(x)) capacity[x] = uniform(0, 9) == 0 ? 0 : uniform(1, shape.max_capacity);
  return MultiflowInstance(names, edges, terminals, capacity);
}

}  // namespace halfflow::testing
