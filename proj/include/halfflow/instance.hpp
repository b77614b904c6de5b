#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "halfflow/tree.hpp"

namespace halfflow {

// Undirected simple graph with a terminal set, integer capacities on
// nonterminals and even nonnegative edge costs.  Immutable once built.
class MultiflowInstance {
 public:
  struct Edge {
    int u;
    int v;
    std::int64_t cost;
  };

  // Costs are zero.  Throws ValidationError or UnboundedInstance.
  MultiflowInstance(std::vector<std::string> nodes,
                    const std::vector<std::pair<std::string, std::string>>& edges,
                    const std::vector<std::string>& terminals,
                    const std::map<std::string, std::int64_t>& capacity);

  // Same graph with edge costs replaced (one per edge, each even and >= 0).
  MultiflowInstance with_costs(std::vector<std::int64_t> costs) const;
  MultiflowInstance with_uniform_cost(std::int64_t cost) const;

  int num_nodes() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_terminals() const { return static_cast<int>(terminals_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  int index_of(const std::string& name) const;  // -1 if absent
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }
  // Terminal node indices in input order.
  const std::vector<int>& terminals() const { return terminals_; }
  bool is_terminal(int v) const { return terminal_rank_[v] >= 0; }
  int terminal_rank(int v) const { return terminal_rank_[v]; }
  std::int64_t capacity(int v) const { return capacity_[v]; }
  // Incident edge indices in increasing order.
  std::span<const int> incident(int v) const { return incident_[v]; }
  int find_edge(int u, int v) const;  // -1 if absent

 private:
  MultiflowInstance() = default;
  void build_index();

  std::vector<std::string> names_;
  std::map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::vector<int> terminals_;
  std::vector<int> terminal_rank_;
  std::vector<std::int64_t> capacity_;
  std::vector<std::vector<int>> incident_;
};

// Throws SyntaxError on malformed JSON, then as the constructor.
MultiflowInstance parse_instance(std::string_view text);
nlohmann::json instance_to_json(const MultiflowInstance& instance);
std::string serialize_instance(const MultiflowInstance& instance);

// Terminal anchors q_s in a tree.
struct TreeEmbedding {
  std::shared_ptr<const Tree> tree;
  std::vector<int> anchor;  // per instance node; -1 for nonterminals

  const Tree& gamma() const { return *tree; }
};

// Star with center "v0" (vertex 0) and one leaf "v_<name>" per terminal,
// in terminal order; terminal s is anchored at its leaf.
TreeEmbedding star_embedding(const MultiflowInstance& instance);

}  // namespace halfflow
