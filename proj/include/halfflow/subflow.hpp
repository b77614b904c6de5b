#pragma once

// Maximum submodular flow on a network whose nonterminal nodes are either
// usual (flow conservation) or grouped into 6-node blocks carrying a
// Delta*_b constraint on their excess vector.

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace halfflow {

inline constexpr std::int64_t kInfiniteCapacity = std::numeric_limits<std::int64_t>::max() / 4;

// Membership vector over network nodes.
using NodeSet = std::vector<char>;

class SubflowNetwork {
 public:
  struct Arc {
    int from;
    int to;
    std::int64_t capacity;  // kInfiniteCapacity for unbounded arcs
  };
  struct Block {
    std::array<int, 6> nodes;  // element e of the signed ground set lives at nodes[e]
    std::int64_t b;
  };

  SubflowNetwork() = default;
  SubflowNetwork(int num_nodes, int source, int sink);

  int add_node();
  int add_arc(int from, int to, std::int64_t capacity);
  void add_block(const std::array<int, 6>& nodes, std::int64_t b);
  // Optional skew-symmetry: complement[v] is the bar of v.
  void set_complement(std::vector<int> complement);

  int num_nodes() const { return num_nodes_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<int>& complement() const { return complement_; }
  int block_of(int v) const { return block_of_[v]; }
  int element_of(int v) const { return element_of_[v]; }

 private:
  int num_nodes_ = 0;
  int source_ = 0;
  int sink_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Block> blocks_;
  std::vector<int> block_of_;
  std::vector<int> element_of_;
  std::vector<int> complement_;
};

struct SubflowResult {
  std::vector<std::int64_t> flow;    // per arc
  std::vector<std::int64_t> excess;  // inflow minus outflow per node
  std::int64_t value = 0;            // excess at the sink
  NodeSet min_cut;                   // nodes reachable from the source in the final residual network
  int augmentations = 0;
};

// Shortest augmenting paths.  Throws UnboundedFlow if the sink is reachable
// through unbounded arcs only.
SubflowResult max_subflow(const SubflowNetwork& network);

// c(delta X) + rho(X minus source); nullopt when an unbounded arc leaves X.
std::optional<std::int64_t> cut_capacity(const SubflowNetwork& network, const NodeSet& x);

// True iff x contains no pair {v, bar v}.
bool verify_min_cut_transversal(const SubflowNetwork& network, const NodeSet& x);

// One residual arc per line: "from to capacity kind".
std::string dump_residual(const SubflowNetwork& network, const SubflowResult& result);

}  // namespace halfflow
