#include "halfflow/subflow.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "halfflow/bisubmodular.hpp"
#include "halfflow/errors.hpp"

namespace halfflow {

SubflowNetwork::SubflowNetwork(int num_nodes, int source, int sink)
    : num_nodes_(num_nodes), source_(source), sink_(sink), block_of_(num_nodes, -1), element_of_(num_nodes, -1) {
  if (source == sink || source < 0 || sink < 0 || source >= num_nodes || sink >= num_nodes)
    throw std::invalid_argument("bad source/sink");
}

int SubflowNetwork::add_node() {
  block_of_.push_back(-1);
  element_of_.push_back(-1);
  return num_nodes_++;
}

int SubflowNetwork::add_arc(int from, int to, std::int64_t capacity) {
  if (from < 0 || to < 0 || from >= num_nodes_ || to >= num_nodes_ || from == to)
    throw std::invalid_argument("bad arc endpoints");
  if (capacity < 0) throw std::invalid_argument("negative arc capacity");
  arcs_.push_back({from, to, std::min(capacity, kInfiniteCapacity)});
  return static_cast<int>(arcs_.size()) - 1;
}

void SubflowNetwork::add_block(const std::array<int, 6>& nodes, std::int64_t b) {
  if (b < 0) throw std::invalid_argument("negative block parameter");
  const int id = static_cast<int>(blocks_.size());
  for (int e = 0; e < 6; ++e) {
    int v = nodes[e];
    if (v < 0 || v >= num_nodes_ || v == source_ || v == sink_ || block_of_[v] >= 0)
      throw std::invalid_argument("bad block node");
    block_of_[v] = id;
    element_of_[v] = e;
  }
  blocks_.push_back({nodes, b});
}

void SubflowNetwork::set_complement(std::vector<int> complement) {
  if (static_cast<int>(complement.size()) != num_nodes_) throw std::invalid_argument("complement size mismatch");
  for (int v = 0; v < num_nodes_; ++v)
    if (complement[v] == v || complement[complement[v]] != v) throw std::invalid_argument("complement is not an involution");
  complement_ = std::move(complement);
}

namespace {

BlockVector block_vector(const SubflowNetwork::Block& block, const std::vector<std::int64_t>& excess) {
  BlockVector x{};
  for (int e = 0; e < 6; ++e) x[e] = excess[block.nodes[e]];
  return x;
}

enum class Step : char { Forward, Backward, Exchange };

struct Parent {
  int node = -1;
  Step step = Step::Forward;
  int arc = -1;
};

struct Residual {
  const SubflowNetwork& net;
  std::vector<std::vector<int>> out, in;

  explicit Residual(const SubflowNetwork& n) : net(n), out(n.num_nodes()), in(n.num_nodes()) {
    for (int a = 0; a < static_cast<int>(n.arcs().size()); ++a) {
      out[n.arcs()[a].from].push_back(a);
      in[n.arcs()[a].to].push_back(a);
    }
  }

  // BFS from the source; parents describe shortest residual paths.
  std::vector<Parent> search(const std::vector<std::int64_t>& flow, const std::vector<std::int64_t>& excess,
                             std::vector<char>& seen) const {
    const int n = net.num_nodes();
    std::vector<Parent> parent(n);
    seen.assign(n, 0);
    std::queue<int> queue;
    seen[net.source()] = 1;
    queue.push(net.source());
    auto visit = [&](int w, Parent p) {
      if (seen[w]) return;
      seen[w] = 1;
      parent[w] = p;
      queue.push(w);
    };
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      if (v == net.sink()) break;
      for (int a : out[v])
        if (flow[a] < net.arcs()[a].capacity) visit(net.arcs()[a].to, {v, Step::Forward, a});
      for (int a : in[v])
        if (flow[a] > 0) visit(net.arcs()[a].from, {v, Step::Backward, a});
      int blk = net.block_of(v);
      if (blk >= 0) {
        const auto& block = net.blocks()[blk];
        BlockVector x = block_vector(block, excess);
        int u = net.element_of(v);
        for (int e = 0; e < 6; ++e)
          if (e != u && !seen[block.nodes[e]] && exchange_capacity(block.b, x, u, e) > 0)
            visit(block.nodes[e], {v, Step::Exchange, e});
      }
    }
    return parent;
  }
};

void require_base(const SubflowNetwork& net, const std::vector<std::int64_t>& excess) {
  for (const auto& block : net.blocks())
    if (!in_base(block.b, block_vector(block, excess))) throw std::logic_error("augmentation left the base polyhedron");
  for (int v = 0; v < net.num_nodes(); ++v)
    if (v != net.source() && v != net.sink() && net.block_of(v) < 0 && excess[v] != 0)
      throw std::logic_error("augmentation broke conservation");
}

void reject_unbounded(const SubflowNetwork& net) {
  std::vector<std::vector<int>> adj(net.num_nodes());
  for (const auto& a : net.arcs())
    if (a.capacity >= kInfiniteCapacity) adj[a.from].push_back(a.to);
  std::vector<char> seen(net.num_nodes(), 0);
  std::vector<int> stack{net.source()};
  seen[net.source()] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == net.sink()) throw UnboundedFlow("sink reachable through unbounded arcs");
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
}

}  // namespace

SubflowResult max_subflow(const SubflowNetwork& net) {
  reject_unbounded(net);
  Residual residual(net);
  SubflowResult result;
  result.flow.assign(net.arcs().size(), 0);
  result.excess.assign(net.num_nodes(), 0);
  std::vector<char> seen;
  for (;;) {
    std::vector<Parent> parent = residual.search(result.flow, result.excess, seen);
    if (!seen[net.sink()]) break;

    std::int64_t alpha = kInfiniteCapacity;
    std::map<int, int> exchanges_per_block;
    for (int w = net.sink(); w != net.source(); w = parent[w].node) {
      const Parent& p = parent[w];
      if (p.step == Step::Forward) {
        const auto& arc = net.arcs()[p.arc];
        if (arc.capacity < kInfiniteCapacity) alpha = std::min(alpha, arc.capacity - result.flow[p.arc]);
      } else if (p.step == Step::Backward) {
        alpha = std::min(alpha, result.flow[p.arc]);
      } else {
        int blk = net.block_of(p.node);
        const auto& block = net.blocks()[blk];
        alpha = std::min(alpha, exchange_capacity(block.b, block_vector(block, result.excess),
                                                  net.element_of(p.node), p.arc));
        ++exchanges_per_block[blk];
      }
    }
    if (alpha >= kInfiniteCapacity) throw UnboundedFlow("augmenting path of unbounded capacity");
    // Several exchanges inside one block: a unit step stays in the base on a shortest path.
    for (auto [blk, count] : exchanges_per_block)
      if (count >= 2) alpha = std::min<std::int64_t>(alpha, 1);

    for (int w = net.sink(); w != net.source(); w = parent[w].node) {
      const Parent& p = parent[w];
      if (p.step == Step::Exchange) continue;
      const auto& arc = net.arcs()[p.arc];
      std::int64_t delta = p.step == Step::Forward ? alpha : -alpha;
      result.flow[p.arc] += delta;
      result.excess[arc.to] += delta;
      result.excess[arc.from] -= delta;
    }
    require_base(net, result.excess);
    ++result.augmentations;
  }
  result.value = result.excess[net.sink()];
  result.min_cut = seen;
  return result;
}

std::optional<std::int64_t> cut_capacity(const SubflowNetwork& net, const NodeSet& x) {
  if (static_cast<int>(x.size()) != net.num_nodes()) throw std::invalid_argument("cut size mismatch");
  std::int64_t total = 0;
  for (const auto& a : net.arcs()) {
    if (!x[a.from] || x[a.to]) continue;
    if (a.capacity >= kInfiniteCapacity) return std::nullopt;
    total += a.capacity;
  }
  for (const auto& block : net.blocks()) {
    unsigned mask = 0;
    for (int e = 0; e < 6; ++e)
      if (x[block.nodes[e]]) mask |= 1u << e;
    total += delta_star(block.b, static_cast<SignedSubset>(mask));
  }
  return total;
}

bool verify_min_cut_transversal(const SubflowNetwork& net, const NodeSet& x) {
  if (net.complement().empty()) throw std::invalid_argument("network has no complement map");
  for (int v = 0; v < net.num_nodes(); ++v)
    if (x[v] && x[net.complement()[v]]) return false;
  return true;
}

std::string dump_residual(const SubflowNetwork& net, const SubflowResult& result) {
  std::ostringstream out;
  for (std::size_t a = 0; a < net.arcs().size(); ++a) {
    const auto& arc = net.arcs()[a];
    if (result.flow[a] < arc.capacity) {
      out << arc.from << ' ' << arc.to << ' ';
      if (arc.capacity >= kInfiniteCapacity)
        out << "inf";
      else
        out << arc.capacity - result.flow[a];
      out << " forward\n";
    }
    if (result.flow[a] > 0) out << arc.to << ' ' << arc.from << ' ' << result.flow[a] << " backward\n";
  }
  for (const auto& block : net.blocks()) {
    BlockVector x = block_vector(block, result.excess);
    for (int u = 0; u < 6; ++u)
      for (int v = 0; v < 6; ++v) {
        if (u == v) continue;
        std::int64_t k = exchange_capacity(block.b, x, u, v);
        if (k > 0) out << block.nodes[u] << ' ' << block.nodes[v] << ' ' << k << " exchange\n";
      }
  }
  return out.str();
}

}  // namespace halfflow
