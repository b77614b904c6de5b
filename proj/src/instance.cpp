#include "halfflow/instance.hpp"

#include <algorithm>
#include <set>

#include "halfflow/errors.hpp"

namespace halfflow {

MultiflowInstance::MultiflowInstance(std::vector<std::string> nodes,
                                     const std::vector<std::pair<std::string, std::string>>& edges,
                                     const std::vector<std::string>& terminals,
                                     const std::map<std::string, std::int64_t>& capacity)
    : names_(std::move(nodes)) {
  for (int i = 0; i < num_nodes(); ++i)
    if (!index_.emplace(names_[i], i).second) throw ValidationError("duplicate node id '" + names_[i] + "'");

  auto lookup = [&](const std::string& id, const char* what) {
    auto it = index_.find(id);
    if (it == index_.end()) throw ValidationError(std::string("unknown node id '") + id + "' in " + what);
    return it->second;
  };

  terminal_rank_.assign(num_nodes(), -1);
  for (const auto& t : terminals) {
    int v = lookup(t, "terminals");
    if (terminal_rank_[v] >= 0) throw ValidationError("duplicate terminal '" + t + "'");
    terminal_rank_[v] = static_cast<int>(terminals_.size());
    terminals_.push_back(v);
  }
  if (terminals_.size() < 2) throw ValidationError("at least two terminals are required");

  capacity_.assign(num_nodes(), 0);
  std::vector<char> has_capacity(num_nodes(), 0);
  for (const auto& [id, c] : capacity) {
    int v = lookup(id, "capacity");
    if (terminal_rank_[v] >= 0) throw ValidationError("terminal '" + id + "' must not carry a capacity");
    if (c < 0) throw ValidationError("negative capacity at '" + id + "'");
    capacity_[v] = c;
    has_capacity[v] = 1;
  }
  for (int v = 0; v < num_nodes(); ++v)
    if (terminal_rank_[v] < 0 && !has_capacity[v])
      throw ValidationError("missing capacity for nonterminal '" + names_[v] + "'");

  std::set<std::pair<int, int>> seen;
  bool terminal_pair = false;
  for (const auto& [a, b] : edges) {
    int u = lookup(a, "edges"), v = lookup(b, "edges");
    if (u == v) throw ValidationError("loop at '" + a + "'");
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw ValidationError("duplicate edge '" + a + "'-'" + b + "'");
    if (terminal_rank_[u] >= 0 && terminal_rank_[v] >= 0) terminal_pair = true;
    edges_.push_back({u, v, 0});
  }
  if (terminal_pair) throw UnboundedInstance("an edge joins two terminals");
  build_index();
}

void MultiflowInstance::build_index() {
  incident_.assign(num_nodes(), {});
  for (int e = 0; e < num_edges(); ++e) {
    incident_[edges_[e].u].push_back(e);
    incident_[edges_[e].v].push_back(e);
  }
}

MultiflowInstance MultiflowInstance::with_costs(std::vector<std::int64_t> costs) const {
  if (static_cast<int>(costs.size()) != num_edges()) throw ValidationError("one cost per edge is required");
  MultiflowInstance out = *this;
  for (int e = 0; e < num_edges(); ++e) {
    if (costs[e] < 0 || costs[e] % 2 != 0) throw ValidationError("edge costs must be even and nonnegative");
    out.edges_[e].cost = costs[e];
  }
  return out;
}

MultiflowInstance MultiflowInstance::with_uniform_cost(std::int64_t cost) const {
  return with_costs(std::vector<std::int64_t>(num_edges(), cost));
}

int MultiflowInstance::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int MultiflowInstance::find_edge(int u, int v) const {
  if (u < 0 || u >= num_nodes()) return -1;
  for (int e : incident_[u])
    if (other_end(e, u) == v) return e;
  return -1;
}

MultiflowInstance parse_instance(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw SyntaxError(err.what());
  }
  try {
    if (!doc.is_object()) throw ValidationError("instance must be a JSON object");
    auto nodes = doc.at("nodes").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ValidationError("each edge must be a pair of node ids");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    auto terminals = doc.at("terminals").get<std::vector<std::string>>();
    std::map<std::string, std::int64_t> capacity;
    if (doc.contains("capacity")) {
      for (const auto& [id, c] : doc.at("capacity").items()) {
        if (!c.is_number_integer()) throw ValidationError("capacity of '" + id + "' is not an integer");
        capacity[id] = c.get<std::int64_t>();
      }
    }
    return MultiflowInstance(std::move(nodes), edges, terminals, capacity);
  } catch (const nlohmann::json::exception& err) {
    throw ValidationError(err.what());
  }
}

nlohmann::json instance_to_json(const MultiflowInstance& instance) {
  nlohmann::json nodes = nlohmann::json::array(), edges = nlohmann::json::array(),
                 terminals = nlohmann::json::array(), capacity = nlohmann::json::object();
  for (int v = 0; v < instance.num_nodes(); ++v) {
    nodes.push_back(instance.name(v));
    if (!instance.is_terminal(v)) capacity[instance.name(v)] = instance.capacity(v);
  }
  for (const auto& e : instance.edges()) edges.push_back({instance.name(e.u), instance.name(e.v)});
  for (int t : instance.terminals()) terminals.push_back(instance.name(t));
  return {{"nodes", nodes}, {"edges", edges}, {"terminals", terminals}, {"capacity", capacity}};
}

std::string serialize_instance(const MultiflowInstance& instance) {
  return instance_to_json(instance).dump();
}

TreeEmbedding star_embedding(const MultiflowInstance& instance) {
  std::vector<std::string> labels{"v0"};
  std::vector<std::pair<int, int>> edges;
  TreeEmbedding emb;
  emb.anchor.assign(instance.num_nodes(), -1);
  for (int t : instance.terminals()) {
    labels.push_back("v_" + instance.name(t));
    int leaf = static_cast<int>(labels.size()) - 1;
    edges.emplace_back(0, leaf);
    emb.anchor[t] = leaf;
  }
  emb.tree = std::make_shared<const Tree>(std::move(labels), edges);
  return emb;
}

}  // namespace halfflow
