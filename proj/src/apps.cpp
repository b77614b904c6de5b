#include "halfflow/apps.hpp"

#include <vector>

namespace halfflow {

MultiwayCut round_cut(const MultiflowInstance& instance, const Potential& potential) {
  MultiwayCut cut;
  for (int i = 0; i < instance.num_nodes(); ++i) {
    if (instance.is_terminal(i) || potential.at[i].r4 < 2) continue;
    cut.nodes.push_back(i);
    cut.capacity += instance.capacity(i);
  }
  return cut;
}

bool verify_cut(const MultiflowInstance& instance, const std::vector<int>& nodes) {
  std::vector<char> removed(instance.num_nodes(), 0);
  for (int v : nodes) {
    if (v < 0 || v >= instance.num_nodes() || instance.is_terminal(v)) return false;
    removed[v] = 1;
  }
  std::vector<int> owner(instance.num_nodes(), -1);
  for (int s : instance.terminals()) {
    std::vector<int> stack{s};
    owner[s] = s;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : instance.incident(v)) {
        int w = instance.other_end(e, v);
        if (removed[w]) continue;
        if (owner[w] == s) continue;
        if (owner[w] >= 0) return false;
        owner[w] = s;
        stack.push_back(w);
      }
    }
  }
  return true;
}

}  // namespace halfflow
