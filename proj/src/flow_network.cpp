#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gencol/backconnectivity.hpp"

namespace gencol {

FlowNetwork::FlowNetwork(int nodes) : head_(nodes, -1) {}

int FlowNetwork::add_node() {
  head_.push_back(-1);
  return num_nodes() - 1;
}

int FlowNetwork::add_arc(int from, int to, int capacity) {
  if (from < 0 || to < 0 || from >= num_nodes() || to >= num_nodes()) {
    throw std::out_of_range("flow arc endpoint out of range");
  }
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, head_[from]});
  head_[from] = id;
  arcs_.push_back({from, 0, head_[to]});
  head_[to] = id + 1;
  return id;
}

int FlowNetwork::flow_on(int arc) const { return arcs_[arc ^ 1].capacity; }

int FlowNetwork::max_flow(int source, int sink) {
  if (source == sink) throw std::invalid_argument("source equals sink");
  const int n = num_nodes();
  std::vector<int> parent_arc(n);
  std::vector<int> queue;
  queue.reserve(n);
  int total = 0;
  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    queue.clear();
    queue.push_back(source);
    parent_arc[source] = -2;
    for (std::size_t i = 0; i < queue.size() && parent_arc[sink] == -1; ++i) {
      int x = queue[i];
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        int y = arcs_[a].to;
        if (arcs_[a].capacity > 0 && parent_arc[y] == -1) {
          parent_arc[y] = a;
          queue.push_back(y);
        }
      }
    }
    if (parent_arc[sink] == -1) break;
    int push = -1;
    for (int v = sink; v != source; v = arcs_[parent_arc[v] ^ 1].to) {
      int cap = arcs_[parent_arc[v]].capacity;
      push = push < 0 ? cap : std::min(push, cap);
    }
    for (int v = sink; v != source; v = arcs_[parent_arc[v] ^ 1].to) {
      arcs_[parent_arc[v]].capacity -= push;
      arcs_[parent_arc[v] ^ 1].capacity += push;
    }
    total += push;
  }
  return total;
}

}  // namespace gencol
