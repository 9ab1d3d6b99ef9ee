#pragma once

#include <cassert>
#include <set>
#include <vector>

#include "gencol/graph.hpp"

namespace gencol::detail {

// Integer-keyed min queue over vertex ids. Keys may move either way; the
// minimum pointer only ever needs to move down on insert.
class BucketQueue {
 public:
  explicit BucketQueue(int n) : key_(n, -1) {}

  bool empty() const { return size_ == 0; }
  bool contains(Vertex v) const { return key_[v] >= 0; }
  int key(Vertex v) const { return key_[v]; }

  void insert(Vertex v, int key) {
    assert(key >= 0 && !contains(v));
    if (key >= static_cast<int>(buckets_.size())) buckets_.resize(key + 1);
    buckets_[key].insert(v);
    key_[v] = key;
    if (key < min_) min_ = key;
    ++size_;
  }

  void erase(Vertex v) {
    buckets_[key_[v]].erase(v);
    key_[v] = -1;
    --size_;
  }

  void update(Vertex v, int key) {
    if (key_[v] == key) return;
    erase(v);
    insert(v, key);
  }

  // Smallest key, smallest id among ties.
  Vertex pop_min() {
    while (buckets_[min_].empty()) ++min_;
    Vertex v = *buckets_[min_].begin();
    erase(v);
    return v;
  }

 private:
  std::vector<int> key_;
  std::vector<std::set<Vertex>> buckets_;
  int min_ = 0;
  int size_ = 0;
};

}  // namespace gencol::detail
