#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "gencol/graph.hpp"

namespace gencol {

/// A strict, downward-total partial order on 0..n-1: a sequence of placed
/// vertices followed by an unordered remainder.
///
/// a precedes b iff a is placed and b is either unplaced or placed later.
/// Two unplaced vertices are incomparable. Once every vertex is placed the
/// order is total.
class PrefixOrder {
 public:
  static constexpr int kUnplaced = -1;

  PrefixOrder() = default;
  explicit PrefixOrder(int n);
  // Throws InputError on repeated or out-of-range ids.
  PrefixOrder(int n, std::span<const Vertex> placed);

  static PrefixOrder identity(int n);

  int size() const { return static_cast<int>(position_.size()); }
  int placed_count() const { return static_cast<int>(placed_.size()); }
  bool is_total() const { return placed_count() == size(); }
  std::span<const Vertex> placed() const { return placed_; }

  bool is_placed(Vertex v) const { return position_[v] != kUnplaced; }
  int position(Vertex v) const { return position_[v]; }

  // "Ordered" in the strict sense: some other vertex lies after v.
  bool is_ordered(Vertex v) const {
    return is_placed(v) && position_[v] + 1 < size();
  }

  bool precedes(Vertex a, Vertex b) const {
    int pa = position_[a];
    if (pa == kUnplaced) return false;
    int pb = position_[b];
    return pb == kUnplaced || pa < pb;
  }

  void place(Vertex v);
  void unplace_last();

  // Requires a total order.
  PrefixOrder reversed() const;

  bool operator==(const PrefixOrder&) const = default;

 private:
  std::vector<Vertex> placed_;
  std::vector<int> position_;
};

struct ReachEntry {
  Vertex vertex;
  int distance;  // least i such that `vertex` is i-reachable

  bool operator==(const ReachEntry&) const = default;
};

// reach_r(u): endpoints v != u, v not before u, of paths of length <= r whose
// internal vertices all precede u. Sorted by vertex, with minimal distances.
std::vector<ReachEntry> reach_set(const Graph& g, const PrefixOrder& sigma,
                                  Vertex u, int r);

// wreach_r(u): as reach_set, but internal vertices must precede the endpoint.
std::vector<Vertex> wreach_set(const Graph& g, const PrefixOrder& sigma,
                               Vertex u, int r);

struct ReachReport {
  int radius = 0;
  std::vector<std::vector<ReachEntry>> reach;
  std::vector<std::vector<Vertex>> wreach;
  int col = 0;
  int wcol = 0;
};

// Full evaluation of a total order: O(n*m) per radius. Throws
// std::invalid_argument when sigma is not total.
ReachReport evaluate_order(const Graph& g, const PrefixOrder& sigma, int r);

int col_of_order(const Graph& g, const PrefixOrder& sigma, int r);
int wcol_of_order(const Graph& g, const PrefixOrder& sigma, int r);

// Whitespace separated vertex ids, earliest first. The result may be a
// strict prefix; callers needing a permutation check is_total().
PrefixOrder parse_order(std::istream& in, int n);
void write_order(std::ostream& out, const PrefixOrder& sigma);

}  // namespace gencol
