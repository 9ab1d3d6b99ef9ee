#include "prefix_search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "bounded_bfs.hpp"
#include "gencol/errors.hpp"

namespace gencol::detail {

TwinClasses twin_classes(const Graph& g) {
  const int n = g.num_vertices();
  TwinClasses out;
  out.class_of.assign(n, -1);

  std::map<std::vector<Vertex>, std::vector<Vertex>> open;
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    open[std::vector<Vertex>(nb.begin(), nb.end())].push_back(v);
  }
  // A vertex with a false twin cannot also have a true twin, so the two
  // passes produce disjoint classes.
  std::map<std::vector<Vertex>, std::vector<Vertex>> closed;
  for (auto& [nbrs, group] : open) {
    if (group.size() > 1) {
      for (Vertex v : group) out.class_of[v] = static_cast<int>(out.members.size());
      out.members.push_back(group);
      continue;
    }
    Vertex v = group.front();
    std::vector<Vertex> key = nbrs;
    key.insert(std::upper_bound(key.begin(), key.end(), v), v);
    closed[key].push_back(v);
  }
  for (auto& [key, group] : closed) {
    std::sort(group.begin(), group.end());
    for (Vertex v : group) out.class_of[v] = static_cast<int>(out.members.size());
    out.members.push_back(group);
  }
  return out;
}

namespace {

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& words) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
      h ^= h >> 31;
    }
    return static_cast<std::size_t>(h);
  }
};

using Memo = std::unordered_set<std::vector<std::uint64_t>, WordsHash>;

constexpr std::size_t kMaxMemoEntries = 4'000'000;

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::atomic<bool> found{false};
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::mutex result_mutex;
  std::vector<Vertex> result;
};

// Bookkeeping common to both search directions: budget, twins, hint ranks.
class SearchBase {
 protected:
  SearchBase(const Graph& g, const PrefixSearchConfig& config, const TwinClasses& twins,
             SharedState& shared)
      : g_(g),
        config_(config),
        twins_(twins),
        shared_(shared),
        n_(g.num_vertices()),
        placed_in_class_(twins.members.size(), 0),
        hint_rank_(n_, n_),
        bfs_(n_) {
    for (std::size_t i = 0; i < config.hint.size(); ++i) {
      hint_rank_[config.hint[i]] = static_cast<int>(i);
    }
  }

  bool charge_node() {
    std::uint64_t used = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (used > config_.budget.max_nodes) {
      shared_.exhausted = true;
      return false;
    }
    if (config_.budget.time_limit && (used & 255) == 0) {
      auto elapsed = std::chrono::steady_clock::now() - shared_.start;
      if (elapsed > *config_.budget.time_limit) {
        shared_.exhausted = true;
        return false;
      }
    }
    return true;
  }

  bool stopped() const { return shared_.exhausted || shared_.found; }

  void report(std::vector<Vertex> order) {
    std::lock_guard lock(shared_.result_mutex);
    if (!shared_.found) {
      shared_.found = true;
      shared_.result = std::move(order);
    }
  }

  void remember(Memo& memo, std::vector<std::uint64_t> key) {
    if (!shared_.exhausted && memo.size() < kMaxMemoEntries) memo.insert(std::move(key));
  }

  // Twins must appear in increasing id order in the final order; `from_back`
  // flips which member is next when the order grows from its end.
  bool twin_allowed(Vertex v, bool from_back) const {
    if (!config_.twin_symmetry) return true;
    const auto& members = twins_.members[twins_.class_of[v]];
    int taken = placed_in_class_[twins_.class_of[v]];
    Vertex next = from_back ? members[members.size() - 1 - taken] : members[taken];
    return next == v;
  }
  void count_twin(Vertex v, int delta) {
    if (config_.twin_symmetry) placed_in_class_[twins_.class_of[v]] += delta;
  }

  std::vector<std::uint64_t> set_words(const std::vector<char>& in_set) const {
    std::vector<std::uint64_t> words((n_ + 63) / 64, 0);
    for (Vertex v = 0; v < n_; ++v) {
      if (in_set[v]) words[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    return words;
  }

  const Graph& g_;
  const PrefixSearchConfig& config_;
  const TwinClasses& twins_;
  SharedState& shared_;
  int n_;
  std::vector<int> placed_in_class_;
  std::vector<int> hint_rank_;
  BoundedBfs bfs_;
  Memo memo_;
};

// col and adm: grow the order from the front. Once v is placed, everything
// about its reach and its backconnectivity is fixed, and whether that stays
// feasible depends only on the placed set.
class ForwardSearch : SearchBase {
 public:
  ForwardSearch(const Graph& g, const PrefixSearchConfig& config, const TwinClasses& twins,
                SharedState& shared)
      : SearchBase(g, config, twins, shared), sigma_(n_), placed_(n_, 0) {}

  std::vector<Vertex> root_candidates() { return analyze().candidates; }

  void run_from(Vertex first) {
    if (place(first)) dfs();
  }
  void run() { dfs(); }

 private:
  struct NodeInfo {
    std::vector<int> score;
    std::vector<Vertex> candidates;
    int lower_bound = 0;
  };

  // Auxiliary graph on unplaced vertices: x ~ y when a path of length <= r
  // joins them through placed vertices only. Whichever of x, y comes first
  // reaches the other, so its degeneracy bounds the final value from below.
  // For adm only direct edges are certain to give disjoint paths.
  NodeInfo analyze() {
    NodeInfo info;
    info.score.assign(n_, 0);
    const int r = config_.objective == Parameter::adm ? 1 : config_.radius;
    std::vector<std::vector<Vertex>> aux(n_);
    std::vector<Vertex> unplaced;
    for (Vertex x = 0; x < n_; ++x) {
      if (placed_[x]) continue;
      unplaced.push_back(x);
      bfs_.run(
          g_, x, r, [&](Vertex w) { return placed_[w] != 0; },
          [&](Vertex w, int) {
            if (!placed_[w]) aux[x].push_back(w);
          });
      info.score[x] = static_cast<int>(aux[x].size());
    }
    info.lower_bound = peel_bound(unplaced, aux);

    for (Vertex x : unplaced) {
      if (!twin_allowed(x, false)) continue;
      // For col the score is exactly the reach x would get if placed now.
      if (config_.objective == Parameter::col && info.score[x] > config_.threshold) continue;
      info.candidates.push_back(x);
    }
    std::stable_sort(info.candidates.begin(), info.candidates.end(), [&](Vertex a, Vertex b) {
      if (info.score[a] != info.score[b]) return info.score[a] < info.score[b];
      return hint_rank_[a] < hint_rank_[b];
    });
    return info;
  }

  int peel_bound(const std::vector<Vertex>& unplaced, const std::vector<std::vector<Vertex>>& aux) {
    std::vector<int> deg(n_, 0);
    std::vector<char> gone(n_, 1);
    for (Vertex x : unplaced) {
      deg[x] = static_cast<int>(aux[x].size());
      gone[x] = 0;
    }
    int best = 0;
    for (std::size_t step = 0; step < unplaced.size(); ++step) {
      Vertex pick = -1;
      for (Vertex x : unplaced) {
        if (!gone[x] && (pick < 0 || deg[x] < deg[pick])) pick = x;
      }
      best = std::max(best, deg[pick]);
      if (best > config_.threshold) return best;
      gone[pick] = 1;
      for (Vertex y : aux[pick]) {
        if (!gone[y]) --deg[y];
      }
    }
    return best;
  }

  bool place(Vertex v) {
    sigma_.place(v);
    placed_[v] = 1;
    count_twin(v, +1);
    if (config_.objective == Parameter::adm) {
      return exact_bcon(g_, sigma_, v, config_.radius, config_.max_paths) <= config_.threshold;
    }
    return true;  // col candidates were filtered on their exact reach
  }

  void undo(Vertex v) {
    count_twin(v, -1);
    placed_[v] = 0;
    sigma_.unplace_last();
  }

  bool dfs() {
    if (sigma_.is_total()) {
      report({sigma_.placed().begin(), sigma_.placed().end()});
      return true;
    }
    if (stopped() || !charge_node()) return false;
    auto key = set_words(placed_);
    if (memo_.count(key)) return false;

    NodeInfo info = analyze();
    if (info.lower_bound <= config_.threshold) {
      for (Vertex v : info.candidates) {
        bool ok = place(v);
        if (ok && dfs()) return true;
        undo(v);
        if (stopped()) return false;
      }
    }
    remember(memo_, std::move(key));
    return false;
  }

  PrefixOrder sigma_;
  std::vector<char> placed_;
};

// wcol: grow the order from the back. When v becomes the last of the
// still-open set U, v joins wreach(u) for exactly those u in U that reach v
// through U within r steps, whatever order U later gets. So counters on the
// open vertices only ever grow, and a closed vertex's counter is its final
// weak reach.
class BackwardWcolSearch : SearchBase {
 public:
  BackwardWcolSearch(const Graph& g, const PrefixSearchConfig& config, const TwinClasses& twins,
                     SharedState& shared)
      : SearchBase(g, config, twins, shared), open_(n_, 1), count_(n_, 0) {}

  std::vector<Vertex> root_candidates() { return candidates(); }

  void run_from(Vertex last) {
    if (close(last)) dfs();
  }
  void run() { dfs(); }

 private:
  // Vertices v joins the weak reach of if it is closed now.
  void hits_of(Vertex v, std::vector<Vertex>& out) {
    out.clear();
    bfs_.run(
        g_, v, config_.radius, [&](Vertex w) { return open_[w] != 0; },
        [&](Vertex w, int) {
          if (open_[w]) out.push_back(w);
        });
  }

  std::vector<Vertex> candidates() {
    std::vector<Vertex> out;
    std::vector<int> score(n_, 0);
    std::vector<Vertex> hits;
    for (Vertex v = 0; v < n_; ++v) {
      if (!open_[v] || !twin_allowed(v, true)) continue;
      hits_of(v, hits);
      bool ok = true;
      int slack = config_.threshold;
      for (Vertex u : hits) {
        if (count_[u] + 1 > config_.threshold) ok = false;
        slack = std::min(slack, config_.threshold - count_[u] - 1);
      }
      if (!ok) continue;
      // Prefer closing vertices that touch few open vertices, then those
      // that leave the most room.
      score[v] = static_cast<int>(hits.size()) * (config_.threshold + 1) - slack;
      out.push_back(v);
    }
    std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
      if (score[a] != score[b]) return score[a] < score[b];
      return hint_rank_[a] > hint_rank_[b];
    });
    return out;
  }

  // Whatever order the open set gets, its first vertex u weakly reaches all
  // of its open neighbors. Peeling the vertex of least count + open degree
  // gives the best such bound over all orders of the open set.
  int peel_bound() {
    std::vector<int> key(n_, 0);
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n_; ++v) {
      if (!open_[v]) continue;
      rest.push_back(v);
      key[v] = count_[v];
      for (Vertex w : g_.neighbors(v)) key[v] += open_[w];
    }
    std::vector<char> gone(n_, 0);
    int best = 0;
    for (std::size_t step = 0; step < rest.size(); ++step) {
      Vertex pick = -1;
      for (Vertex v : rest) {
        if (!gone[v] && (pick < 0 || key[v] < key[pick])) pick = v;
      }
      best = std::max(best, key[pick]);
      if (best > config_.threshold) return best;
      gone[pick] = 1;
      for (Vertex w : g_.neighbors(pick)) {
        if (open_[w] && !gone[w]) --key[w];
      }
    }
    return best;
  }

  bool close(Vertex v) {
    open_[v] = 0;
    suffix_.push_back(v);
    count_twin(v, +1);
    hits_of(v, scratch_);
    bool ok = true;
    for (Vertex u : scratch_) ok = ++count_[u] <= config_.threshold && ok;
    trail_.push_back(scratch_);
    return ok;
  }

  void reopen(Vertex v) {
    for (Vertex u : trail_.back()) --count_[u];
    trail_.pop_back();
    count_twin(v, -1);
    suffix_.pop_back();
    open_[v] = 1;
  }

  std::vector<std::uint64_t> key() const {
    auto words = set_words(open_);
    // Counters never exceed the threshold, so this width is lossless.
    const int bits = config_.threshold < 0xff ? 8 : 32;
    std::uint64_t acc = 0;
    int filled = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (!open_[v]) continue;
      acc |= static_cast<std::uint64_t>(count_[v]) << (bits * filled);
      if (++filled == 64 / bits) {
        words.push_back(acc);
        acc = 0;
        filled = 0;
      }
    }
    if (filled) words.push_back(acc);
    return words;
  }

  bool dfs() {
    if (static_cast<int>(suffix_.size()) == n_) {
      report({suffix_.rbegin(), suffix_.rend()});
      return true;
    }
    if (stopped() || !charge_node()) return false;
    auto state = key();
    if (memo_.count(state)) return false;
    if (peel_bound() <= config_.threshold) {
      for (Vertex v : candidates()) {
        bool ok = close(v);
        if (ok && dfs()) return true;
        reopen(v);
        if (stopped()) return false;
      }
    }
    remember(memo_, std::move(state));
    return false;
  }

  std::vector<char> open_;
  std::vector<int> count_;
  std::vector<Vertex> suffix_;
  std::vector<std::vector<Vertex>> trail_;
  std::vector<Vertex> scratch_;
};

template <class Search>
void run_search(const Graph& g, const PrefixSearchConfig& config, const TwinClasses& twins,
                SharedState& shared) {
  if (config.threads <= 1) {
    Search(g, config, twins, shared).run();
    return;
  }
  std::vector<Vertex> firsts = Search(g, config, twins, shared).root_candidates();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (!shared.found && !shared.exhausted) {
      std::size_t i = next.fetch_add(1);
      if (i >= firsts.size()) break;
      Search(g, config, twins, shared).run_from(firsts[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < config.threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace

PrefixSearchOutcome prefix_search(const Graph& g, const PrefixSearchConfig& config) {
  if (config.radius < 1) throw std::invalid_argument("radius must be at least 1");
  if (config.threshold < 0) throw std::invalid_argument("threshold must be non-negative");
  if (config.budget.max_nodes == 0) throw std::invalid_argument("node budget must be positive");

  PrefixSearchOutcome outcome;
  if (g.num_vertices() == 0) {
    outcome.answer = Answer::yes;
    return outcome;
  }
  TwinClasses twins = config.twin_symmetry ? twin_classes(g) : TwinClasses{};
  SharedState shared;
  if (config.objective == Parameter::wcol) {
    run_search<BackwardWcolSearch>(g, config, twins, shared);
  } else {
    run_search<ForwardSearch>(g, config, twins, shared);
  }

  outcome.nodes = std::min<std::uint64_t>(shared.nodes, config.budget.max_nodes);
  if (shared.found) {
    outcome.answer = Answer::yes;
    outcome.order = std::move(shared.result);
  } else if (shared.exhausted) {
    outcome.answer = Answer::budget_exhausted;
  } else {
    outcome.answer = Answer::no;
  }
  return outcome;
}

}  // namespace gencol::detail
