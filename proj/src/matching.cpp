#include "expander/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace expander {

namespace {

constexpr int kNone = -1;

// Edmonds' algorithm with explicit blossom bases (no physical contraction).
class BlossomSearch {
 public:
  explicit BlossomSearch(const Graph& g)
      : g_(g),
        n_(static_cast<int>(g.vertex_count())),
        match_(n_, kNone),
        parent_(n_, kNone),
        base_(n_),
        used_(n_, false),
        in_blossom_(n_, false),
        lca_mark_(n_, false) {}

  std::vector<int> run() {
    greedy_start();
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      const int end = find_augmenting_path(root);
      if (end != kNone) augment(end);
    }
    return match_;
  }

 private:
  void greedy_start() {
    for (int u = 0; u < n_; ++u) {
      if (match_[u] != kNone) continue;
      for (Vertex w : g_.neighbors(static_cast<Vertex>(u))) {
        const int v = static_cast<int>(w);
        if (match_[v] == kNone) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
  }

  int lowest_common_base(int a, int b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), false);
    for (;;) {
      a = base_[a];
      lca_mark_[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (lca_mark_[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    queue_.assign(1, root);

    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int v = queue_[head];
      for (Vertex w : g_.neighbors(static_cast<Vertex>(v))) {
        const int to = static_cast<int>(w);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const int b = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
              used_[i] = true;
              queue_.push_back(i);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = true;
          queue_.push_back(match_[to]);
        }
      }
    }
    return kNone;
  }

  void augment(int v) {
    while (v != kNone) {
      const int pv = parent_[v];
      const int next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
  std::vector<bool> lca_mark_;
  std::vector<int> queue_;
};

std::size_t require_even_regular(const Graph& g, const char* op) {
  const auto k = regularity(g);
  if (!k) throw ValidationError(std::string(op) + ": graph is not regular");
  if (g.vertex_count() % 2 != 0)
    throw ValidationError(std::string(op) + ": vertex count " +
                          std::to_string(g.vertex_count()) + " is odd");
  return *k;
}

}  // namespace

Matching maximum_matching(const Graph& g) {
  const std::vector<int> mate = BlossomSearch(g).run();
  std::vector<Edge> pairs;
  for (int u = 0; u < static_cast<int>(mate.size()); ++u)
    if (mate[u] > u) pairs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(mate[u])});
  for (const Edge& e : pairs)
    if (!g.has_edge(e.u, e.v)) throw std::logic_error("maximum_matching: pair is not an edge");
  return Matching::from_pairs(g.vertex_count(), std::move(pairs));
}

Matching perfect_matching(const Graph& g) {
  if (g.vertex_count() % 2 != 0)
    throw ValidationError("perfect_matching: vertex count " + std::to_string(g.vertex_count()) +
                          " is odd");
  Matching m = maximum_matching(g);
  if (!m.is_perfect()) {
    const std::string what = "no perfect matching: maximum matching has size " +
                             std::to_string(m.size()) + " on " +
                             std::to_string(g.vertex_count()) + " vertices";
    throw NoPerfectMatching(what, std::move(m));
  }
  return m;
}

RegularityStep increment_regularity(const Graph& g) {
  require_even_regular(g, "increment_regularity");
  if (!g.is_simple()) throw ValidationError("increment_regularity: graph is not simple");
  Matching m = perfect_matching(complement(g));
  Graph out = add_matching(g, m);
  return {std::move(out), std::move(m)};
}

RegularityStep decrement_regularity(const Graph& g) {
  require_even_regular(g, "decrement_regularity");
  Matching m = perfect_matching(g);
  Graph out = remove_matching(g, m);
  return {std::move(out), std::move(m)};
}

}  // namespace expander
