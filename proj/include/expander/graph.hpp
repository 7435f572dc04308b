#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace expander {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Finite undirected loop-free multigraph on vertices 0..n-1.
///
/// The edge multiset is kept sorted, which gives every graph a canonical
/// edge order; adjacency lists are sorted ascending and repeat a neighbor
/// once per parallel edge. Values are immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Validates and canonicalizes. Pairs may be given in either orientation;
  /// duplicates become parallel edges. Throws ValidationError on n == 0,
  /// endpoints out of range, or loops.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs);
  static Graph from_edge_list(std::size_t n, std::vector<Edge> pairs);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::size_t multiplicity(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return multiplicity(u, v) > 0; }
  bool is_simple() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// Set of pairwise disjoint vertex pairs on a fixed vertex count.
class Matching {
 public:
  Matching() = default;

  /// Throws ValidationError when a vertex repeats, a pair is a loop, or an
  /// endpoint is out of range.
  static Matching from_pairs(std::size_t n, std::vector<Edge> pairs);

  std::size_t vertex_count() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  std::span<const Edge> pairs() const { return pairs_; }
  bool is_perfect() const { return n_ % 2 == 0 && 2 * pairs_.size() == n_; }

  bool operator==(const Matching&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> pairs_;
};

/// k when every vertex has degree k.
std::optional<std::size_t> regularity(const Graph& g);

bool is_connected(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_bipartite(const Graph& g);

/// X \square K_2: copy 0 on 0..n-1, copy 1 on n..2n-1, rung {i, n+i}.
Graph cartesian_k2(const Graph& g);

/// Simple complement. Throws ValidationError for multigraphs.
Graph complement(const Graph& g);

/// Requires a perfect matching none of whose pairs is already an edge.
Graph add_matching(const Graph& g, const Matching& m);

/// Requires a perfect matching all of whose pairs are edges of g; removes
/// one copy of each.
Graph remove_matching(const Graph& g, const Matching& m);

/// Edge-list text: "n m" then m lines "u v" with u < v, in canonical order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const Graph& g);

/// One "u v" line per pair, ascending.
void write_matching(std::ostream& out, const Matching& m);

}  // namespace expander
