#include "expander/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "expander/error.hpp"

namespace expander {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

// Colors by BFS; returns the component id of every vertex.
std::vector<std::size_t> component_ids(const Graph& g, std::size_t& count) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp(n, n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    comp[s] = count;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (comp[w] == n) {
          comp[w] = count;
          queue.push_back(w);
        }
      }
    }
    ++count;
  }
  return comp;
}

}  // namespace

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> pairs) {
  return from_edge_list(n, std::vector<Edge>(pairs.begin(), pairs.end()));
}

Graph Graph::from_edge_list(std::size_t n, std::vector<Edge> pairs) {
  if (n == 0) throw ValidationError("graph must have at least one vertex");
  if (n > static_cast<std::size_t>(UINT32_MAX)) throw ValidationError("graph too large");
  for (Edge& e : pairs) {
    if (e.u >= n || e.v >= n)
      throw ValidationError("edge " + pair_text(e.u, e.v) + " has an endpoint outside [0, " +
                            std::to_string(n) + ")");
    if (e.u == e.v) throw ValidationError("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(pairs.begin(), pairs.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(pairs);
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[fill[e.u]++] = e.v;
    g.adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  return g;
}

std::size_t Graph::multiplicity(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return 0;
  auto nb = neighbors(u);
  auto [lo, hi] = std::equal_range(nb.begin(), nb.end(), v);
  return static_cast<std::size_t>(hi - lo);
}

bool Graph::is_simple() const {
  return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
}

Matching Matching::from_pairs(std::size_t n, std::vector<Edge> pairs) {
  std::vector<bool> used(n, false);
  for (Edge& e : pairs) {
    if (e.u >= n || e.v >= n)
      throw ValidationError("matching pair " + pair_text(e.u, e.v) + " out of range");
    if (e.u == e.v) throw ValidationError("matching pair " + pair_text(e.u, e.v) + " is a loop");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (used[e.u] || used[e.v])
      throw ValidationError("matching pairs are not disjoint at " + pair_text(e.u, e.v));
    used[e.u] = used[e.v] = true;
  }
  std::sort(pairs.begin(), pairs.end());
  Matching m;
  m.n_ = n;
  m.pairs_ = std::move(pairs);
  return m;
}

std::optional<std::size_t> regularity(const Graph& g) {
  const std::size_t k = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

std::size_t component_count(const Graph& g) {
  std::size_t count = 0;
  component_ids(g, count);
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph cartesian_k2(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> out;
  out.reserve(2 * g.edge_count() + n);
  for (const Edge& e : g.edges()) {
    out.push_back(e);
    out.push_back({e.u + n, e.v + n});
  }
  for (Vertex i = 0; i < n; ++i) out.push_back({i, i + n});
  return Graph::from_edge_list(2 * g.vertex_count(), std::move(out));
}

Graph complement(const Graph& g) {
  if (!g.is_simple()) throw ValidationError("complement requires a simple graph");
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> out;
  const std::size_t total = static_cast<std::size_t>(n) * (n - 1) / 2;
  out.reserve(total - g.edge_count());
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      out.push_back({u, v});
    }
  }
  return Graph::from_edge_list(g.vertex_count(), std::move(out));
}

Graph add_matching(const Graph& g, const Matching& m) {
  if (m.vertex_count() != g.vertex_count() || !m.is_perfect())
    throw ValidationError("add_matching: matching is not perfect on this vertex set");
  std::vector<Edge> out(g.edges().begin(), g.edges().end());
  for (const Edge& e : m.pairs()) {
    if (g.has_edge(e.u, e.v))
      throw ValidationError("add_matching: pair " + pair_text(e.u, e.v) + " is already an edge");
    out.push_back(e);
  }
  return Graph::from_edge_list(g.vertex_count(), std::move(out));
}

Graph remove_matching(const Graph& g, const Matching& m) {
  if (m.vertex_count() != g.vertex_count() || !m.is_perfect())
    throw ValidationError("remove_matching: matching is not perfect on this vertex set");
  std::vector<Edge> out(g.edges().begin(), g.edges().end());
  // Both sequences are sorted; drop one copy of each matched pair.
  std::vector<Edge> kept;
  kept.reserve(out.size());
  auto it = m.pairs().begin();
  for (const Edge& e : out) {
    if (it != m.pairs().end() && *it == e) {
      ++it;
      continue;
    }
    kept.push_back(e);
  }
  if (it != m.pairs().end())
    throw ValidationError("remove_matching: pair " + pair_text(it->u, it->v) +
                          " is not an edge");
  return Graph::from_edge_list(g.vertex_count(), std::move(kept));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream s;
  write_edge_list(s, g);
  return s.str();
}

Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 1 || m < 0)
    throw ValidationError("edge list: bad header, expected \"n m\" with n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v))
      throw ValidationError("edge list: expected " + std::to_string(m) + " edges, got " +
                            std::to_string(i));
    if (u < 0 || v >= n || u >= v)
      throw ValidationError("edge list: line " + std::to_string(i + 2) +
                            " violates 0 <= u < v < n");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string trailing;
  if (in >> trailing) throw ValidationError("edge list: trailing data after last edge");
  return Graph::from_edge_list(static_cast<std::size_t>(n), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file " + path);
  return read_edge_list(in);
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write graph file " + path);
  write_edge_list(out, g);
}

void write_matching(std::ostream& out, const Matching& m) {
  for (const Edge& e : m.pairs()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace expander
