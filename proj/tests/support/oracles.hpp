// Independent reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "expander/graph.hpp"

namespace oracle {

using expander::Edge;
using expander::Graph;
using expander::Vertex;

using BigFloat = boost::multiprecision::cpp_bin_float_50;

// Sieve of Eratosthenes; is_prime[i] for 0 <= i <= limit.
inline std::vector<bool> sieve(std::uint64_t limit) {
  std::vector<bool> prime(limit + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (prime[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) prime[j] = false;
  return prime;
}

struct DeltaWitness {
  std::uint64_t p = 0;
  std::uint64_t gap = 0;
  std::uint64_t k = 0;
};

// Scans every k in [lo, hi] with sieve lookups; the maximum is compared
// exactly through gap^2 / p.
inline DeltaWitness max_delta_bruteforce(const std::vector<bool>& prime, std::uint64_t lo,
                                         std::uint64_t hi) {
  DeltaWitness best;
  std::uint64_t p = lo - 1;
  while (!prime[p]) --p;
  std::uint64_t next = p + 1;
  while (!prime[next]) ++next;
  for (std::uint64_t k = lo; k <= hi; ++k) {
    if (k - 1 > p && prime[k - 1]) {
      p = k - 1;
      next = p + 1;
      while (!prime[next]) ++next;
    }
    const std::uint64_t gap = next - p;
    const auto lhs = static_cast<unsigned __int128>(gap) * gap * (best.p ? best.p : 1);
    const auto rhs = static_cast<unsigned __int128>(best.gap) * best.gap * p;
    if (best.p == 0 || lhs > rhs) best = {p, gap, k};
  }
  return best;
}

inline std::uint64_t sqrt_mod_bruteforce(std::uint64_t a, std::uint64_t q) {
  a %= q;
  for (std::uint64_t x = 0; x < q; ++x)
    if (x * x % q == a) return x;
  return q;
}

struct Quad {
  std::int64_t a0, a1, a2, a3;
};

// Every integer solution of a0^2+a1^2+a2^2+a3^2 = p, unrestricted.
inline std::vector<Quad> four_squares_bruteforce(std::int64_t p) {
  std::vector<Quad> out;
  const auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(p))) + 1;
  for (std::int64_t a = -r; a <= r; ++a)
    for (std::int64_t b = -r; b <= r; ++b)
      for (std::int64_t c = -r; c <= r; ++c)
        for (std::int64_t d = -r; d <= r; ++d)
          if (a * a + b * b + c * c + d * d == p) out.push_back({a, b, c, d});
  return out;
}

// Size of a maximum matching by memoized search over vertex subsets (n <= 20).
inline std::size_t max_matching_size_bruteforce(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> memo(std::size_t{1} << n, -1);
  auto rec = [&](auto&& self, std::uint32_t used) -> int {
    if (memo[used] >= 0) return memo[used];
    Vertex v = 0;
    while (v < n && (used >> v & 1u)) ++v;
    if (v == n) return memo[used] = 0;
    int best = self(self, used | (1u << v));
    for (Vertex w : g.neighbors(v))
      if (!(used >> w & 1u)) best = std::max(best, 1 + self(self, used | (1u << v) | (1u << w)));
    return memo[used] = best;
  };
  return static_cast<std::size_t>(rec(rec, 0));
}

// min |dF| / |F| over all nonempty F with |F| <= n/2, by plain enumeration.
inline double expanding_constant_bruteforce(const Graph& g) {
  const std::size_t n = g.vertex_count();
  double best = INFINITY;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (2 * size > n) continue;
    std::size_t boundary = 0;
    for (const Edge& e : g.edges())
      if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) ++boundary;
    best = std::min(best, static_cast<double>(boundary) / static_cast<double>(size));
  }
  return best;
}

// Random simple k-regular graph: a circulant seed scrambled by double-edge
// swaps. Requires k < n and n k even. Retries until connected.
inline Graph random_regular_graph(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  for (;;) {
    std::set<std::pair<Vertex, Vertex>> edges;
    auto add = [&](std::size_t a, std::size_t b) {
      const auto u = static_cast<Vertex>(std::min(a, b));
      const auto v = static_cast<Vertex>(std::max(a, b));
      edges.insert({u, v});
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t d = 1; d <= k / 2; ++d) add(i, (i + d) % n);
    if (k % 2 == 1)
      for (std::size_t i = 0; i < n / 2; ++i) add(i, i + n / 2);

    std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
    std::uniform_int_distribution<std::size_t> pick(0, list.size() - 1);
    for (std::size_t step = 0; step < 10 * list.size(); ++step) {
      const std::size_t i = pick(rng);
      const std::size_t j = pick(rng);
      auto [a, b] = list[i];
      auto [c, d] = list[j];
      if (rng() & 1u) std::swap(c, d);
      if (a == c || a == d || b == c || b == d) continue;
      const std::pair<Vertex, Vertex> e1{std::min(a, c), std::max(a, c)};
      const std::pair<Vertex, Vertex> e2{std::min(b, d), std::max(b, d)};
      if (edges.count(e1) || edges.count(e2)) continue;
      edges.erase(list[i]);
      edges.erase(list[j]);
      edges.insert(e1);
      edges.insert(e2);
      list[i] = e1;
      list[j] = e2;
    }
    std::vector<Edge> out;
    for (const auto& [u, v] : edges) out.push_back({u, v});
    Graph g = Graph::from_edge_list(n, std::move(out));
    if (expander::is_connected(g)) return g;
  }
}

inline Eigen::MatrixXd random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd a(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) a(i, j) = a(j, i) = normal(rng);
  return a;
}

// Same quantities as the bounds module, evaluated in 50 decimal digits.
inline BigFloat trudgian_hp(std::uint64_t k) {
  const BigFloat kk(k);
  const BigFloat lg = log(kk - 1);
  return kk * (1 - 2 / (111 * lg * lg)) - 2 * sqrt(kk - 1);
}

inline BigFloat bhp_hp(std::uint64_t k) {
  const BigFloat kk(k);
  return kk - 2 * (1 + pow(kk, BigFloat(25) / 1000)) * sqrt(kk - 1);
}

inline BigFloat rh_hp(std::uint64_t k, double c) {
  const BigFloat x = BigFloat(k) - 1;
  return BigFloat(k) - 2 * (1 + BigFloat(c) * log(x)) * sqrt(x);
}

inline double relative_error(double value, const BigFloat& exact) {
  const BigFloat diff = abs(BigFloat(value) - exact);
  return static_cast<double>(diff / abs(exact));
}

}  // namespace oracle
