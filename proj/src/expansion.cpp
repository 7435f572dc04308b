#include "expander/expansion.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "expander/error.hpp"

namespace expander::expansion {

std::size_t boundary_size(const Graph& g, std::span<const Vertex> subset) {
  std::vector<bool> inside(g.vertex_count(), false);
  for (Vertex v : subset) {
    if (v >= g.vertex_count())
      throw ValidationError("boundary_size: vertex " + std::to_string(v) + " out of range");
    inside[v] = true;
  }
  std::size_t count = 0;
  for (const Edge& e : g.edges())
    if (inside[e.u] != inside[e.v]) ++count;
  return count;
}

bool subset_lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  const std::uint32_t low = diff & (~diff + 1);
  // Both lists agree below `low`. The one containing `low` continues with the
  // smaller element, unless the other has already ended (a proper prefix).
  const std::uint32_t above = ~((low << 1) - 1);
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

ExpansionResult expanding_constant_exact(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxExhaustiveVertices)
    throw ValidationError("expanding_constant_exact: n = " + std::to_string(n) +
                          " exceeds the exhaustive limit of " +
                          std::to_string(kMaxExhaustiveVertices));
  if (n < 2) throw ValidationError("expanding_constant_exact: needs at least two vertices");

  // Walk all subsets in Gray-code order, updating |F| and |dF| per toggle.
  std::uint32_t mask = 0;
  std::size_t size = 0;
  long long boundary = 0;
  std::uint32_t best_mask = 0;
  long long best_boundary = 0;
  std::size_t best_size = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto v = static_cast<Vertex>(std::countr_zero(step));
    long long inside = 0;
    for (Vertex w : g.neighbors(v))
      if (mask & (1U << w)) ++inside;
    const auto deg = static_cast<long long>(g.degree(v));
    if (mask & (1U << v)) {
      mask &= ~(1U << v);
      --size;
      boundary += 2 * inside - deg;
    } else {
      mask |= 1U << v;
      ++size;
      boundary += deg - 2 * inside;
    }
    if (size == 0 || 2 * size > n) continue;
    const long long lhs = boundary * static_cast<long long>(best_size);
    const long long rhs = best_boundary * static_cast<long long>(size);
    if (best_size == 0 || lhs < rhs || (lhs == rhs && subset_lex_less(mask, best_mask))) {
      best_mask = mask;
      best_boundary = boundary;
      best_size = size;
    }
  }

  ExpansionResult r;
  r.boundary = static_cast<std::size_t>(best_boundary);
  r.h = static_cast<double>(best_boundary) / static_cast<double>(best_size);
  for (Vertex v = 0; v < n; ++v)
    if (best_mask & (1U << v)) r.witness.push_back(v);
  return r;
}

IsoperimetricReport isoperimetric_check(const Graph& g, const spectral::SpectralOptions& options) {
  const auto k = regularity(g);
  if (!k) throw ValidationError("isoperimetric_check: graph is not regular");
  if (!is_connected(g)) throw ValidationError("isoperimetric_check: graph is not connected");
  if (g.vertex_count() > kMaxExhaustiveVertices)
    throw ValidationError("isoperimetric_check: graph too large for exact expansion");

  const spectral::Spectrum s = spectral::spectrum(g, options);
  const ExpansionResult e = expanding_constant_exact(g);

  IsoperimetricReport r;
  r.k = *k;
  r.lambda2 = s.values.size() > 1 ? s.values[1] : s.values[0];
  const double gap = static_cast<double>(r.k) - r.lambda2;
  r.lower = gap / 2.0;
  r.h = e.h;
  r.upper = std::sqrt(std::max(0.0, 2.0 * static_cast<double>(r.k) * gap));
  r.witness = e.witness;
  constexpr double kSlack = 1e-9;
  r.holds = r.lower - kSlack <= r.h && r.h <= r.upper + kSlack;
  return r;
}

}  // namespace expander::expansion
