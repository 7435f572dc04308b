#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "expander/graph.hpp"
#include "expander/spectral.hpp"

namespace expander::expansion {

/// Largest vertex count accepted by the exhaustive search.
inline constexpr std::size_t kMaxExhaustiveVertices = 24;

/// Number of edges (with multiplicity) with exactly one endpoint in F.
std::size_t boundary_size(const Graph& g, std::span<const Vertex> subset);

struct ExpansionResult {
  double h = 0.0;
  std::size_t boundary = 0;  // |dF| of the witness
  std::vector<Vertex> witness;
};

/// min |dF|/|F| over 0 < |F| <= n/2 by exhaustive enumeration. Among
/// minimizers the witness is the lexicographically least sorted vertex list.
ExpansionResult expanding_constant_exact(const Graph& g);

/// Lexicographic order of the ascending vertex lists of two bit sets.
bool subset_lex_less(std::uint32_t a, std::uint32_t b);

struct IsoperimetricReport {
  std::size_t k = 0;
  double lambda2 = 0.0;
  double lower = 0.0;  // (k - lambda2) / 2
  double h = 0.0;
  double upper = 0.0;  // sqrt(2k (k - lambda2))
  std::vector<Vertex> witness;
  bool holds = false;  // within 1e-9 on both sides
};

/// Requires a connected, regular, loop-free graph with n <= 24.
IsoperimetricReport isoperimetric_check(const Graph& g,
                                        const spectral::SpectralOptions& options = {});

}  // namespace expander::expansion
