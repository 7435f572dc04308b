#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "expander/graph.hpp"

namespace expander::lps {

enum class GroupKind { PSL2, PGL2 };

std::string_view to_string(GroupKind kind);

/// Parameters of the Lubotzky-Phillips-Sarnak Cayley graph X^{p,q}.
struct LpsParams {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  int legendre_sign = 0;  // (p|q)
  GroupKind group = GroupKind::PGL2;
  std::size_t vertex_count = 0;
  bool bipartite = false;

  std::size_t regularity() const { return static_cast<std::size_t>(p + 1); }
};

/// Validates p != q, both prime and 1 mod 4, and q > 2 sqrt(p).
LpsParams lps_params(std::uint64_t p, std::uint64_t q);

/// 2x2 matrix over F_q, row major.
using Mat2 = std::array<std::uint64_t, 4>;

/// Scales m so that its first nonzero entry (row-major) is 1.
Mat2 projective_normalize(const Mat2& m, std::uint64_t q);

/// Generator matrices [[a0 + i a1, a2 + i a3], [-a2 + i a3, a0 - i a1]]
/// for each four-square tuple of p, with i^2 = -1 mod q, normalized.
std::vector<Mat2> lps_generators(const LpsParams& params);

/// Cayley graph on PSL_2(F_q) or PGL_2(F_q): g ~ s g for each generator.
/// Groups with q <= 31 are enumerated directly (vertices numbered in
/// increasing canonical-key order); larger groups are discovered by
/// breadth-first closure from the identity.
Graph build_lps(const LpsParams& params);
Graph build_lps(std::uint64_t p, std::uint64_t q);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph petersen_graph();

/// "complete(n)", "cycle(n)" or "petersen".
Graph small_ramanujan(std::string_view name);

}  // namespace expander::lps
