#include "expander/lps.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "expander/error.hpp"
#include "expander/numtheory.hpp"

namespace expander::lps {

namespace {

// Direct enumeration keeps a q^4 lookup table; above this the group is
// discovered by closure instead.
constexpr std::uint64_t kEnumerationLimit = 31;

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return a >= b ? a - b : a + q - b;
}

std::uint64_t det(const Mat2& m, std::uint64_t q) {
  return sub_mod(nt::mul_mod(m[0], m[3], q), nt::mul_mod(m[1], m[2], q), q);
}

Mat2 multiply(const Mat2& a, const Mat2& b, std::uint64_t q) {
  return {(a[0] * b[0] + a[1] * b[2]) % q, (a[0] * b[1] + a[1] * b[3]) % q,
          (a[2] * b[0] + a[3] * b[2]) % q, (a[2] * b[1] + a[3] * b[3]) % q};
}

std::uint64_t key(const Mat2& m, std::uint64_t q) {
  return ((m[0] * q + m[1]) * q + m[2]) * q + m[3];
}

bool in_group(const Mat2& m, const LpsParams& params) {
  const std::uint64_t d = det(m, params.q);
  if (d == 0) return false;
  if (params.group == GroupKind::PSL2)
    return nt::legendre(static_cast<std::int64_t>(d), params.q) == 1;
  return true;
}

std::size_t parse_size_argument(std::string_view name, std::string_view prefix) {
  std::string_view inner = name.substr(prefix.size());
  if (inner.empty() || inner.back() != ')')
    throw ValidationError("small_ramanujan: malformed name '" + std::string(name) + "'");
  inner.remove_suffix(1);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), value);
  if (ec != std::errc() || ptr != inner.data() + inner.size())
    throw ValidationError("small_ramanujan: malformed size in '" + std::string(name) + "'");
  return value;
}

}  // namespace

std::string_view to_string(GroupKind kind) {
  return kind == GroupKind::PSL2 ? "PSL2" : "PGL2";
}

LpsParams lps_params(std::uint64_t p, std::uint64_t q) {
  if (p == q) throw ValidationError("lps_params: p and q must differ");
  if (!nt::is_prime(p) || p % 4 != 1)
    throw ValidationError("lps_params: p = " + std::to_string(p) +
                          " is not a prime congruent to 1 mod 4");
  if (!nt::is_prime(q) || q % 4 != 1)
    throw ValidationError("lps_params: q = " + std::to_string(q) +
                          " is not a prime congruent to 1 mod 4");
  if (q * q <= 4 * p)
    throw ValidationError("lps_params: q = " + std::to_string(q) + " does not exceed 2 sqrt(" +
                          std::to_string(p) + ")");
  if (q > 1000) throw ValidationError("lps_params: q too large to enumerate");

  LpsParams params;
  params.p = p;
  params.q = q;
  params.legendre_sign = nt::legendre(static_cast<std::int64_t>(p), q);
  const std::size_t pgl_order = static_cast<std::size_t>(q) * (q * q - 1);
  if (params.legendre_sign == 1) {
    params.group = GroupKind::PSL2;
    params.vertex_count = pgl_order / 2;
    params.bipartite = false;
  } else {
    params.group = GroupKind::PGL2;
    params.vertex_count = pgl_order;
    params.bipartite = true;
  }
  return params;
}

Mat2 projective_normalize(const Mat2& m, std::uint64_t q) {
  std::size_t lead = 0;
  while (lead < 4 && m[lead] % q == 0) ++lead;
  if (lead == 4) throw ValidationError("projective_normalize: zero matrix");
  const std::uint64_t inv = nt::inverse_mod(m[lead], q);
  Mat2 out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = nt::mul_mod(m[i] % q, inv, q);
  return out;
}

std::vector<Mat2> lps_generators(const LpsParams& params) {
  const std::uint64_t q = params.q;
  const std::uint64_t i = nt::sqrt_mod(-1, q);
  auto lift = [q](std::int64_t v) { return nt::reduce_mod(v, q); };
  auto times_i = [&](std::int64_t v) { return nt::mul_mod(lift(v), i, q); };

  std::vector<Mat2> gens;
  for (const auto& t : nt::four_square_generators(params.p)) {
    const Mat2 m{(lift(t.a0) + times_i(t.a1)) % q, (lift(t.a2) + times_i(t.a3)) % q,
                 (lift(-t.a2) + times_i(t.a3)) % q, sub_mod(lift(t.a0), times_i(t.a1), q)};
    gens.push_back(projective_normalize(m, q));
  }
  return gens;
}

Graph build_lps(const LpsParams& params) {
  const std::uint64_t q = params.q;
  const std::vector<Mat2> gens = lps_generators(params);
  const Mat2 identity{1, 0, 0, 1};

  std::vector<Mat2> elements;
  elements.reserve(params.vertex_count);
  std::vector<Edge> edges;
  edges.reserve(params.vertex_count * gens.size() / 2);

  if (q <= kEnumerationLimit) {
    const std::uint64_t table_size = q * q * q * q;
    std::vector<Vertex> index(table_size, UINT32_MAX);
    for (std::uint64_t a = 0; a < q; ++a)
      for (std::uint64_t b = 0; b < q; ++b)
        for (std::uint64_t c = 0; c < q; ++c)
          for (std::uint64_t d = 0; d < q; ++d) {
            const Mat2 m{a, b, c, d};
            const std::uint64_t lead = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
            if (lead != 1 || !in_group(m, params)) continue;
            index[key(m, q)] = static_cast<Vertex>(elements.size());
            elements.push_back(m);
          }
    for (Vertex g = 0; g < elements.size(); ++g)
      for (const Mat2& s : gens) {
        const Vertex h = index[key(projective_normalize(multiply(s, elements[g], q), q), q)];
        if (h == UINT32_MAX) throw std::logic_error("build_lps: product left the group");
        if (g < h) edges.push_back({g, h});
      }
  } else {
    std::unordered_map<std::uint64_t, Vertex> index;
    index.reserve(params.vertex_count * 2);
    index.emplace(key(identity, q), 0);
    elements.push_back(identity);
    for (std::size_t head = 0; head < elements.size(); ++head) {
      const auto g = static_cast<Vertex>(head);
      for (const Mat2& s : gens) {
        const Mat2 h = projective_normalize(multiply(s, elements[head], q), q);
        auto [it, inserted] = index.emplace(key(h, q), static_cast<Vertex>(elements.size()));
        if (inserted) elements.push_back(h);
        if (g < it->second) edges.push_back({g, it->second});
      }
    }
  }

  if (elements.size() != params.vertex_count)
    throw std::logic_error("build_lps: found " + std::to_string(elements.size()) +
                           " group elements, expected " + std::to_string(params.vertex_count));
  Graph g = Graph::from_edge_list(elements.size(), std::move(edges));
  if (regularity(g) != params.regularity())
    throw std::logic_error("build_lps: Cayley graph is not (p+1)-regular");
  return g;
}

Graph build_lps(std::uint64_t p, std::uint64_t q) { return build_lps(lps_params(p, q)); }

Graph complete_graph(std::size_t n) {
  if (n < 2) throw ValidationError("complete(n) needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edge_list(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ValidationError("cycle(n) needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph::from_edge_list(n, std::move(edges));
}

Graph petersen_graph() {
  // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph::from_edge_list(10, std::move(edges));
}

Graph small_ramanujan(std::string_view name) {
  if (name == "petersen") return petersen_graph();
  if (name.starts_with("complete(")) return complete_graph(parse_size_argument(name, "complete("));
  if (name.starts_with("cycle(")) return cycle_graph(parse_size_argument(name, "cycle("));
  throw ValidationError("small_ramanujan: unknown graph '" + std::string(name) + "'");
}

}  // namespace expander::lps
