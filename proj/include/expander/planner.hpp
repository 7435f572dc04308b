#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "expander/bounds.hpp"
#include "expander/graph.hpp"
#include "expander/numtheory.hpp"
#include "expander/spectral.hpp"

namespace expander::planner {

using Json = nlohmann::ordered_json;

enum class Strategy { Matching, K2Product };

std::string_view to_string(Strategy strategy);
Strategy parse_strategy(std::string_view text);

/// Base prime that the LPS construction can actually realize: the largest
/// p <= k - 1 with p = 1 (mod 4).
struct BuildablePlan {
  std::uint64_t k = 0;
  std::uint64_t p = 0;
  std::uint64_t increments = 0;
};

struct Plan {
  nt::PrimePlan theoretical;
  BuildablePlan buildable;
};

/// Throws ValidationError for k < 3 or when no p >= 5 is available (k <= 5).
Plan plan(std::uint64_t k);

/// One construction step; the chain replays to the certified graph.
struct ProvenanceStep {
  std::string op;  // "lps", "matching_increment", "k2_product", "edge_list"
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::size_t k = 0;  // regularity after the step (0 when irregular)
  std::size_t n = 0;  // vertex count after the step
};

Json to_json(const ProvenanceStep& step);
std::vector<ProvenanceStep> provenance_from_json(const Json& steps);

/// Rebuilds a graph from an "lps"-rooted provenance chain.
Graph replay(std::span<const ProvenanceStep> steps);

struct BoundEntry {
  std::string model;
  bounds::Quantity quantity = bounds::Quantity::Lambda2Upper;
  double value = 0.0;
  double clamped = 0.0;  // min(value, k) for lambda_2 bounds, max(value, 0) for gaps
  bool valid = false;    // the inequality applies to the executed construction
  bool conditional = false;
  bool advisory = false;
  bool holds = false;    // measured values satisfy it, with residual slack
};

struct ExpansionEntry {
  double h = 0.0;
  std::vector<Vertex> witness;
  double lower = 0.0;
  double upper = 0.0;
};

struct PlanRecord {
  Strategy strategy = Strategy::Matching;
  std::uint64_t theoretical_p = 0;
  std::uint64_t executed_p = 0;
  std::uint64_t q = 0;
  std::uint64_t increments = 0;
};

struct Certificate {
  int version = 1;
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<ProvenanceStep> provenance;
  std::optional<PlanRecord> plan;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda_n = 0.0;
  double spectral_gap = 0.0;
  bool ramanujan = false;
  bool bipartite = false;
  double residual = 0.0;
  spectral::SolverMethod method = spectral::SolverMethod::Dense;
  std::vector<BoundEntry> bounds;
  std::optional<ExpansionEntry> expansion;

  Json to_json() const;
  /// Canonical serialized form (two-space indent, trailing newline).
  std::string dump() const;
};

struct PlannerOptions {
  std::uint64_t q_max = 101;
  spectral::SpectralOptions spectral;
  bounds::BoundModel bound_model;
};

/// Measures lambda_1, lambda_2, lambda_n of a connected regular graph and
/// records the Ramanujan test; adds the exact expansion report for n <= 24.
Certificate certify(const Graph& g, std::vector<ProvenanceStep> provenance = {},
                    const spectral::SpectralOptions& options = {});

/// Smallest prime q = 1 (mod 4), q != p, q > 2 sqrt(p), q <= q_max, whose
/// LPS graph has at least min_vertices vertices.
std::uint64_t choose_q(std::uint64_t p, std::size_t min_vertices, std::uint64_t q_max);

struct Construction {
  Graph graph;
  Certificate certificate;
};

Construction construct(std::uint64_t k, std::size_t min_vertices, Strategy strategy,
                       const PlannerOptions& options = {});

struct StrategyMeasurement {
  std::size_t n = 0;
  double lambda2 = 0.0;
  double gap = 0.0;
  double previous_plus_one = 0.0;  // lambda_2 of the previous step + 1
  double residual = 0.0;
};

struct CompareRow {
  std::size_t step = 0;
  std::size_t k = 0;
  StrategyMeasurement matching;
  StrategyMeasurement k2product;
  double base_plus_steps = 0.0;      // lambda_2(base) + step
  double product_law_lambda2 = 0.0;  // iterated max(lambda_2 + 1, lambda_1 - 1)
  bool matching_within_bound = false;
};

struct CompareReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::size_t target_k = 0;
  std::vector<CompareRow> rows;

  Json to_json() const;
};

CompareReport compare_strategies(std::uint64_t p, std::uint64_t q, std::size_t target_k,
                                 const PlannerOptions& options = {});

}  // namespace expander::planner
