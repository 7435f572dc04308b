#pragma once

#include "expander/error.hpp"
#include "expander/graph.hpp"

namespace expander {

/// Thrown when a perfect matching is required but none exists. Carries the
/// maximum matching that was found.
class NoPerfectMatching : public ValidationError {
 public:
  NoPerfectMatching(const std::string& what, Matching best)
      : ValidationError(what), best_(std::move(best)) {}
  const Matching& maximum_matching() const { return best_; }

 private:
  Matching best_;
};

/// Maximum cardinality matching by Edmonds' blossom algorithm. Vertices are
/// processed in ascending order and augmenting paths are grown breadth
/// first over sorted adjacency, so the result is a function of the graph.
Matching maximum_matching(const Graph& g);

/// Throws ValidationError for odd n and NoPerfectMatching when the maximum
/// matching leaves a vertex uncovered.
Matching perfect_matching(const Graph& g);

struct RegularityStep {
  Graph graph;
  Matching matching;
};

/// Adds a perfect matching of the complement: k-regular -> (k+1)-regular.
RegularityStep increment_regularity(const Graph& g);

/// Removes a perfect matching of g: k-regular -> (k-1)-regular.
RegularityStep decrement_regularity(const Graph& g);

}  // namespace expander
