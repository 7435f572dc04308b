#include <sstream>

#include "doctest.h"
#include "expander/error.hpp"
#include "expander/graph.hpp"
#include "expander/lps.hpp"

using namespace expander;

TEST_CASE("from_edge_list canonicalizes") {
  const Graph g = Graph::from_edge_list(4, std::vector<Edge>{{3, 1}, {0, 1}, {1, 3}, {2, 0}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{0, 2});
  CHECK(g.edges()[2] == Edge{1, 3});
  CHECK(g.multiplicity(1, 3) == 2);
  CHECK(g.multiplicity(3, 1) == 2);
  CHECK_FALSE(g.is_simple());
  CHECK(g.degree(1) == 3);
  const auto nb = g.neighbors(1);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{0, 3, 3});
  CHECK_FALSE(g.has_edge(2, 3));
}

TEST_CASE("from_edge_list rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edge_list(0, std::vector<Edge>{}), ValidationError);
  CHECK_THROWS_AS(Graph::from_edge_list(3, std::vector<Edge>{{0, 3}}), ValidationError);
  CHECK_THROWS_AS(Graph::from_edge_list(3, std::vector<Edge>{{1, 1}}), ValidationError);
  const Graph isolated = Graph::from_edge_list(1, std::vector<Edge>{});
  CHECK(isolated.edge_count() == 0);
  CHECK(is_connected(isolated));
}

TEST_CASE("structural predicates") {
  const Graph c6 = lps::cycle_graph(6);
  CHECK(regularity(c6) == 2u);
  CHECK(is_connected(c6));
  CHECK(is_bipartite(c6));
  CHECK_FALSE(is_bipartite(lps::cycle_graph(5)));
  CHECK_FALSE(is_bipartite(lps::petersen_graph()));
  const Graph two = Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(component_count(two) == 2);
  CHECK_FALSE(is_connected(two));
  const Graph path = Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_FALSE(regularity(path).has_value());
}

TEST_CASE("cartesian_k2 layout") {
  const Graph k3 = lps::complete_graph(3);
  const Graph x = cartesian_k2(k3);
  CHECK(x.vertex_count() == 6);
  CHECK(x.edge_count() == 9);
  CHECK(regularity(x) == 3u);
  for (Vertex i = 0; i < 3; ++i) CHECK(x.has_edge(i, i + 3));
  CHECK(x.has_edge(3, 4));
  CHECK_FALSE(x.has_edge(0, 4));
}

TEST_CASE("complement and matching arithmetic") {
  const Graph c4 = lps::cycle_graph(4);
  const Graph comp = complement(c4);
  CHECK(comp.edge_count() == 2);
  CHECK(comp.has_edge(0, 2));
  CHECK(comp.has_edge(1, 3));
  const Matching m = Matching::from_pairs(4, {{0, 2}, {1, 3}});
  CHECK(m.is_perfect());
  const Graph k4 = add_matching(c4, m);
  CHECK(k4 == lps::complete_graph(4));
  CHECK(remove_matching(k4, m) == c4);
  CHECK_THROWS_AS(add_matching(k4, m), ValidationError);
  CHECK_THROWS_AS(remove_matching(c4, m), ValidationError);
  const Matching partial = Matching::from_pairs(4, {{0, 2}});
  CHECK_FALSE(partial.is_perfect());
  CHECK_THROWS_AS(add_matching(c4, partial), ValidationError);
  CHECK_THROWS_AS(Matching::from_pairs(4, {{0, 1}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(Matching::from_pairs(4, {{0, 0}}), ValidationError);
  CHECK_THROWS_AS(Matching::from_pairs(4, {{0, 4}}), ValidationError);
  const Graph multi = Graph::from_edge_list(2, std::vector<Edge>{{0, 1}, {0, 1}});
  CHECK_THROWS_AS(complement(multi), ValidationError);
}

TEST_CASE("edge list text format") {
  const Graph g = lps::cycle_graph(4);
  CHECK(to_edge_list(g) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
  std::istringstream in(to_edge_list(lps::petersen_graph()));
  CHECK(read_edge_list(in) == lps::petersen_graph());

  auto parse = [](const std::string& text) {
    std::istringstream s(text);
    return read_edge_list(s);
  };
  CHECK(parse("3 0\n").edge_count() == 0);
  CHECK_THROWS_AS(parse(""), ValidationError);
  CHECK_THROWS_AS(parse("3 1\n1 0\n"), ValidationError);      // u > v
  CHECK_THROWS_AS(parse("3 1\n0 3\n"), ValidationError);      // out of range
  CHECK_THROWS_AS(parse("3 2\n0 1\n"), ValidationError);      // too few edges
  CHECK_THROWS_AS(parse("3 1\n0 1\n1 2\n"), ValidationError); // trailing data
  CHECK_THROWS_AS(parse("3 1\n0 x\n"), ValidationError);
  CHECK_THROWS_AS(parse("0 0\n"), ValidationError);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), ValidationError);
}
