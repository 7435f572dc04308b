#include <cmath>

#include "doctest.h"
#include "expander/error.hpp"
#include "expander/lps.hpp"
#include "expander/planner.hpp"

using namespace expander;

TEST_CASE("plan picks the buildable prime") {
  const auto p7 = planner::plan(7);
  CHECK(p7.theoretical.p == 5);
  CHECK(p7.buildable.p == 5);
  CHECK(p7.buildable.increments == 1);
  const auto p12 = planner::plan(12);
  CHECK(p12.theoretical.p == 11);
  CHECK(p12.buildable.p == 5);
  CHECK(p12.buildable.increments == 6);
  const auto p20 = planner::plan(20);
  CHECK(p20.buildable.p == 17);
  CHECK_THROWS_AS(planner::plan(5), ValidationError);
  CHECK_THROWS_AS(planner::plan(2), ValidationError);
}

TEST_CASE("choose_q") {
  CHECK(planner::choose_q(5, 1000, 101) == 13);
  CHECK(planner::choose_q(5, 10, 101) == 13);
  CHECK(planner::choose_q(13, 1000, 101) == 17);
  CHECK(planner::choose_q(5, 3000, 101) == 17);
  CHECK_THROWS_AS(planner::choose_q(5, 10'000'000, 101), ValidationError);
}

TEST_CASE("strategy parsing") {
  CHECK(planner::parse_strategy("matching") == planner::Strategy::Matching);
  CHECK(planner::parse_strategy("k2product") == planner::Strategy::K2Product);
  CHECK_THROWS_AS(planner::parse_strategy("random"), ValidationError);
}

TEST_CASE("certify small graphs") {
  const auto c = planner::certify(lps::petersen_graph());
  CHECK(c.k == 3);
  CHECK(c.n == 10);
  CHECK(c.lambda2 == doctest::Approx(1.0));
  CHECK(c.spectral_gap == doctest::Approx(2.0));
  CHECK(c.ramanujan);
  CHECK_FALSE(c.bipartite);
  REQUIRE(c.expansion.has_value());
  CHECK(c.expansion->h == doctest::Approx(1.0));

  const auto j = c.to_json();
  for (const char* key : {"version", "k", "n", "provenance", "lambda1", "lambda2", "lambda_n",
                          "spectral_gap", "ramanujan", "bipartite", "residual", "method", "bounds",
                          "expansion"})
    CHECK(j.contains(key));
  CHECK(c.dump().back() == '\n');

  const auto big = planner::certify(lps::cycle_graph(30));
  CHECK_FALSE(big.expansion.has_value());
  CHECK(big.to_json()["expansion"].is_null());

  const Graph two = Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(planner::certify(two), ValidationError);
  const Graph path = Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(planner::certify(path), ValidationError);
}

TEST_CASE("construct and replay") {
  const auto built = planner::construct(7, 1000, planner::Strategy::Matching);
  const auto& c = built.certificate;
  CHECK(c.k == 7);
  CHECK(c.n == 2184);
  CHECK(regularity(built.graph) == 7u);
  CHECK(c.lambda2 <= 2.0 * std::sqrt(5.0) + 1.0 + 1e-6);
  REQUIRE(c.provenance.size() == 2);
  CHECK(c.provenance[0].op == "lps");
  CHECK(c.provenance[1].op == "matching_increment");
  CHECK(planner::replay(c.provenance) == built.graph);

  const auto round = planner::provenance_from_json(c.to_json()["provenance"]);
  CHECK(planner::replay(round) == built.graph);
  for (const auto& b : c.bounds)
    if (b.valid) CHECK(b.holds);
}

TEST_CASE("construct with the product strategy") {
  const auto built = planner::construct(7, 100, planner::Strategy::K2Product);
  CHECK(built.certificate.k == 7);
  CHECK(built.certificate.n == 2 * 2184);
  CHECK(regularity(built.graph) == 7u);
  bool saw_law = false;
  for (const auto& b : built.certificate.bounds)
    if (b.model == "product_law") {
      saw_law = true;
      CHECK(b.holds);
    }
  CHECK(saw_law);
}

TEST_CASE("construct rejects impossible requests") {
  CHECK_THROWS_AS(planner::construct(4, 100, planner::Strategy::Matching), ValidationError);
  CHECK_THROWS_AS(planner::construct(7, 100'000'000, planner::Strategy::Matching),
                  ValidationError);
  std::vector<planner::ProvenanceStep> bad{{"matching_increment", 0, 0, 7, 10}};
  CHECK_THROWS_AS(planner::replay(bad), ValidationError);
}

TEST_CASE("compare strategies") {
  const auto r = planner::compare_strategies(5, 13, 8);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].k == 6);
  CHECK(r.rows[2].k == 8);
  for (const auto& row : r.rows) {
    CHECK(row.matching_within_bound);
    CHECK(row.k2product.lambda2 ==
          doctest::Approx(row.product_law_lambda2).epsilon(1e-8));
  }
  CHECK_THROWS_AS(planner::compare_strategies(5, 13, 5), ValidationError);
  CHECK_THROWS_AS(planner::compare_strategies(7, 13, 9), ValidationError);
}
