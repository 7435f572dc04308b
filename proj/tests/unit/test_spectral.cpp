#include <cmath>
#include <random>

#include "doctest.h"
#include "expander/error.hpp"
#include "expander/lps.hpp"
#include "expander/spectral.hpp"
#include "oracles.hpp"

using namespace expander;

TEST_CASE("closed-form spectra") {
  const auto k5 = spectral::spectrum(lps::complete_graph(5));
  CHECK(k5.values[0] == doctest::Approx(4.0));
  for (std::size_t i = 1; i < 5; ++i) CHECK(k5.values[i] == doctest::Approx(-1.0));
  CHECK(k5.residual < 1e-10);

  const std::size_t n = 12;
  const auto cyc = spectral::spectrum(lps::cycle_graph(n));
  std::vector<double> want;
  for (std::size_t j = 0; j < n; ++j) want.push_back(2.0 * std::cos(2.0 * M_PI * j / n));
  std::sort(want.begin(), want.end(), std::greater<>());
  for (std::size_t i = 0; i < n; ++i) CHECK(cyc.values[i] == doctest::Approx(want[i]));

  const auto pet = spectral::spectrum(lps::petersen_graph());
  CHECK(pet.values[0] == doctest::Approx(3.0));
  CHECK(pet.values[1] == doctest::Approx(1.0));
  CHECK(pet.values[5] == doctest::Approx(1.0));
  CHECK(pet.values[6] == doctest::Approx(-2.0));
}

TEST_CASE("large cycle exercises the extreme-vector path") {
  const std::size_t n = 700;
  const auto s = spectral::spectrum(lps::cycle_graph(n));
  CHECK(s.residual < 1e-8);
  CHECK(s.values[0] == doctest::Approx(2.0));
  CHECK(s.values[1] == doctest::Approx(2.0 * std::cos(2.0 * M_PI / n)));
  CHECK(s.values.back() == doctest::Approx(-2.0));
}

TEST_CASE("Lanczos agrees with the dense solver") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 40 + 2 * (rng() % 40);
    const std::size_t k = 3 + rng() % 5;
    const Graph g = oracle::random_regular_graph(n, k, rng);
    const auto dense = spectral::spectrum(g);
    const auto top = spectral::top_eigs_with_residuals(g, 3);
    const auto bottom = spectral::bottom_eigs_with_residuals(g, 2);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(top.values[i] == doctest::Approx(dense.values[i]).epsilon(1e-8));
      CHECK(top.residuals[i] <= 1e-8);
    }
    CHECK(bottom.values[0] == doctest::Approx(dense.values[n - 1]).epsilon(1e-8));
    CHECK(bottom.values[1] == doctest::Approx(dense.values[n - 2]).epsilon(1e-8));
  }
}

TEST_CASE("Lanczos handles multiplicity and early termination") {
  // K_6 has eigenvalue -1 with multiplicity 5; the Krylov space closes at 2.
  const auto top = spectral::top_eigs(lps::complete_graph(6), 3);
  CHECK(top[0] == doctest::Approx(5.0));
  CHECK(top[1] == doctest::Approx(-1.0));
  CHECK(top[2] == doctest::Approx(-1.0));
  CHECK_THROWS_AS(spectral::top_eigs(lps::complete_graph(6), 0), ValidationError);
  CHECK_THROWS_AS(spectral::top_eigs(lps::complete_graph(3), 4), ValidationError);
}

TEST_CASE("iterative path above the dense threshold") {
  spectral::SpectralOptions opts;
  opts.dense_threshold = 50;
  const Graph g = lps::petersen_graph();
  const Graph big = cartesian_k2(cartesian_k2(cartesian_k2(g)));  // 80 vertices
  const auto ev = spectral::extreme_eigenvalues(big, opts);
  CHECK(ev.method == spectral::SolverMethod::Iterative);
  CHECK(ev.lambda1 == doctest::Approx(6.0));
  CHECK(ev.lambda2 == doctest::Approx(4.0));
  CHECK(ev.lambda_n == doctest::Approx(-5.0));
  CHECK_THROWS_AS(spectral::spectrum(big, opts), ValidationError);
}

TEST_CASE("gap and Ramanujan predicates") {
  CHECK(spectral::spectral_gap(lps::petersen_graph()) == doctest::Approx(2.0));
  CHECK(spectral::is_ramanujan(lps::petersen_graph()));
  CHECK(spectral::is_ramanujan(lps::complete_graph(7)));
  CHECK(spectral::ramanujan_threshold(3) == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK_THROWS_AS(spectral::is_ramanujan(lps::complete_graph(2)), ValidationError);
  const Graph two = Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(spectral::spectral_gap(two), ValidationError);
  const Graph path = Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(spectral::spectral_gap(path), ValidationError);
}

TEST_CASE("product spectrum on K_4") {
  const auto r = spectral::product_spectrum_oracle(lps::complete_graph(4));
  CHECK(r.max_deviation < 1e-10);
  CHECK(r.lambda2_product == doctest::Approx(2.0));
  CHECK(r.lambda2_plus_one == doctest::Approx(0.0));
  CHECK(r.lambda1_minus_one == doctest::Approx(2.0));
  CHECK(r.product_law_lambda2 == doctest::Approx(2.0));
}

TEST_CASE("weyl_check") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(3, 3);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(3, 3);
  b(0, 0) = 2.0;
  const auto r = spectral::weyl_check(a, b, 1);
  CHECK(r.lower_slack == doctest::Approx(2.0));
  CHECK(r.upper_slack == doctest::Approx(0.0));
  CHECK_THROWS_AS(spectral::weyl_check(a, b, 0), ValidationError);
  CHECK_THROWS_AS(spectral::weyl_check(a, b, 4), ValidationError);
  Eigen::MatrixXd asym = a;
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(spectral::weyl_check(asym, b, 1), ValidationError);
  CHECK_THROWS_AS(spectral::weyl_check(a, Eigen::MatrixXd::Zero(2, 2), 1), ValidationError);
  CHECK(spectral::symmetric_eigenvalues(a + b).front() == doctest::Approx(3.0));
}

TEST_CASE("unreachable tolerance reports non-convergence") {
  spectral::SpectralOptions opts;
  opts.tolerance = 1e-30;
  CHECK_THROWS_AS(spectral::spectrum(lps::petersen_graph(), opts), ConvergenceError);
  opts.dense_threshold = 5;
  opts.max_krylov_dimension = 3;
  CHECK_THROWS_AS(spectral::extreme_eigenvalues(lps::cycle_graph(40), opts), ConvergenceError);
}

TEST_CASE("lambda_1 = k and lambda_n = -k exactly when bipartite") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + 2 * (rng() % 15);
    const std::size_t k = 2 + rng() % std::min<std::size_t>(5, n - 3);
    Graph g = oracle::random_regular_graph(n, k, rng);
    if (trial % 3 == 0) g = cartesian_k2(lps::cycle_graph(n));  // bipartite iff n even
    const auto s = spectral::spectrum(g);
    const double deg = static_cast<double>(*regularity(g));
    REQUIRE(s.values.front() == doctest::Approx(deg).epsilon(1e-10));
    REQUIRE((std::abs(s.values.back() + deg) < 1e-8) == is_bipartite(g));
  }
}
