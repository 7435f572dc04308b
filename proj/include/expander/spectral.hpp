#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "expander/graph.hpp"

namespace expander::spectral {

enum class SolverMethod { Dense, Iterative };

std::string_view to_string(SolverMethod method);

struct SpectralOptions {
  std::size_t dense_threshold = 4096;
  double tolerance = 1e-8;
  std::size_t max_krylov_dimension = 3000;
  std::uint64_t seed = 0x5eed'1a2c'05ULL;
};

/// Adjacency eigenvalues, non-increasing, with the largest eigenpair
/// residual ||A v - lambda v|| / ||v|| over everything reported.
struct Spectrum {
  std::vector<double> values;
  double residual = 0.0;
  SolverMethod method = SolverMethod::Dense;
};

Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Eigenvalues of a dense symmetric matrix, non-increasing.
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& a);

/// Full spectrum via a dense symmetric eigensolver. Throws ValidationError
/// above options.dense_threshold vertices and ConvergenceError when the
/// residual exceeds options.tolerance.
Spectrum spectrum(const Graph& g, const SpectralOptions& options = {});

struct EigenEstimate {
  std::vector<double> values;
  std::vector<double> residuals;
};

/// Largest `count` (<= 4) eigenvalues, with multiplicity, by Lanczos with
/// full reorthogonalization and explicit deflation of converged vectors.
/// Each value is accepted only once its true residual is within tolerance.
EigenEstimate top_eigs_with_residuals(const Graph& g, std::size_t count,
                                      const SpectralOptions& options = {});
std::vector<double> top_eigs(const Graph& g, std::size_t count,
                             const SpectralOptions& options = {});

/// Smallest `count` eigenvalues, non-decreasing (Lanczos on -A).
EigenEstimate bottom_eigs_with_residuals(const Graph& g, std::size_t count,
                                         const SpectralOptions& options = {});

/// lambda_1, lambda_2, lambda_n through whichever solver path fits n.
struct ExtremeEigenvalues {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda_n = 0.0;
  double residual = 0.0;
  SolverMethod method = SolverMethod::Dense;
};

ExtremeEigenvalues extreme_eigenvalues(const Graph& g, const SpectralOptions& options = {});

/// k - lambda_2 for a connected k-regular graph; lambda_1 = k is checked.
double spectral_gap(const Graph& g, const SpectralOptions& options = {});

/// lambda_2 <= 2 sqrt(k-1) + residual.
bool is_ramanujan(const Graph& g, const SpectralOptions& options = {});

double ramanujan_threshold(std::size_t k);

/// Compares spectrum(X \square K_2) with {lambda_i + 1} u {lambda_i - 1}.
struct ProductSpectrumReport {
  double max_deviation = 0.0;
  double lambda1 = 0.0;          // of X
  double lambda2 = 0.0;          // of X
  double lambda2_product = 0.0;  // of X \square K_2, measured
  double lambda2_plus_one = 0.0;
  double lambda1_minus_one = 0.0;
  double product_law_lambda2 = 0.0;  // max(lambda2 + 1, lambda1 - 1)
};

ProductSpectrumReport product_spectrum_oracle(const Graph& g,
                                              const SpectralOptions& options = {});

/// Slacks of lambda_n(B) <= lambda_i(A+B) - lambda_i(A) <= lambda_1(B);
/// both are non-negative when the inequalities hold. i is 1-based.
struct WeylReport {
  double lower_slack = 0.0;
  double upper_slack = 0.0;
};

WeylReport weyl_check(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, std::size_t i);

}  // namespace expander::spectral
