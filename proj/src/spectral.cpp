#include "expander/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "expander/error.hpp"

namespace expander::spectral {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// y = sign * A x using the adjacency lists.
void apply_adjacency(const Graph& g, double sign, const VectorXd& x, VectorXd& y) {
  const std::size_t n = g.vertex_count();
  y.resize(static_cast<Eigen::Index>(n));
  for (Vertex v = 0; v < n; ++v) {
    double acc = 0.0;
    for (Vertex w : g.neighbors(v)) acc += x[w];
    y[v] = sign * acc;
  }
}

double eigenpair_residual(const Graph& g, double sign, double value, const VectorXd& x) {
  VectorXd ax;
  apply_adjacency(g, sign, x, ax);
  return (ax - value * x).norm() / x.norm();
}

// Inverse iteration on a symmetric tridiagonal matrix (diagonal d,
// off-diagonal e) at shift sigma, by LU with partial pivoting. Zero pivots
// are nudged so an exact eigenvalue shift still yields a direction.
VectorXd tridiagonal_inverse_iteration(const VectorXd& d, const VectorXd& e, double sigma) {
  const Eigen::Index n = d.size();
  double norm = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double row = std::abs(d[i]);
    if (i > 0) row += std::abs(e[i - 1]);
    if (i + 1 < n) row += std::abs(e[i]);
    norm = std::max(norm, row);
  }
  const double tiny = std::max(norm, 1.0) * 1e-15;

  // Factor rows of (T - sigma I) into upper bandwidth-two U with multipliers.
  VectorXd u0(n), u1 = VectorXd::Zero(n), u2 = VectorXd::Zero(n), mult = VectorXd::Zero(n);
  std::vector<bool> swapped(static_cast<std::size_t>(n), false);
  for (Eigen::Index i = 0; i < n; ++i) u0[i] = d[i] - sigma;
  for (Eigen::Index i = 0; i + 1 < n; ++i) u1[i] = e[i];
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    // Row i holds (u0, u1, u2) at columns i, i+1, i+2; row i+1 holds
    // (e_i, d_{i+1} - sigma, e_{i+1}) at columns i, i+1, i+2.
    double b0 = e[i];
    double b1 = u0[i + 1];
    double b2 = i + 2 < n ? u1[i + 1] : 0.0;
    if (std::abs(b0) > std::abs(u0[i])) {
      std::swap(u0[i], b0);
      std::swap(u1[i], b1);
      std::swap(u2[i], b2);
      swapped[static_cast<std::size_t>(i)] = true;
    }
    if (std::abs(u0[i]) < tiny) u0[i] = tiny;
    const double m = b0 / u0[i];
    mult[i] = m;
    u0[i + 1] = b1 - m * u1[i];
    if (i + 2 < n) u1[i + 1] = b2 - m * u2[i];
  }
  if (std::abs(u0[n - 1]) < tiny) u0[n - 1] = tiny;

  auto solve = [&](VectorXd x) {
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      if (swapped[static_cast<std::size_t>(i)]) std::swap(x[i], x[i + 1]);
      x[i + 1] -= mult[i] * x[i];
    }
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      double acc = x[i];
      if (i + 1 < n) acc -= u1[i] * x[i + 1];
      if (i + 2 < n) acc -= u2[i] * x[i + 2];
      x[i] = acc / u0[i];
    }
    return x;
  };

  VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) y[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i) + 0.3);
  y.normalize();
  for (int it = 0; it < 4; ++it) {
    y = solve(y);
    y.normalize();
  }
  return y;
}

// Eigenpairs of the adjacency matrix: all of them for small n, otherwise
// the full spectrum with vectors only for the three extreme values
// (tridiagonalization, inverse iteration, back-transformation).
constexpr Eigen::Index kAllVectorsLimit = 600;

Spectrum dense_spectrum(const Graph& g) {
  const MatrixXd a = adjacency_matrix(g);
  const Eigen::Index n = a.rows();
  Spectrum s;
  s.method = SolverMethod::Dense;
  if (n <= kAllVectorsLimit) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(a, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed");
    const VectorXd& w = solver.eigenvalues();
    s.values.assign(w.data(), w.data() + n);
    for (Eigen::Index j = 0; j < n; ++j)
      s.residual =
          std::max(s.residual, eigenpair_residual(g, 1.0, w[j], solver.eigenvectors().col(j)));
  } else {
    Eigen::Tridiagonalization<MatrixXd> tri(a);
    const VectorXd d = tri.diagonal();
    const VectorXd e = tri.subDiagonal();
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver;
    solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed");
    const VectorXd& w = solver.eigenvalues();
    s.values.assign(w.data(), w.data() + n);
    // Values without vectors are checked in aggregate: tr A = 0, tr A^2 = 2m.
    const double nd = static_cast<double>(n);
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    if (std::abs(w.sum()) > 1e-8 * nd || std::abs(w.squaredNorm() - two_m) > 1e-8 * two_m)
      throw ConvergenceError("dense eigensolver: spectrum fails the trace check");
    for (Eigen::Index j : {n - 1, n - 2, Eigen::Index{0}}) {
      const VectorXd y = tridiagonal_inverse_iteration(d, e, w[j]);
      const VectorXd x = tri.matrixQ() * y;
      s.residual = std::max(s.residual, eigenpair_residual(g, 1.0, w[j], x));
    }
  }
  std::reverse(s.values.begin(), s.values.end());
  return s;
}

void orthogonalize(VectorXd& w, const std::vector<VectorXd>& basis) {
  for (const VectorXd& u : basis) w -= u.dot(w) * u;
}

struct RitzPair {
  double value = 0.0;
  VectorXd vector;
  double residual = 0.0;
};

// Largest eigenpair of sign*A restricted to the orthogonal complement of
// `locked`, by Lanczos with full reorthogonalization.
RitzPair lanczos_largest(const Graph& g, double sign, const std::vector<VectorXd>& locked,
                         std::mt19937_64& rng, const SpectralOptions& options) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  const std::size_t dim_cap =
      std::min(g.vertex_count() - locked.size(), options.max_krylov_dimension);
  double scale = 1.0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    scale = std::max(scale, static_cast<double>(g.degree(v)));
  const double breakdown = 1e-10 * scale;

  std::normal_distribution<double> normal(0.0, 1.0);
  VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = normal(rng);
  for (int pass = 0; pass < 2; ++pass) orthogonalize(v, locked);
  v.normalize();

  std::vector<VectorXd> basis;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::size_t next_check = std::min<std::size_t>(10, dim_cap);
  VectorXd w;

  for (;;) {
    basis.push_back(v);
    apply_adjacency(g, sign, v, w);
    const double a = v.dot(w);
    alpha.push_back(a);
    w -= a * v;
    if (basis.size() > 1) w -= beta.back() * basis[basis.size() - 2];
    for (int pass = 0; pass < 2; ++pass) {
      orthogonalize(w, locked);
      orthogonalize(w, basis);
    }
    const double b = w.norm();
    const std::size_t size = basis.size();
    const bool exhausted = size >= dim_cap || b <= breakdown;

    if (exhausted || size >= next_check) {
      VectorXd diag = Eigen::Map<const VectorXd>(alpha.data(), static_cast<Eigen::Index>(size));
      VectorXd sub = Eigen::Map<const VectorXd>(beta.data(), static_cast<Eigen::Index>(size - 1));
      Eigen::SelfAdjointEigenSolver<MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const auto top = static_cast<Eigen::Index>(size - 1);
      const double theta = tri.eigenvalues()[top];
      const VectorXd s = tri.eigenvectors().col(top);
      const double estimate = (exhausted ? 0.0 : b) * std::abs(s[top]);

      if (estimate <= 0.5 * options.tolerance) {
        VectorXd x = VectorXd::Zero(n);
        for (std::size_t j = 0; j < size; ++j) x += s[static_cast<Eigen::Index>(j)] * basis[j];
        orthogonalize(x, locked);
        x.normalize();
        const double r = eigenpair_residual(g, sign, theta, x);
        if (r <= options.tolerance) return {theta, std::move(x), r};
        if (exhausted)
          throw ConvergenceError("Lanczos: residual " + std::to_string(r) +
                                 " above tolerance after exhausting the Krylov space");
      } else if (exhausted) {
        throw ConvergenceError("Lanczos: no convergence within " + std::to_string(size) +
                               " iterations");
      }
      next_check = std::min(dim_cap, size + std::max<std::size_t>(10, size / 8));
    }
    beta.push_back(b);
    v = w / b;
  }
}

EigenEstimate extreme_eigs(const Graph& g, std::size_t count, double sign,
                           const SpectralOptions& options) {
  if (count == 0 || count > 4) throw ValidationError("top_eigs: count must be in 1..4");
  if (count > g.vertex_count()) throw ValidationError("top_eigs: count exceeds vertex count");
  std::mt19937_64 rng(options.seed);
  std::vector<VectorXd> locked;
  EigenEstimate out;
  for (std::size_t j = 0; j < count; ++j) {
    RitzPair pair = lanczos_largest(g, sign, locked, rng, options);
    out.values.push_back(sign * pair.value);
    out.residuals.push_back(pair.residual);
    locked.push_back(std::move(pair.vector));
  }
  return out;
}

std::size_t require_connected_regular(const Graph& g) {
  const auto k = regularity(g);
  if (!k) throw ValidationError("graph is not regular");
  if (!is_connected(g)) throw ValidationError("graph is not connected");
  if (g.vertex_count() < 2) throw ValidationError("graph needs at least two vertices");
  return *k;
}

}  // namespace

std::string_view to_string(SolverMethod method) {
  return method == SolverMethod::Dense ? "dense" : "iterative";
}

MatrixXd adjacency_matrix(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  MatrixXd a = MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) += 1.0;
    a(e.v, e.u) += 1.0;
  }
  return a;
}

std::vector<double> symmetric_eigenvalues(const MatrixXd& a) {
  if (a.rows() != a.cols()) throw ValidationError("matrix is not square");
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("dense eigensolver failed");
  const VectorXd& w = solver.eigenvalues();
  std::vector<double> out(w.data(), w.data() + w.size());
  std::reverse(out.begin(), out.end());
  return out;
}

Spectrum spectrum(const Graph& g, const SpectralOptions& options) {
  if (g.vertex_count() > options.dense_threshold)
    throw ValidationError("spectrum: " + std::to_string(g.vertex_count()) +
                          " vertices exceeds the dense threshold " +
                          std::to_string(options.dense_threshold) + "; use top_eigs");
  Spectrum s = dense_spectrum(g);
  if (s.residual > options.tolerance)
    throw ConvergenceError("spectrum: residual " + std::to_string(s.residual) +
                           " above tolerance");
  return s;
}

EigenEstimate top_eigs_with_residuals(const Graph& g, std::size_t count,
                                      const SpectralOptions& options) {
  return extreme_eigs(g, count, 1.0, options);
}

std::vector<double> top_eigs(const Graph& g, std::size_t count, const SpectralOptions& options) {
  return top_eigs_with_residuals(g, count, options).values;
}

EigenEstimate bottom_eigs_with_residuals(const Graph& g, std::size_t count,
                                         const SpectralOptions& options) {
  return extreme_eigs(g, count, -1.0, options);
}

ExtremeEigenvalues extreme_eigenvalues(const Graph& g, const SpectralOptions& options) {
  if (g.vertex_count() < 2) throw ValidationError("extreme_eigenvalues: need n >= 2");
  ExtremeEigenvalues out;
  if (g.vertex_count() <= options.dense_threshold) {
    const Spectrum s = spectrum(g, options);
    out.lambda1 = s.values.front();
    out.lambda2 = s.values[1];
    out.lambda_n = s.values.back();
    out.residual = s.residual;
    out.method = SolverMethod::Dense;
    return out;
  }
  const EigenEstimate top = top_eigs_with_residuals(g, 2, options);
  const EigenEstimate bottom = bottom_eigs_with_residuals(g, 1, options);
  out.lambda1 = top.values[0];
  out.lambda2 = top.values[1];
  out.lambda_n = bottom.values[0];
  out.residual = std::max({top.residuals[0], top.residuals[1], bottom.residuals[0]});
  out.method = SolverMethod::Iterative;
  return out;
}

double ramanujan_threshold(std::size_t k) {
  return k == 0 ? 0.0 : 2.0 * std::sqrt(static_cast<double>(k - 1));
}

double spectral_gap(const Graph& g, const SpectralOptions& options) {
  const std::size_t k = require_connected_regular(g);
  const ExtremeEigenvalues ev = extreme_eigenvalues(g, options);
  if (std::abs(ev.lambda1 - static_cast<double>(k)) > 1e-6)
    throw ConvergenceError("spectral_gap: lambda_1 = " + std::to_string(ev.lambda1) +
                           " differs from k = " + std::to_string(k));
  return static_cast<double>(k) - ev.lambda2;
}

bool is_ramanujan(const Graph& g, const SpectralOptions& options) {
  const std::size_t k = require_connected_regular(g);
  if (k < 2) throw ValidationError("is_ramanujan: needs k >= 2");
  const ExtremeEigenvalues ev = extreme_eigenvalues(g, options);
  return ev.lambda2 <= ramanujan_threshold(k) + ev.residual;
}

ProductSpectrumReport product_spectrum_oracle(const Graph& g, const SpectralOptions& options) {
  if (2 * g.vertex_count() > options.dense_threshold)
    throw ValidationError("product_spectrum_oracle: graph too large for the dense path");
  const Spectrum base = spectrum(g, options);
  const Spectrum product = spectrum(cartesian_k2(g), options);

  std::vector<double> predicted;
  predicted.reserve(2 * base.values.size());
  for (double l : base.values) {
    predicted.push_back(l + 1.0);
    predicted.push_back(l - 1.0);
  }
  std::sort(predicted.begin(), predicted.end(), std::greater<>());

  ProductSpectrumReport r;
  for (std::size_t i = 0; i < predicted.size(); ++i)
    r.max_deviation = std::max(r.max_deviation, std::abs(predicted[i] - product.values[i]));
  r.lambda1 = base.values[0];
  r.lambda2 = base.values.size() > 1 ? base.values[1] : base.values[0];
  r.lambda2_product = product.values[1];
  r.lambda2_plus_one = r.lambda2 + 1.0;
  r.lambda1_minus_one = r.lambda1 - 1.0;
  r.product_law_lambda2 = base.values.size() > 1 ? std::max(r.lambda2_plus_one, r.lambda1_minus_one)
                                                 : r.lambda1_minus_one;
  return r;
}

WeylReport weyl_check(const MatrixXd& a, const MatrixXd& b, std::size_t i) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw ValidationError("weyl_check: matrices must be square and of equal order");
  const auto n = static_cast<std::size_t>(a.rows());
  if (i < 1 || i > n) throw ValidationError("weyl_check: index out of range");
  auto symmetric = [](const MatrixXd& m) {
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale;
  };
  if (!symmetric(a) || !symmetric(b)) throw ValidationError("weyl_check: matrix not symmetric");

  const std::vector<double> ea = symmetric_eigenvalues(a);
  const std::vector<double> eb = symmetric_eigenvalues(b);
  const std::vector<double> eab = symmetric_eigenvalues(a + b);
  const double shift = eab[i - 1] - ea[i - 1];
  return {shift - eb.back(), eb.front() - shift};
}

}  // namespace expander::spectral
