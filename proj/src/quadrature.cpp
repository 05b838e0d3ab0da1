#include "gegen/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace gegen {

namespace {

// Recurrence coefficients of the monic orthonormal Jacobi system: diagonal
// entries a_k and squared off-diagonals b_k^2 of the Jacobi matrix.
double jacobi_diagonal(double alpha, double beta, std::size_t k) {
  const double ab = alpha + beta;
  if (k == 0) return (beta - alpha) / (ab + 2.0);
  const double c = 2.0 * static_cast<double>(k) + ab;
  return (beta - alpha) * (beta + alpha) / (c * (c + 2.0));
}

double jacobi_offdiag_sq(double alpha, double beta, std::size_t k) {
  const double ab = alpha + beta;
  if (k == 1) {
    // The general formula is 0/0 at alpha + beta = -1.
    return 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
  }
  const double kd = static_cast<double>(k);
  const double c = 2.0 * kd + ab;
  return 4.0 * kd * (kd + alpha) * (kd + beta) * (kd + ab) /
         (c * c * (c + 1.0) * (c - 1.0));
}

constexpr double kDuplicateNodeTolerance = 1e-12;

}  // namespace

QuadRule gauss_jacobi(double alpha, double beta, std::size_t npoints) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("gauss_jacobi requires alpha, beta > -1");
  }
  if (npoints == 0) throw DomainError("gauss_jacobi requires npoints >= 1");

  const auto n = static_cast<Eigen::Index>(npoints);
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (Eigen::Index k = 0; k < n; ++k) {
    diag(k) = jacobi_diagonal(alpha, beta, static_cast<std::size_t>(k));
  }
  for (Eigen::Index k = 1; k < n; ++k) {
    sub(k - 1) = std::sqrt(jacobi_offdiag_sq(alpha, beta, static_cast<std::size_t>(k)));
  }

  const double log_mass =
      (alpha + beta + 1.0) * std::numbers::ln2 + log_beta(alpha + 1.0, beta + 1.0);
  const double mass = std::exp(log_mass);

  QuadRule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.nodes.resize(npoints);
  rule.weights.resize(npoints);
  if (n == 1) {
    rule.nodes[0] = diag(0);
    rule.weights[0] = mass;
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_jacobi: tridiagonal eigensolver did not converge");
  }
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v0 = vectors(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = values(i);
    rule.weights[static_cast<std::size_t>(i)] = mass * v0 * v0;
  }
  // Eigen returns ascending eigenvalues.
  for (std::size_t i = 1; i < npoints; ++i) {
    if (!(rule.nodes[i] - rule.nodes[i - 1] > kDuplicateNodeTolerance)) {
      throw std::logic_error("gauss_jacobi: coincident nodes in Gauss rule");
    }
  }
  return rule;
}

double v_mass(const GegenParams& params) {
  return std::exp(log_beta(params.lambda() + 0.5, params.mu() + 0.5));
}

double v_weight(const GegenParams& params, double t) {
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("v_weight: t outside [-1, 1]");
  return std::pow(std::abs(t), 2.0 * params.mu()) *
         std::pow(1.0 - t * t, params.lambda() - 0.5);
}

MappedRule v_rule(const GegenParams& params, std::size_t npoints) {
  if (npoints == 0) throw DomainError("v_rule requires npoints >= 1");
  // s = 2t^2 - 1 turns |t|^{2mu}(1-t^2)^{lambda-1/2} dt on (0,1) into
  // 2^{-(lambda+mu+1)} (1-s)^{lambda-1/2} (1+s)^{mu-1/2} ds.
  const QuadRule base = gauss_jacobi(params.lambda() - 0.5, params.mu() - 0.5, npoints);
  const double scale = std::exp2(-(params.lambda() + params.mu() + 1.0));

  MappedRule rule{params, npoints, {}, {}};
  rule.nodes.resize(2 * npoints);
  rule.weights.resize(2 * npoints);
  for (std::size_t i = 0; i < npoints; ++i) {
    const double t = std::sqrt(0.5 * (1.0 + base.nodes[i]));
    const double w = scale * base.weights[i];
    // base nodes ascend, so t ascends: fill outward from the middle.
    rule.nodes[npoints + i] = t;
    rule.weights[npoints + i] = w;
    rule.nodes[npoints - 1 - i] = -t;
    rule.weights[npoints - 1 - i] = w;
  }
  return rule;
}

}  // namespace gegen
