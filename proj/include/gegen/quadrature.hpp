#pragma once

#include <cstddef>
#include <vector>

#include "gegen/specfun.hpp"

namespace gegen {

/// Gauss rule for the Jacobi weight (1-t)^alpha (1+t)^beta on [-1, 1].
struct QuadRule {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> nodes;    // strictly increasing, inside (-1, 1)
  std::vector<double> weights;  // positive, weight function folded in

  std::size_t size() const noexcept { return nodes.size(); }
  /// Highest polynomial degree integrated exactly.
  std::size_t exact_degree() const noexcept { return 2 * nodes.size() - 1; }
};

/// Symmetric rule for v_{lambda,mu}(t) = |t|^{2mu} (1-t^2)^{lambda-1/2}.
struct MappedRule {
  GegenParams params;
  std::size_t half_points = 0;  // Jacobi points behind the rule
  std::vector<double> nodes;    // 2 * half_points, increasing, closed under negation
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
  std::size_t exact_degree() const noexcept { return 4 * half_points - 1; }
};

/// npoints-point Gauss-Jacobi rule by Golub-Welsch.
QuadRule gauss_jacobi(double alpha, double beta, std::size_t npoints);

/// 2*npoints-node rule exact against v_{lambda,mu} up to degree 4*npoints-1.
MappedRule v_rule(const GegenParams& params, std::size_t npoints);

/// Total mass of v_{lambda,mu}: B(lambda+1/2, mu+1/2).
double v_mass(const GegenParams& params);

/// v_{lambda,mu}(t) itself.
double v_weight(const GegenParams& params, double t);

/// Sum of weights[i] * f(nodes[i]); f is the bare integrand.
template <class Rule, class F>
double integrate(const Rule& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(rule.nodes[i]);
  }
  return sum;
}

}  // namespace gegen
