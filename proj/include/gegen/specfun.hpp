#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gegen/errors.hpp"

namespace gegen {

/// Parameter pair (lambda, mu) of the generalized Gegenbauer family.
///
/// Requires lambda > -1/2 and mu >= 0. sigma = max(lambda, mu) is the
/// growth exponent of the orthonormal sup norms and enters every weighted
/// coefficient functional.
class GegenParams {
 public:
  GegenParams(double lambda, double mu);

  double lambda() const noexcept { return lambda_; }
  double mu() const noexcept { return mu_; }
  double sigma() const noexcept { return sigma_; }

  /// Throws DomainError unless mu > 0 (connection integral, sup-norm growth).
  void require_positive_mu(const char* what) const;

  friend bool operator==(const GegenParams&, const GegenParams&) = default;

 private:
  double lambda_;
  double mu_;
  double sigma_;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln B(a, b) for a, b > 0.
double log_beta(double a, double b);

/// Rising factorial (x)_n = x (x+1) ... (x+n-1), with (x)_0 = 1.
double pochhammer(double x, std::size_t n);

/// (a)_n / (b)_n without forming either factor; b must be positive.
double pochhammer_ratio(double a, double b, std::size_t n);

/// Jacobi polynomial P_n^{(alpha,beta)}(t) by forward three-term recurrence.
double jacobi_eval(double alpha, double beta, std::size_t n, double t);

/// Fills out[k] = P_k^{(alpha,beta)}(t) for k < out.size().
void jacobi_eval_all(double alpha, double beta, double t, std::span<double> out);

/// Squared L2 norm of P_n^{(alpha,beta)} against (1-t)^alpha (1+t)^beta.
double jacobi_norm_sq(double alpha, double beta, std::size_t n);

/// Normalization a_n in C_n = a_n * (Jacobi factor).
double gegen_raw_constant(const GegenParams& params, std::size_t n);

/// Orthonormalization constant ã_n in C̃_n = ã_n * (Jacobi factor).
double gegen_orthonormal_constant(const GegenParams& params, std::size_t n);

/// Generalized Gegenbauer polynomial C_n^{(lambda,mu)}(t).
double gegen_eval(const GegenParams& params, std::size_t n, double t);

/// Orthonormal generalized Gegenbauer polynomial C̃_n^{(lambda,mu)}(t).
double gegen_orthonormal_eval(const GegenParams& params, std::size_t n, double t);

/// Orthonormal basis C̃_0..C̃_N with the normalization constants computed once.
class OrthonormalBasis {
 public:
  OrthonormalBasis(const GegenParams& params, std::size_t max_degree);

  const GegenParams& params() const noexcept { return params_; }
  std::size_t max_degree() const noexcept { return constants_.size() - 1; }

  /// out[n] = C̃_n(t) for n < out.size(); out.size() <= max_degree() + 1.
  void eval_all(double t, std::span<double> out) const;

 private:
  GegenParams params_;
  std::vector<double> constants_;
};

/// Fills out[n] = C̃_n(t) for n < out.size() in O(out.size()) work.
void gegen_orthonormal_eval_all(const GegenParams& params, double t,
                                std::span<double> out);

/// |c_mu * int C_n^{lambda+mu}(t x)(1+x)(1-x^2)^{mu-1} dx - C_n^{(lambda,mu)}(t)|
/// with the integral taken by an npoints Gauss-Jacobi rule. Requires mu > 0.
double gegen_connection_residual(const GegenParams& params, std::size_t n,
                                 double t, std::size_t npoints);

}  // namespace gegen
