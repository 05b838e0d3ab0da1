#include "gegen/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "gegen/quadrature.hpp"

namespace gegen {

namespace {

void require_in_interval(double t) {
  if (!(t >= -1.0 && t <= 1.0)) {
    throw DomainError("evaluation point " + std::to_string(t) +
                      " lies outside [-1, 1]");
  }
}

void require_jacobi_params(double alpha, double beta) {
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw DomainError("Jacobi parameters must satisfy alpha, beta > -1");
  }
}

// Beyond this many factors the direct product risks overflow for x > 1.
constexpr std::size_t kDirectPochhammerLimit = 64;

}  // namespace

GegenParams::GegenParams(double lambda, double mu)
    : lambda_(lambda), mu_(mu), sigma_(lambda > mu ? lambda : mu) {
  if (!(lambda > -0.5) || !std::isfinite(lambda)) {
    throw DomainError("lambda must be finite and > -1/2");
  }
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw DomainError("mu must be finite and >= 0");
  }
}

void GegenParams::require_positive_mu(const char* what) const {
  if (!(mu_ > 0.0)) {
    throw DomainError(std::string(what) + " requires mu > 0");
  }
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma requires a finite positive argument");
  }
  return boost::math::lgamma(x);
}

double log_beta(double a, double b) {
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double pochhammer(double x, std::size_t n) {
  if (n == 0) return 1.0;
  if (x > 0.0 && n > kDirectPochhammerLimit) {
    return std::exp(log_gamma(x + static_cast<double>(n)) - log_gamma(x));
  }
  double product = 1.0;
  for (std::size_t k = 0; k < n; ++k) product *= x + static_cast<double>(k);
  return product;
}

double pochhammer_ratio(double a, double b, std::size_t n) {
  if (!(b > 0.0)) {
    throw DomainError("pochhammer_ratio requires a positive denominator base");
  }
  // Term-wise ratios stay O(1), so the running product cannot overflow.
  double ratio = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k);
    ratio *= (a + kd) / (b + kd);
  }
  return ratio;
}

void jacobi_eval_all(double alpha, double beta, double t, std::span<double> out) {
  require_jacobi_params(alpha, beta);
  require_in_interval(t);
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = 0.5 * ((alpha - beta) + (alpha + beta + 2.0) * t);
  const double ab = alpha + beta;
  const double a2_b2 = (alpha - beta) * (alpha + beta);
  for (std::size_t k = 2; k < out.size(); ++k) {
    const double kd = static_cast<double>(k);
    const double c = 2.0 * kd + ab;
    const double lead = 2.0 * kd * (kd + ab) * (c - 2.0);
    const double linear = (c - 1.0) * a2_b2;
    const double slope = (c - 2.0) * (c - 1.0) * c;
    const double back = 2.0 * (kd + alpha - 1.0) * (kd + beta - 1.0) * c;
    out[k] = ((linear + slope * t) * out[k - 1] - back * out[k - 2]) / lead;
  }
}

double jacobi_eval(double alpha, double beta, std::size_t n, double t) {
  require_jacobi_params(alpha, beta);
  require_in_interval(t);
  if (n == 0) return 1.0;
  // Rolling three-term recurrence; mirrors jacobi_eval_all without storage.
  const double ab = alpha + beta;
  const double a2_b2 = (alpha - beta) * (alpha + beta);
  double prev = 1.0;
  double cur = 0.5 * ((alpha - beta) + (ab + 2.0) * t);
  for (std::size_t k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double c = 2.0 * kd + ab;
    const double lead = 2.0 * kd * (kd + ab) * (c - 2.0);
    const double linear = (c - 1.0) * a2_b2;
    const double slope = (c - 2.0) * (c - 1.0) * c;
    const double back = 2.0 * (kd + alpha - 1.0) * (kd + beta - 1.0) * c;
    const double next = ((linear + slope * t) * cur - back * prev) / lead;
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi_norm_sq(double alpha, double beta, std::size_t n) {
  require_jacobi_params(alpha, beta);
  const double nd = static_cast<double>(n);
  const double ab = alpha + beta;
  double log_value = (ab + 1.0) * std::numbers::ln2 + log_gamma(nd + alpha + 1.0) +
                     log_gamma(nd + beta + 1.0) - log_gamma(nd + 1.0);
  if (n == 0) {
    // (ab+1) Gamma(ab+1) = Gamma(ab+2) avoids the pole at ab = -1.
    log_value -= log_gamma(ab + 2.0);
  } else {
    log_value -= std::log(2.0 * nd + ab + 1.0) + log_gamma(nd + ab + 1.0);
  }
  return std::exp(log_value);
}

double gegen_raw_constant(const GegenParams& params, std::size_t n) {
  const double top = params.lambda() + params.mu();
  const double bottom = params.mu() + 0.5;
  return pochhammer_ratio(top, bottom, n / 2 + (n % 2));
}

double gegen_orthonormal_constant(const GegenParams& params, std::size_t n) {
  const double lam = params.lambda();
  const double mu = params.mu();
  const double m = static_cast<double>(n / 2);
  double log_sq = 0.0;
  if (n % 2 == 0) {
    if (n == 0) {
      log_sq = log_gamma(lam + mu + 1.0);
    } else {
      log_sq = std::log(2.0 * m + lam + mu) + log_gamma(m + lam + mu);
    }
    log_sq += log_gamma(m + 1.0) - log_gamma(m + lam + 0.5) - log_gamma(m + mu + 0.5);
  } else {
    log_sq = std::log(2.0 * m + lam + mu + 1.0) + log_gamma(m + 1.0) +
             log_gamma(m + lam + mu + 1.0) - log_gamma(m + lam + 0.5) -
             log_gamma(m + mu + 1.5);
  }
  return std::exp(0.5 * log_sq);
}

namespace {

// Jacobi factor shared by C_n and C̃_n: P_m(2t^2-1) or t P_m(2t^2-1).
double gegen_jacobi_factor(const GegenParams& params, std::size_t n, double t) {
  require_in_interval(t);
  const double alpha = params.lambda() - 0.5;
  const double s = 2.0 * t * t - 1.0;
  const std::size_t m = n / 2;
  if (n % 2 == 0) return jacobi_eval(alpha, params.mu() - 0.5, m, s);
  return t * jacobi_eval(alpha, params.mu() + 0.5, m, s);
}

}  // namespace

double gegen_eval(const GegenParams& params, std::size_t n, double t) {
  return gegen_raw_constant(params, n) * gegen_jacobi_factor(params, n, t);
}

double gegen_orthonormal_eval(const GegenParams& params, std::size_t n, double t) {
  return gegen_orthonormal_constant(params, n) * gegen_jacobi_factor(params, n, t);
}

OrthonormalBasis::OrthonormalBasis(const GegenParams& params, std::size_t max_degree)
    : params_(params), constants_(max_degree + 1) {
  for (std::size_t n = 0; n <= max_degree; ++n) {
    constants_[n] = gegen_orthonormal_constant(params, n);
  }
}

void OrthonormalBasis::eval_all(double t, std::span<double> out) const {
  require_in_interval(t);
  if (out.size() > constants_.size()) {
    throw std::out_of_range("OrthonormalBasis: requested more degrees than built");
  }
  if (out.empty()) return;
  const std::size_t even_count = (out.size() + 1) / 2;
  const std::size_t odd_count = out.size() / 2;
  const double alpha = params_.lambda() - 0.5;
  const double s = 2.0 * t * t - 1.0;
  std::vector<double> jac(even_count);
  jacobi_eval_all(alpha, params_.mu() - 0.5, s, jac);
  for (std::size_t m = 0; m < even_count; ++m) out[2 * m] = constants_[2 * m] * jac[m];
  if (odd_count == 0) return;
  jac.resize(odd_count);
  jacobi_eval_all(alpha, params_.mu() + 0.5, s, jac);
  for (std::size_t m = 0; m < odd_count; ++m) {
    out[2 * m + 1] = constants_[2 * m + 1] * t * jac[m];
  }
}

void gegen_orthonormal_eval_all(const GegenParams& params, double t,
                                std::span<double> out) {
  if (out.empty()) return;
  OrthonormalBasis(params, out.size() - 1).eval_all(t, out);
}

double gegen_connection_residual(const GegenParams& params, std::size_t n, double t,
                                 std::size_t npoints) {
  params.require_positive_mu("connection integral");
  require_in_interval(t);
  const double mu = params.mu();
  const GegenParams classical(params.lambda() + mu, 0.0);
  const QuadRule rule = gauss_jacobi(mu - 1.0, mu - 1.0, npoints);
  const double c_mu = std::exp(-log_beta(0.5, mu));
  const double integral = integrate(rule, [&](double x) {
    return gegen_eval(classical, n, t * x) * (1.0 + x);
  });
  return std::abs(c_mu * integral - gegen_eval(params, n, t));
}

}  // namespace gegen
