#include "gegen/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <string>

namespace gegen {

namespace {

void require_matching(const GegenParams& expansion, const GegenParams& rule) {
  if (!(expansion == rule)) {
    throw MismatchError("quadrature rule was built for different (lambda, mu)");
  }
}

constexpr std::size_t kMaxNormGrid = 2049;

}  // namespace

Expansion::Expansion(GegenParams params, std::vector<double> coeffs)
    : params_(params), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("Expansion needs at least one coefficient");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw std::invalid_argument("Expansion coefficients must be finite");
  }
}

Expansion Expansion::basis(const GegenParams& params, std::size_t m, std::size_t degree) {
  if (m > degree) throw std::invalid_argument("basis index exceeds expansion degree");
  std::vector<double> coeffs(degree + 1, 0.0);
  coeffs[m] = 1.0;
  return Expansion(params, std::move(coeffs));
}

Expansion analyze(const RealFunction& f, const GegenParams& params, std::size_t degree,
                  const MappedRule& rule) {
  require_matching(params, rule.params);
  const OrthonormalBasis basis(params, degree);
  std::vector<double> coeffs(degree + 1, 0.0);
  std::vector<double> values(degree + 1);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double t = rule.nodes[i];
    const double weighted = rule.weights[i] * f(t);
    basis.eval_all(t, values);
    for (std::size_t n = 0; n <= degree; ++n) coeffs[n] += weighted * values[n];
  }
  return Expansion(params, std::move(coeffs));
}

double synthesize(const Expansion& expansion, double t) {
  const OrthonormalBasis basis(expansion.params(), expansion.degree());
  std::vector<double> values(expansion.degree() + 1);
  basis.eval_all(t, values);
  double sum = 0.0;
  for (std::size_t n = 0; n < values.size(); ++n) sum += expansion.coeffs()[n] * values[n];
  return sum;
}

RealFunction as_function(const Expansion& expansion) {
  auto basis = std::make_shared<const OrthonormalBasis>(expansion.params(),
                                                        expansion.degree());
  return [basis, coeffs = expansion.coeffs()](double t) {
    std::vector<double> values(coeffs.size());
    basis->eval_all(t, values);
    double sum = 0.0;
    for (std::size_t n = 0; n < values.size(); ++n) sum += coeffs[n] * values[n];
    return sum;
  };
}

double lp_norm(const RealFunction& f, double p, const GegenParams& params,
               const MappedRule& rule) {
  require_matching(params, rule.params);
  if (!(p >= 1.0)) throw DomainError("lp_norm requires p >= 1");
  if (std::isinf(p)) {
    double best = 0.0;
    for (double t : rule.nodes) best = std::max(best, std::abs(f(t)));
    const double last = static_cast<double>(kMaxNormGrid - 1);
    for (std::size_t k = 0; k < kMaxNormGrid; ++k) {
      const double kd = static_cast<double>(k);
      best = std::max(best, std::abs(f(-1.0 + 2.0 * kd / last)));
      best = std::max(best, std::abs(f(std::cos(kd * std::numbers::pi / last))));
    }
    return best;
  }
  const double integral = integrate(rule, [&](double t) { return std::pow(std::abs(f(t)), p); });
  return std::pow(integral, 1.0 / p);
}

ParsevalResult parseval_check(const RealFunction& f, const GegenParams& params,
                              std::size_t degree, const MappedRule& rule) {
  const Expansion expansion = analyze(f, params, degree, rule);
  ParsevalResult result;
  result.lhs = integrate(rule, [&](double t) {
    const double value = f(t);
    return value * value;
  });
  for (double c : expansion.coeffs()) result.rhs += c * c;
  return result;
}

double lp_sequence_norm(const std::vector<double>& values, double p) {
  if (!(p >= 1.0)) throw DomainError("lp_sequence_norm requires p >= 1");
  if (std::isinf(p)) {
    double best = 0.0;
    for (double v : values) best = std::max(best, std::abs(v));
    return best;
  }
  double sum = 0.0;
  for (double v : values) sum += std::pow(std::abs(v), p);
  return std::pow(sum, 1.0 / p);
}

}  // namespace gegen
