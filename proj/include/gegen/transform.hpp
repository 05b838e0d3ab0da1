#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gegen/quadrature.hpp"
#include "gegen/specfun.hpp"

namespace gegen {

using RealFunction = std::function<double(double)>;

/// Coefficients f̂_0..f̂_N of a generalized Gegenbauer expansion.
class Expansion {
 public:
  Expansion(GegenParams params, std::vector<double> coeffs);

  const GegenParams& params() const noexcept { return params_; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }

  /// Unit expansion e_m of the given degree (degree >= m).
  static Expansion basis(const GegenParams& params, std::size_t m, std::size_t degree);

 private:
  GegenParams params_;
  std::vector<double> coeffs_;
};

/// Half-node count used when callers do not size the rule themselves.
inline std::size_t default_rule_points(std::size_t degree) { return degree + 32; }

/// f̂_n = integral f C̃_n v for n = 0..N, by quadrature with `rule`.
Expansion analyze(const RealFunction& f, const GegenParams& params, std::size_t degree,
                  const MappedRule& rule);

/// Partial sum sum_n coeffs[n] C̃_n(t).
double synthesize(const Expansion& expansion, double t);

/// Callable view of synthesize() for use as an analysis input.
RealFunction as_function(const Expansion& expansion);

/// ||f||_{L_p(v)}. Pass infinity for the max norm (sampled, see below).
///
/// The max norm is sampled over the rule nodes, a 2049-point uniform grid and
/// 2049 Chebyshev points cos(k pi / 2048).
double lp_norm(const RealFunction& f, double p, const GegenParams& params,
               const MappedRule& rule);

struct ParsevalResult {
  double lhs = 0.0;  // ||f||_2^2
  double rhs = 0.0;  // sum of squared coefficients
};

ParsevalResult parseval_check(const RealFunction& f, const GegenParams& params,
                              std::size_t degree, const MappedRule& rule);

/// Unweighted l_p norm of a coefficient vector; p = infinity gives the max.
double lp_sequence_norm(const std::vector<double>& values, double p);

}  // namespace gegen
