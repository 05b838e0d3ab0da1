#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gegen/transform.hpp"

namespace gegen {

/// Positive sequence omega(n), n = 0..truncation.
struct WeightSeq {
  std::function<double(std::size_t)> values;
  std::string label;
  std::size_t truncation = 0;

  /// Checked access: throws DomainError past the truncation or on omega(n) <= 0.
  double operator()(std::size_t n) const;

  /// omega(n) = (n+1)^{-a}.
  static WeightSeq power(double a, std::size_t truncation);
  /// omega(n) = c.
  static WeightSeq constant(double c, std::size_t truncation);
  /// omega(n) = table[n]; truncation = table.size() - 1.
  static WeightSeq table(std::vector<double> table, std::string label);

  /// Same sequence multiplied by c > 0.
  WeightSeq scaled(double c) const;
  /// Same sequence with a different truncation.
  WeightSeq truncated(std::size_t truncation) const;
};

/// Truncated M_omega = max over thresholds t of t * sum_{omega(n) >= t} (n+1)^{2 sigma}.
struct MOmegaResult {
  double value = 0.0;
  double argmax_t = 0.0;
  std::size_t truncation = 0;
};

MOmegaResult m_omega(const WeightSeq& w, const GegenParams& params);

/// M_omega at the given truncation and at twice that truncation.
struct MOmegaConvergence {
  MOmegaResult base;
  MOmegaResult doubled;
  double change() const { return doubled.value - base.value; }
};

MOmegaConvergence m_omega_convergence(const WeightSeq& w, const GegenParams& params);

struct LayerCakeResult {
  double lhs = 0.0;  // sum over phi(n) <= A of phi(n)^gamma psi(n)
  double rhs = 0.0;  // gamma * int_0^A t^{gamma-1} (sum_{t <= phi(n) <= A} psi(n)) dt
};

/// Both sides of the layer-cake identity; the integral is evaluated in closed
/// form piece by piece between consecutive distinct values of phi.
LayerCakeResult layer_cake_check(std::span<const double> phi, std::span<const double> psi,
                                 double gamma, double A);

/// p' with 1/p + 1/p' = 1.
double conjugate_exponent(double p);

/// {sum_n ((n+1)^{(1/p-1/p')sigma} omega(n)^{1/p-1/p'} |f̂_n|)^p}^{1/p}, 1 < p <= 2.
double paley_lhs(const Expansion& expansion, double p, const WeightSeq& w);

/// {sum_n ((n+1)^{(1/p'-1/p)sigma} |f̂_n|)^{p'}}^{1/p'}, 1 < p <= 2.
double hy_lhs(const Expansion& expansion, double p);

/// {sum_n ((n+1)^{(2/s-1)sigma} omega(n)^{1/s-1/p'} |f̂_n|)^s}^{1/s}, p <= s <= p'.
double hyp_lhs(const Expansion& expansion, double p, double s, const WeightSeq& w);

/// Interpolation parameter and exponents for the (p, s) family.
struct InterpolationPlan {
  double p = 2.0;
  double s = 2.0;
  double t_param = 0.0;           // 1/s = (1-t)/p' + t/p
  double paley_exponent = 0.0;    // 1/p - 1/p'
  double hy_exponent = 0.0;       // 1/p' - 1/p
  double hyp_coeff_exponent = 0.0;  // 2/s - 1; multiplies sigma
  double omega_exponent = 0.0;    // 1/s - 1/p'

  /// (1/p - 1/p') t - (1/s - 1/p'); zero in exact arithmetic.
  double identity_defect() const;
};

InterpolationPlan interpolation_plan(double p, double s);

/// log C_p(s) = (1-t) log B_p + t log A_p for given endpoint constants.
double interpolated_constant(const InterpolationPlan& plan, double a_p, double b_p);

enum class Functional { paley, hausdorff_young, hyp };

const char* functional_name(Functional functional);
Functional parse_functional(const std::string& name);

struct InequalityReport {
  Functional functional = Functional::paley;
  std::string label;
  double p = 0.0;
  double s = 0.0;  // p for paley, p' for hausdorff_young
  std::size_t degree = 0;
  double lhs = 0.0;
  double f_norm = 0.0;
  double m_omega = 0.0;
  double ratio = 0.0;  // lhs / (m_omega^{1/s-1/p'} f_norm); 0 when f_norm = 0
};

struct LabeledFunction {
  std::string label;
  RealFunction f;
};

struct SweepRequest {
  std::vector<LabeledFunction> family;
  std::vector<Functional> functionals;
  std::vector<double> p_grid;
  std::vector<double> s_grid;  // used by the hyp functional only
  std::size_t degree = 0;
  std::size_t threads = 1;
};

/// Evaluates every (function, functional, p, s) combination. Output order is
/// lexicographic in that tuple whatever the thread count.
std::vector<InequalityReport> inequality_sweep(const SweepRequest& request,
                                               const GegenParams& params,
                                               const WeightSeq& w, const MappedRule& rule);

struct SynthesisStep {
  std::size_t degree = 0;
  double norm = 0.0;              // ||Phi_N||_{L_q}
  double cauchy_difference = 0.0; // ||Phi_N - Phi_{previous N}||_{L_q}; 0 for the first
  double coefficient_error = 0.0; // max_n |(Phi_N)^_n - phi(n)|
  double weighted_sum = 0.0;      // M^{1/r-1/q} {sum ((n+1)^{(1-2/r)sigma} omega^{1/q-1/r} phi)^{r'}}^{1/r'}
  double ratio = 0.0;             // norm / weighted_sum
};

struct SynthesisReport {
  double q = 2.0;
  double r = 2.0;
  double m_omega = 0.0;
  std::vector<SynthesisStep> steps;

  bool cauchy_monotone() const;
  double max_coefficient_error() const;
};

/// Builds Phi_N = sum_{n<=N} phi(n) C̃_n for each N and tracks L_q convergence.
SynthesisReport synthesis_convergence_report(const std::function<double(std::size_t)>& phi,
                                             double q, double r, const WeightSeq& w,
                                             const std::vector<std::size_t>& degrees,
                                             const GegenParams& params,
                                             const MappedRule& rule);

}  // namespace gegen
