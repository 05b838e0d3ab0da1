#include "gegen/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gegen/asymptotics.hpp"
#include "gegen/families.hpp"
#include "gegen/io.hpp"
#include "gegen/parallel.hpp"

namespace gegen {

namespace {

VerifyRecord record(const std::string& suite, const std::string& check, double value,
                    double tolerance) {
  return {suite, check, value, tolerance, std::isfinite(value) && value <= tolerance};
}

double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
}

MappedRule rule_for(const GegenParams& params, const VerifySettings& s) {
  return v_rule(params, s.npoints > 0 ? s.npoints : default_rule_points(s.degree));
}

std::vector<VerifyRecord> orthonormality(const GegenParams& params, const VerifySettings& s) {
  const MappedRule rule = rule_for(params, s);
  const std::size_t size = s.degree + 1;
  std::vector<double> gram(size * size, 0.0);
  std::vector<double> values(size);
  const OrthonormalBasis basis(params, s.degree);
  for (std::size_t k = 0; k < rule.size(); ++k) {
    basis.eval_all(rule.nodes[k], values);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) gram[i * size + j] += rule.weights[k] * values[i] * values[j];
    }
  }
  double offdiag = 0.0;
  double diag = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const double entry = gram[i * size + j];
      if (i == j) diag = std::max(diag, std::abs(entry - 1.0));
      else offdiag = std::max(offdiag, std::abs(entry));
    }
  }
  return {record("orthonormality", "max_offdiagonal", offdiag, 1e-10),
          record("orthonormality", "max_diagonal_defect", diag, 1e-10)};
}

std::vector<VerifyRecord> parseval(const GegenParams& params, const VerifySettings& s) {
  const MappedRule rule = rule_for(params, s);
  SeededUniform rng(s.seed);
  std::vector<VerifyRecord> records;
  for (int k = 0; k < 10; ++k) {
    std::vector<double> coeffs(s.degree + 1);
    for (double& c : coeffs) c = rng(-1.0, 1.0);
    const RealFunction f = [coeffs](double t) {
      double sum = 0.0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) sum = sum * t + *it;
      return sum;
    };
    const ParsevalResult r = parseval_check(f, params, s.degree, rule);
    records.push_back(record("parseval", "random_poly_" + std::to_string(k),
                             std::abs(r.lhs - r.rhs) / std::max(1.0, r.lhs), 1e-10));
  }
  for (std::size_t m : {std::size_t{0}, s.degree / 2, s.degree}) {
    const ParsevalResult r = parseval_check(
        [&](double t) { return gegen_orthonormal_eval(params, m, t); }, params, s.degree, rule);
    records.push_back(record("parseval", "basis_" + std::to_string(m),
                             std::abs(r.lhs - 1.0) + std::abs(r.rhs - 1.0), 1e-10));
  }
  return records;
}

std::vector<VerifyRecord> connection(const GegenParams& params, const VerifySettings& s) {
  const std::size_t max_n = std::min<std::size_t>(s.degree, 10);
  const std::size_t npoints = s.npoints > 0 ? s.npoints : 64;
  std::vector<VerifyRecord> records;
  for (std::size_t n = 0; n <= max_n; ++n) {
    double worst = 0.0;
    for (int k = 0; k <= 32; ++k) {
      const double t = -1.0 + 2.0 * k / 32.0;
      worst = std::max(worst, gegen_connection_residual(params, n, t, npoints));
    }
    records.push_back(record("connection", "max_residual_n" + std::to_string(n), worst, 1e-8));
  }
  return records;
}

std::vector<VerifyRecord> layercake(const VerifySettings& s) {
  std::vector<VerifyRecord> records;
  {
    const std::vector<double> phi = {1, 2, 3, 4, 5};
    const std::vector<double> psi(5, 1.0);
    const LayerCakeResult r = layer_cake_check(phi, psi, 2.0, 3.0);
    records.push_back(record("layercake", "worked_lhs_minus_14", std::abs(r.lhs - 14.0), 1e-12));
    records.push_back(record("layercake", "worked_rhs_minus_14", std::abs(r.rhs - 14.0), 1e-12));
  }
  SeededUniform rng(s.seed);
  double worst = 0.0;
  for (int instance = 0; instance < 100; ++instance) {
    const std::size_t k = rng.integer(0, 50);
    std::vector<double> phi(k + 1);
    std::vector<double> psi(k + 1);
    for (std::size_t n = 0; n <= k; ++n) {
      // Coarse phi values so that ties occur.
      phi[n] = 0.25 * static_cast<double>(rng.integer(1, 40));
      psi[n] = rng(0.0, 3.0);
    }
    const double gamma = rng(1.0, 4.0);
    const double A = rng(0.1, 10.0);
    const LayerCakeResult r = layer_cake_check(phi, psi, gamma, A);
    worst = std::max(worst, std::abs(r.lhs - r.rhs) / std::max(1.0, r.lhs));
  }
  records.push_back(record("layercake", "random_max_relative_gap", worst, 1e-12));
  return records;
}

std::vector<VerifyRecord> momega(const GegenParams& params, const VerifySettings& s) {
  std::vector<VerifyRecord> records;
  const GegenParams unit_sigma(1.0, 0.5);
  const WeightSeq anchor = WeightSeq::power(3.0, 1024);
  const MOmegaConvergence conv = m_omega_convergence(anchor, unit_sigma);
  records.push_back(record("momega", "anchor_value_minus_1", std::abs(conv.base.value - 1.0), 0.0));
  records.push_back(record("momega", "anchor_argmax_minus_1", std::abs(conv.base.argmax_t - 1.0), 0.0));
  records.push_back(record("momega", "anchor_doubling_change", std::abs(conv.change()), 0.0));

  const WeightSeq w = resolve_omega(s.omega_spec, params, std::max<std::size_t>(s.degree, 1));
  const MOmegaResult configured = m_omega(w, params);
  // A table cannot be extended, so only analytic weights get the doubling check.
  if (w.label.rfind("table:", 0) != 0) {
    const MOmegaConvergence doubled = m_omega_convergence(w, params);
    records.push_back(record("momega", "configured_doubling_relative_change",
                             relative_gap(doubled.base.value, doubled.doubled.value), 1e-12));
  }
  // A dense threshold grid must never beat the scan over omega values.
  double dense_best = 0.0;
  std::vector<double> omega(w.truncation + 1);
  for (std::size_t n = 0; n <= w.truncation; ++n) omega[n] = w(n);
  const double top = *std::max_element(omega.begin(), omega.end());
  for (int k = 1; k <= 10000; ++k) {
    const double t = top * k / 10000.0;
    double mass = 0.0;
    for (std::size_t n = 0; n <= w.truncation; ++n) {
      if (omega[n] >= t) mass += std::pow(static_cast<double>(n + 1), 2.0 * params.sigma());
    }
    dense_best = std::max(dense_best, t * mass);
  }
  records.push_back(record("momega", "dense_grid_excess",
                           std::max(0.0, dense_best - configured.value) / configured.value, 1e-12));
  return records;
}

std::vector<VerifyRecord> endpoints(const GegenParams& params, const VerifySettings& s) {
  const WeightSeq w = resolve_omega(s.omega_spec, params, s.degree);
  const MappedRule rule = rule_for(params, s);
  SeededUniform rng(s.seed);
  double paley_gap = 0.0;
  double hy_gap = 0.0;
  double collapse_gap = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Expansion e(params, random_decaying_coeffs(s.degree, rng(0.0, 2.0), rng));
    for (double p : {1.25, 1.5, 1.75}) {
      paley_gap = std::max(paley_gap, relative_gap(hyp_lhs(e, p, p, w), paley_lhs(e, p, w)));
      hy_gap = std::max(hy_gap, relative_gap(hyp_lhs(e, p, conjugate_exponent(p), w), hy_lhs(e, p)));
    }
    const double l2 = lp_sequence_norm(e.coeffs(), 2.0);
    const double f2 = lp_norm(as_function(e), 2.0, params, rule);
    for (double v : {paley_lhs(e, 2.0, w), hy_lhs(e, 2.0), hyp_lhs(e, 2.0, 2.0, w), f2}) {
      collapse_gap = std::max(collapse_gap, relative_gap(v, l2));
    }
  }
  return {record("endpoints", "hyp_at_p_vs_paley", paley_gap, 1e-12),
          record("endpoints", "hyp_at_pconj_vs_hy", hy_gap, 1e-12),
          record("endpoints", "p2_collapse_to_parseval", collapse_gap, 1e-10)};
}

std::vector<VerifyRecord> interpolation() {
  std::vector<VerifyRecord> records;
  const InterpolationPlan mid = interpolation_plan(4.0 / 3.0, 2.0);
  records.push_back(record("interpolation", "t_at_p4/3_s2_minus_half", std::abs(mid.t_param - 0.5), 1e-14));
  double endpoint = 0.0;
  double identity = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double p = 1.0 + (i + 1) / 20.0;
    const double pc = conjugate_exponent(p);
    endpoint = std::max(endpoint, std::abs(interpolation_plan(p, pc).t_param - 0.0));
    // At p = 2 the endpoints coincide and t is 0 by convention.
    if (p < 2.0) endpoint = std::max(endpoint, std::abs(interpolation_plan(p, p).t_param - 1.0));
    for (int j = 0; j < 20; ++j) {
      const double s = p + (pc - p) * j / 19.0;
      identity = std::max(identity, std::abs(interpolation_plan(p, s).identity_defect()));
    }
  }
  records.push_back(record("interpolation", "endpoint_t_defect", endpoint, 0.0));
  records.push_back(record("interpolation", "identity_defect_grid", identity, 1e-14));
  return records;
}

std::vector<VerifyRecord> supnorm_suite(const GegenParams& params, const VerifySettings& s) {
  const SupNormScan scan = supnorm_scan(params, geometric_ladder(32, 512), s.threads);
  const ExponentFit fit = exponent_fit(scan, 32);
  std::vector<VerifyRecord> records;
  records.push_back(record("supnorm", "slope_minus_sigma", std::abs(fit.slope - params.sigma()), 0.1));
  std::vector<double> scaled;
  for (const auto& e : scan.entries) {
    scaled.push_back(e.sup_norm / std::pow(static_cast<double>(e.n), params.sigma()));
  }
  std::vector<double> sorted = scaled;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  double band = 1.0;
  for (double v : scaled) band = std::max({band, v / median, median / v});
  records.push_back(record("supnorm", "ratio_band_vs_median", band, 4.0));
  return records;
}

std::vector<VerifyRecord> synthesis(const GegenParams& params, const VerifySettings& s) {
  const std::vector<std::size_t> degrees = {8, 16, 32, 64, 128};
  const WeightSeq w = resolve_omega(s.omega_spec, params, degrees.back());
  const MappedRule rule = v_rule(params, degrees.back() + 32);
  const double sigma = params.sigma();
  const auto phi = [sigma](std::size_t n) {
    return std::pow(static_cast<double>(n + 1), -sigma - 2.0);
  };
  std::vector<VerifyRecord> records;
  for (double q : {2.0, 4.0}) {
    const SynthesisReport report =
        synthesis_convergence_report(phi, q, 2.0, w, degrees, params, rule);
    const std::string tag = "q" + io::format_real(q);
    records.push_back(record("synthesis", tag + "_cauchy_not_monotone",
                             report.cauchy_monotone() ? 0.0 : 1.0, 0.0));
    records.push_back(record("synthesis", tag + "_coefficient_error",
                             report.max_coefficient_error(), 1e-10));
  }
  return records;
}

std::vector<VerifyRecord> ratio(const GegenParams& params, const VerifySettings& s) {
  const std::vector<std::size_t> degrees = {8, 16, 32, 64};
  const std::vector<double> p_grid = {1.25, 1.5, 1.75, 2.0};
  // key: (functional, p index, s slot) -> max ratio per degree
  std::vector<std::vector<double>> maxima;
  double basis_gap = 0.0;
  for (std::size_t d = 0; d < degrees.size(); ++d) {
    const std::size_t degree = degrees[d];
    const WeightSeq w = resolve_omega(s.omega_spec, params, degree);
    const MappedRule rule = v_rule(params, default_rule_points(degree));
    std::size_t key = 0;
    for (double p : p_grid) {
      const double pc = conjugate_exponent(p);
      SweepRequest request{canonical_family(params, degree, s.seed),
                           {Functional::paley, Functional::hausdorff_young, Functional::hyp},
                           {p}, {p, 0.5 * (p + pc), pc}, degree, s.threads};
      const auto reports = inequality_sweep(request, params, w, rule);
      // Slots per family member: paley, hy, hyp x 3.
      const std::size_t per_member = 5;
      for (std::size_t slot = 0; slot < per_member; ++slot, ++key) {
        double best = 0.0;
        for (std::size_t i = slot; i < reports.size(); i += per_member) {
          best = std::max(best, reports[i].ratio);
          if (p == 2.0 && reports[i].label.rfind("basis:", 0) == 0) {
            basis_gap = std::max(basis_gap, std::abs(reports[i].ratio - 1.0));
          }
        }
        if (maxima.size() <= key) maxima.emplace_back();
        maxima[key].push_back(best);
      }
    }
  }
  double spread = 1.0;
  for (const auto& series : maxima) {
    const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
    spread = std::max(spread, *hi / *lo);
  }
  return {record("ratio", "max_ratio_spread_across_N", spread, 2.0),
          record("ratio", "basis_ratio_at_p2_minus_1", basis_gap, 1e-10)};
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "orthonormality", "parseval",  "connection", "layercake", "momega",
      "endpoints",      "interpolation", "supnorm", "synthesis", "ratio"};
  return names;
}

WeightSeq resolve_omega(const std::string& spec, const GegenParams& params,
                        std::size_t truncation) {
  if (spec == "canonical") {
    WeightSeq w = WeightSeq::power(2.0 * params.sigma() + 1.0, truncation);
    w.label = "power:a=" + io::format_real(2.0 * params.sigma() + 1.0);
    return w;
  }
  return io::parse_omega_spec(spec, truncation);
}

std::vector<VerifyRecord> run_verify_suite(const std::string& suite,
                                           const VerifySettings& settings) {
  const GegenParams params(settings.lambda, settings.mu);
  if (suite == "all") {
    std::vector<VerifyRecord> all;
    for (const auto& name : verify_suite_names()) {
      if ((name == "connection" || name == "supnorm") && !(params.mu() > 0.0)) continue;
      auto part = run_verify_suite(name, settings);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "orthonormality") return orthonormality(params, settings);
  if (suite == "parseval") return parseval(params, settings);
  if (suite == "connection") return connection(params, settings);
  if (suite == "layercake") return layercake(settings);
  if (suite == "momega") return momega(params, settings);
  if (suite == "endpoints") return endpoints(params, settings);
  if (suite == "interpolation") return interpolation();
  if (suite == "supnorm") return supnorm_suite(params, settings);
  if (suite == "synthesis") return synthesis(params, settings);
  if (suite == "ratio") return ratio(params, settings);
  throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

std::string verify_csv(const std::vector<VerifyRecord>& records) {
  std::ostringstream out;
  out << "suite,check,value,tolerance,passed\n";
  for (const auto& r : records) {
    out << r.suite << ',' << r.check << ',' << io::format_real(r.value) << ','
        << io::format_real(r.tolerance) << ',' << (r.passed ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace gegen
