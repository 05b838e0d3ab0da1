#include "gegen/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <stdexcept>

#include "gegen/parallel.hpp"

namespace gegen {

namespace {

constexpr double kRangeSlack = 1e-12;

void require_p(double p, const char* what) {
  if (!(p > 1.0 && p <= 2.0)) {
    throw DomainError(std::string(what) + " requires 1 < p <= 2");
  }
}

void require_s(double p, double s, const char* what) {
  const double pc = conjugate_exponent(p);
  if (!(s >= p * (1.0 - kRangeSlack) && s <= pc * (1.0 + kRangeSlack))) {
    throw DomainError(std::string(what) + " requires p <= s <= p'");
  }
}

// Exponents of the (p, s) family: (n+1)^{coeff} omega(n)^{omega}.
struct FamilyExponents {
  double coeff = 0.0;  // already multiplied by sigma
  double omega = 0.0;
};

FamilyExponents family_exponents(double p, double s, double sigma) {
  return {(2.0 / s - 1.0) * sigma, 1.0 / s - 1.0 / conjugate_exponent(p)};
}

// {sum_n ((n+1)^{e.coeff} omega(n)^{e.omega} |c_n|)^s}^{1/s}.
double weighted_sequence_norm(const Expansion& expansion, FamilyExponents e, double s,
                              const WeightSeq* w) {
  const auto& coeffs = expansion.coeffs();
  if (w != nullptr && e.omega != 0.0 && expansion.degree() > w->truncation) {
    throw DomainError("expansion degree exceeds the weight sequence truncation");
  }
  double sum = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    double factor = std::pow(static_cast<double>(n + 1), e.coeff);
    if (e.omega != 0.0) factor *= std::pow((*w)(n), e.omega);
    sum += std::pow(factor * std::abs(coeffs[n]), s);
  }
  return std::pow(sum, 1.0 / s);
}

}  // namespace

double WeightSeq::operator()(std::size_t n) const {
  if (n > truncation) {
    throw DomainError("weight sequence '" + label + "' queried beyond its truncation");
  }
  const double value = values(n);
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("weight sequence '" + label + "' is not positive at n = " +
                      std::to_string(n));
  }
  return value;
}

WeightSeq WeightSeq::power(double a, std::size_t truncation) {
  return {[a](std::size_t n) { return std::pow(static_cast<double>(n + 1), -a); },
          "power:a=" + std::to_string(a), truncation};
}

WeightSeq WeightSeq::constant(double c, std::size_t truncation) {
  return {[c](std::size_t) { return c; }, "const:c=" + std::to_string(c), truncation};
}

WeightSeq WeightSeq::table(std::vector<double> table, std::string label) {
  if (table.empty()) throw DomainError("weight table is empty");
  const std::size_t truncation = table.size() - 1;
  return {[values = std::move(table)](std::size_t n) { return values.at(n); },
          std::move(label), truncation};
}

WeightSeq WeightSeq::scaled(double c) const {
  return {[inner = values, c](std::size_t n) { return c * inner(n); },
          label + "*" + std::to_string(c), truncation};
}

WeightSeq WeightSeq::truncated(std::size_t new_truncation) const {
  return {values, label, new_truncation};
}

MOmegaResult m_omega(const WeightSeq& w, const GegenParams& params) {
  const std::size_t count = w.truncation + 1;
  std::vector<double> omega(count);
  for (std::size_t n = 0; n < count; ++n) omega[n] = w(n);

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return omega[a] > omega[b]; });

  const double two_sigma = 2.0 * params.sigma();
  MOmegaResult result{-1.0, 0.0, w.truncation};
  double mass = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = order[k];
    mass += std::pow(static_cast<double>(n + 1), two_sigma);
    // Evaluate once per distinct threshold, after its whole tie group.
    if (k + 1 < count && omega[order[k + 1]] == omega[n]) continue;
    const double t = omega[n];
    const double value = t * mass;
    // Thresholds descend, so >= keeps the smallest t among equal maxima.
    if (value >= result.value) {
      result.value = value;
      result.argmax_t = t;
    }
  }
  return result;
}

MOmegaConvergence m_omega_convergence(const WeightSeq& w, const GegenParams& params) {
  const std::size_t doubled = std::max<std::size_t>(1, 2 * w.truncation);
  return {m_omega(w, params), m_omega(w.truncated(doubled), params)};
}

LayerCakeResult layer_cake_check(std::span<const double> phi, std::span<const double> psi,
                                 double gamma, double A) {
  if (phi.size() != psi.size()) {
    throw std::invalid_argument("layer_cake_check: phi and psi lengths differ");
  }
  if (!(gamma >= 1.0)) throw DomainError("layer_cake_check requires gamma >= 1");
  if (!(A > 0.0)) throw DomainError("layer_cake_check requires A > 0");

  std::vector<std::pair<double, double>> level;  // (phi, psi) with phi <= A
  LayerCakeResult result;
  for (std::size_t n = 0; n < phi.size(); ++n) {
    if (!(phi[n] > 0.0)) throw DomainError("layer_cake_check requires phi > 0");
    if (!(psi[n] >= 0.0)) throw DomainError("layer_cake_check requires psi >= 0");
    if (phi[n] <= A) {
      result.lhs += std::pow(phi[n], gamma) * psi[n];
      level.emplace_back(phi[n], psi[n]);
    }
  }
  std::sort(level.begin(), level.end());

  // On (v_{j-1}, v_j] the level sum is the psi mass with phi >= v_j, and
  // gamma * int t^{gamma-1} dt over the piece is v_j^gamma - v_{j-1}^gamma.
  double tail = 0.0;
  for (const auto& entry : level) tail += entry.second;
  double previous_power = 0.0;
  std::size_t k = 0;
  while (k < level.size()) {
    const double v = level[k].first;
    const double power = std::pow(v, gamma);
    result.rhs += (power - previous_power) * tail;
    previous_power = power;
    while (k < level.size() && level[k].first == v) tail -= level[k++].second;
  }
  return result;
}

double conjugate_exponent(double p) {
  if (!(p > 1.0)) throw DomainError("conjugate exponent requires p > 1");
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

double paley_lhs(const Expansion& expansion, double p, const WeightSeq& w) {
  require_p(p, "paley_lhs");
  return weighted_sequence_norm(expansion, family_exponents(p, p, expansion.params().sigma()),
                                p, &w);
}

double hy_lhs(const Expansion& expansion, double p) {
  require_p(p, "hy_lhs");
  const double pc = conjugate_exponent(p);
  return weighted_sequence_norm(expansion, family_exponents(p, pc, expansion.params().sigma()),
                                pc, nullptr);
}

double hyp_lhs(const Expansion& expansion, double p, double s, const WeightSeq& w) {
  require_p(p, "hyp_lhs");
  require_s(p, s, "hyp_lhs");
  return weighted_sequence_norm(expansion, family_exponents(p, s, expansion.params().sigma()),
                                s, &w);
}

double InterpolationPlan::identity_defect() const {
  return paley_exponent * t_param - omega_exponent;
}

InterpolationPlan interpolation_plan(double p, double s) {
  require_p(p, "interpolation_plan");
  require_s(p, s, "interpolation_plan");
  const double pc = conjugate_exponent(p);
  InterpolationPlan plan;
  plan.p = p;
  plan.s = s;
  plan.paley_exponent = 1.0 / p - 1.0 / pc;
  plan.hy_exponent = 1.0 / pc - 1.0 / p;
  plan.hyp_coeff_exponent = 2.0 / s - 1.0;
  plan.omega_exponent = 1.0 / s - 1.0 / pc;
  if (p == 2.0) {
    plan.t_param = 0.0;  // s = p = p' = 2: both endpoints coincide
  } else if (s == pc) {
    plan.t_param = 0.0;
  } else if (s == p) {
    plan.t_param = 1.0;
  } else {
    // s within the slack of an endpoint can land a hair outside [0, 1].
    plan.t_param = std::clamp((1.0 / pc - 1.0 / s) / (1.0 / pc - 1.0 / p), 0.0, 1.0);
  }
  if (!(std::abs(plan.identity_defect()) <= 1e-14)) {
    throw std::logic_error("interpolation_plan: exponent identity violated");
  }
  return plan;
}

double interpolated_constant(const InterpolationPlan& plan, double a_p, double b_p) {
  if (!(a_p > 0.0) || !(b_p > 0.0)) {
    throw DomainError("interpolated_constant requires positive endpoint constants");
  }
  return std::exp((1.0 - plan.t_param) * std::log(b_p) + plan.t_param * std::log(a_p));
}

const char* functional_name(Functional functional) {
  switch (functional) {
    case Functional::paley:
      return "paley";
    case Functional::hausdorff_young:
      return "hausdorff_young";
    case Functional::hyp:
      return "hyp";
  }
  return "unknown";
}

Functional parse_functional(const std::string& name) {
  if (name == "paley") return Functional::paley;
  if (name == "hausdorff_young" || name == "hy") return Functional::hausdorff_young;
  if (name == "hyp") return Functional::hyp;
  throw std::invalid_argument("unknown functional '" + name + "'");
}

std::vector<InequalityReport> inequality_sweep(const SweepRequest& request,
                                               const GegenParams& params,
                                               const WeightSeq& w, const MappedRule& rule) {
  for (double p : request.p_grid) require_p(p, "inequality_sweep");

  const std::size_t family_size = request.family.size();
  const std::size_t p_count = request.p_grid.size();
  const MOmegaResult mw = m_omega(w, params);

  std::vector<std::optional<Expansion>> expansions(family_size);
  std::vector<double> norms(family_size * p_count);
  parallel_for(family_size, request.threads, [&](std::size_t i) {
    const auto& f = request.family[i].f;
    expansions[i] = analyze(f, params, request.degree, rule);
    for (std::size_t j = 0; j < p_count; ++j) {
      norms[i * p_count + j] = lp_norm(f, request.p_grid[j], params, rule);
    }
  });

  // Enumerate the report slots first so the order is fixed before evaluation.
  struct Slot {
    std::size_t family;
    Functional functional;
    std::size_t p_index;
    double s;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < family_size; ++i) {
    for (Functional functional : request.functionals) {
      for (std::size_t j = 0; j < p_count; ++j) {
        const double p = request.p_grid[j];
        switch (functional) {
          case Functional::paley:
            slots.push_back({i, functional, j, p});
            break;
          case Functional::hausdorff_young:
            slots.push_back({i, functional, j, conjugate_exponent(p)});
            break;
          case Functional::hyp:
            for (double s : request.s_grid) {
              require_s(p, s, "inequality_sweep");
              slots.push_back({i, functional, j, s});
            }
            break;
        }
      }
    }
  }

  std::vector<InequalityReport> reports(slots.size());
  parallel_for(slots.size(), request.threads, [&](std::size_t k) {
    const Slot& slot = slots[k];
    const Expansion& expansion = *expansions[slot.family];
    const double p = request.p_grid[slot.p_index];
    InequalityReport report;
    report.functional = slot.functional;
    report.label = request.family[slot.family].label;
    report.p = p;
    report.s = slot.s;
    report.degree = request.degree;
    report.f_norm = norms[slot.family * p_count + slot.p_index];
    report.m_omega = mw.value;
    double omega_exponent = 0.0;
    switch (slot.functional) {
      case Functional::paley:
        report.lhs = paley_lhs(expansion, p, w);
        omega_exponent = 1.0 / p - 1.0 / conjugate_exponent(p);
        break;
      case Functional::hausdorff_young:
        report.lhs = hy_lhs(expansion, p);
        break;
      case Functional::hyp:
        report.lhs = hyp_lhs(expansion, p, slot.s, w);
        omega_exponent = 1.0 / slot.s - 1.0 / conjugate_exponent(p);
        break;
    }
    const double denominator = std::pow(mw.value, omega_exponent) * report.f_norm;
    report.ratio = denominator > 0.0 ? report.lhs / denominator : 0.0;
    reports[k] = std::move(report);
  });
  return reports;
}

bool SynthesisReport::cauchy_monotone() const {
  for (std::size_t k = 2; k < steps.size(); ++k) {
    if (!(steps[k].cauchy_difference < steps[k - 1].cauchy_difference)) return false;
  }
  return true;
}

double SynthesisReport::max_coefficient_error() const {
  double worst = 0.0;
  for (const auto& step : steps) worst = std::max(worst, step.coefficient_error);
  return worst;
}

SynthesisReport synthesis_convergence_report(const std::function<double(std::size_t)>& phi,
                                             double q, double r, const WeightSeq& w,
                                             const std::vector<std::size_t>& degrees,
                                             const GegenParams& params,
                                             const MappedRule& rule) {
  if (!(q >= 2.0) || std::isinf(q)) throw DomainError("synthesis report requires 2 <= q < inf");
  const double qc = conjugate_exponent(q);
  if (!(r >= qc * (1.0 - kRangeSlack) && r <= q * (1.0 + kRangeSlack))) {
    throw DomainError("synthesis report requires q' <= r <= q");
  }
  if (degrees.empty() || !std::is_sorted(degrees.begin(), degrees.end()) ||
      std::adjacent_find(degrees.begin(), degrees.end()) != degrees.end()) {
    throw std::invalid_argument("synthesis degrees must be strictly increasing");
  }

  SynthesisReport report;
  report.q = q;
  report.r = r;
  report.m_omega = m_omega(w, params).value;

  const double sigma = params.sigma();
  const double rc = conjugate_exponent(r);
  const double coeff_exponent = (1.0 - 2.0 / r) * sigma;
  const double omega_exponent = 1.0 / q - 1.0 / r;
  const double m_factor = std::pow(report.m_omega, 1.0 / r - 1.0 / q);

  std::vector<double> target;
  double weighted_power_sum = 0.0;
  std::size_t previous = 0;
  bool first = true;
  for (std::size_t degree : degrees) {
    for (std::size_t n = target.size(); n <= degree; ++n) {
      target.push_back(phi(n));
      const double term = std::pow(static_cast<double>(n + 1), coeff_exponent) *
                          std::pow(w(n), omega_exponent) * std::abs(target.back());
      weighted_power_sum += std::pow(term, rc);
    }
    const Expansion partial(params, target);
    const RealFunction partial_fn = as_function(partial);

    SynthesisStep step;
    step.degree = degree;
    step.norm = lp_norm(partial_fn, q, params, rule);
    if (!first) {
      std::vector<double> tail(degree + 1, 0.0);
      for (std::size_t n = previous + 1; n <= degree; ++n) tail[n] = target[n];
      step.cauchy_difference = lp_norm(as_function(Expansion(params, tail)), q, params, rule);
    }
    const Expansion recovered = analyze(partial_fn, params, degree, rule);
    for (std::size_t n = 0; n <= degree; ++n) {
      step.coefficient_error =
          std::max(step.coefficient_error, std::abs(recovered.coeffs()[n] - target[n]));
    }
    step.weighted_sum = m_factor * std::pow(weighted_power_sum, 1.0 / rc);
    step.ratio = step.weighted_sum > 0.0 ? step.norm / step.weighted_sum : 0.0;
    report.steps.push_back(step);
    previous = degree;
    first = false;
  }
  return report;
}

}  // namespace gegen
