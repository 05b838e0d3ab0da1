#include "gegen/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gegen/parallel.hpp"

namespace gegen {

namespace {

constexpr double kRefineTolerance = 1e-10;

// Golden-section maximization of g on [lo, hi].
template <class G>
std::pair<double, double> golden_max(G&& g, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c);
  double gd = g(d);
  while (b - a > kRefineTolerance) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
  }
  const double t = 0.5 * (a + b);
  return {t, g(t)};
}

}  // namespace

SupNormResult supnorm(const GegenParams& params, std::size_t n, std::size_t grid_size) {
  params.require_positive_mu("sup-norm growth");
  if (grid_size < 8 * (n + 1)) {
    throw DomainError("supnorm grid_size must be at least 8 (n + 1)");
  }
  const double constant = gegen_orthonormal_constant(params, n);
  const double alpha = params.lambda() - 0.5;
  const double beta = params.mu() + (n % 2 == 0 ? -0.5 : 0.5);
  const std::size_t m = n / 2;
  auto value = [&](double t) {
    const double jac = jacobi_eval(alpha, beta, m, 2.0 * t * t - 1.0);
    return std::abs(constant * (n % 2 == 0 ? jac : t * jac));
  };

  // |C̃_n| is even in t, so sampling [0, 1] suffices.
  const double g = static_cast<double>(grid_size);
  std::vector<double> samples;
  samples.reserve(grid_size + 2);
  for (std::size_t k = 0; k <= grid_size / 2; ++k) {
    samples.push_back(2.0 * static_cast<double>(k) / g);
    samples.push_back(std::cos(static_cast<double>(k) * std::numbers::pi / g));
  }
  samples.push_back(0.0);
  samples.push_back(1.0);
  for (double& t : samples) t = std::clamp(t, 0.0, 1.0);
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double v = value(samples[k]);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  SupNormResult result{best_value, samples[best]};
  const double lo = samples[best > 0 ? best - 1 : 0];
  const double hi = samples[std::min(best + 1, samples.size() - 1)];
  if (hi > lo) {
    const auto [t, v] = golden_max(value, lo, hi);
    if (v > result.sup_norm) result = {v, t};
  }
  return result;
}

SupNormScan supnorm_scan(const GegenParams& params, std::vector<std::size_t> degrees,
                         std::size_t threads) {
  params.require_positive_mu("sup-norm growth");
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  SupNormScan scan{params, std::vector<SupNormEntry>(degrees.size())};
  parallel_for(degrees.size(), threads, [&](std::size_t i) {
    const std::size_t n = degrees[i];
    const SupNormResult r = supnorm(params, n, default_supnorm_grid(n));
    scan.entries[i] = {n, r.sup_norm, r.argmax_t};
  });
  return scan;
}

std::vector<std::size_t> geometric_ladder(std::size_t lo, std::size_t hi,
                                          unsigned steps_per_octave) {
  if (lo == 0 || hi < lo || steps_per_octave == 0) {
    throw DomainError("geometric_ladder requires 0 < lo <= hi and steps_per_octave > 0");
  }
  std::vector<std::size_t> ladder;
  for (unsigned k = 0;; ++k) {
    const double value =
        std::round(static_cast<double>(lo) * std::exp2(static_cast<double>(k) / steps_per_octave));
    if (value > static_cast<double>(hi)) break;
    const auto n = static_cast<std::size_t>(value);
    if (ladder.empty() || ladder.back() != n) ladder.push_back(n);
  }
  return ladder;
}

ExponentFit exponent_fit(const SupNormScan& scan, std::size_t n_min, FitModel model) {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<bool> odd;
  for (const auto& e : scan.entries) {
    if (e.n >= n_min && e.n > 0 && e.sup_norm > 0.0) {
      x.push_back(std::log(static_cast<double>(e.n)));
      y.push_back(std::log(e.sup_norm));
      odd.push_back(e.n % 2 == 1);
    }
  }
  if (x.size() < 5) {
    throw InsufficientDataError("exponent_fit needs at least 5 entries with n >= n_min");
  }
  const bool split = model == FitModel::parity_intercepts &&
                     std::find(odd.begin(), odd.end(), true) != odd.end() &&
                     std::find(odd.begin(), odd.end(), false) != odd.end();

  // Centre each group on its own means; the shared slope comes from the
  // pooled within-group sums.
  double mean_x[2] = {0.0, 0.0};
  double mean_y[2] = {0.0, 0.0};
  double count[2] = {0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int g = split && odd[i] ? 1 : 0;
    mean_x[g] += x[i];
    mean_y[g] += y[i];
    count[g] += 1.0;
  }
  for (int g = 0; g < 2; ++g) {
    if (count[g] > 0.0) {
      mean_x[g] /= count[g];
      mean_y[g] /= count[g];
    }
  }
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int g = split && odd[i] ? 1 : 0;
    sxx += (x[i] - mean_x[g]) * (x[i] - mean_x[g]);
    sxy += (x[i] - mean_x[g]) * (y[i] - mean_y[g]);
  }
  if (!(sxx > 0.0)) throw InsufficientDataError("exponent_fit needs distinct degrees");

  ExponentFit fit;
  fit.slope = sxy / sxx;
  if (split) {
    fit.intercept = mean_y[0] - fit.slope * mean_x[0];
    fit.odd_intercept = mean_y[1] - fit.slope * mean_x[1];
  } else {
    fit.intercept = mean_y[0] - fit.slope * mean_x[0];
    fit.odd_intercept = fit.intercept;
  }
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double c = split && odd[i] ? fit.odd_intercept : fit.intercept;
    const double r = y[i] - (c + fit.slope * x[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(x.size()));
  fit.used = x.size();
  return fit;
}

}  // namespace gegen
