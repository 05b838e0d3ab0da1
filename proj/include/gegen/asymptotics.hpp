#pragma once

#include <cstddef>
#include <vector>

#include "gegen/specfun.hpp"

namespace gegen {

struct SupNormResult {
  double sup_norm = 0.0;
  double argmax_t = 0.0;  // non-negative representative of the +/- pair
};

/// max |C̃_n(t)| on [-1, 1]. Samples a uniform grid, Chebyshev points
/// cos(k pi / grid_size) and the endpoints, then refines the best sample by
/// golden-section search between its neighbouring samples.
///
/// Requires mu > 0 and grid_size >= 8 (n + 1).
SupNormResult supnorm(const GegenParams& params, std::size_t n, std::size_t grid_size);

/// Grid size used by supnorm_scan for degree n.
inline std::size_t default_supnorm_grid(std::size_t n) { return 16 * (n + 1); }

struct SupNormEntry {
  std::size_t n = 0;
  double sup_norm = 0.0;
  double argmax_t = 0.0;
};

struct SupNormScan {
  GegenParams params;
  std::vector<SupNormEntry> entries;  // ascending n
};

/// Sup norms for every degree in `degrees` (sorted on output).
SupNormScan supnorm_scan(const GegenParams& params, std::vector<std::size_t> degrees,
                         std::size_t threads = 1);

/// round(lo * 2^{k/steps_per_octave}) for k = 0, 1, ... while <= hi.
std::vector<std::size_t> geometric_ladder(std::size_t lo, std::size_t hi,
                                          unsigned steps_per_octave = 2);

/// How the constant term of the log-log model is treated.
enum class FitModel {
  /// One intercept for all degrees.
  pooled,
  /// Separate intercepts for even and odd n, one shared slope. Even and odd
  /// C̃_n come from different Jacobi families and carry different constants,
  /// which biases a pooled fit on a ladder with unbalanced parities.
  parity_intercepts,
};

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;       // even-n intercept (the only one when pooled)
  double odd_intercept = 0.0;   // equals intercept when pooled or single parity
  double residual = 0.0;        // RMS of log-space residuals
  std::size_t used = 0;
};

/// Least squares of log(sup_norm) on log(n) over entries with n >= n_min
/// (at least 5). With parity_intercepts and only one parity present the fit
/// is identical to the pooled one.
ExponentFit exponent_fit(const SupNormScan& scan, std::size_t n_min,
                         FitModel model = FitModel::parity_intercepts);

}  // namespace gegen
