#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gegen/inequalities.hpp"

namespace gegen {

/// Deterministic uniform reals from a 64-bit Mersenne Twister. Uses the top
/// 53 bits directly so the stream does not depend on the standard library's
/// distribution implementation.
class SeededUniform {
 public:
  explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi).
  double operator()(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }

  /// Uniform integer in [lo, hi].
  std::size_t integer(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Coefficients c_n (n+1)^{-decay} with c_n uniform in [-1, 1].
std::vector<double> random_decaying_coeffs(std::size_t degree, double decay,
                                           SeededUniform& rng);

/// Builds a test function from a textual spec:
///   basis:m=<int>      C̃_m
///   monomial:k=<int>   t^k
///   poly:<c0>;<c1>;..  sum c_k t^k
///   cheb:k=<int>       Chebyshev T_k(t) = cos(k arccos t)
///   random:d=<real>    random expansion of the given degree, decay (n+1)^{-d}
///   exp:a=<real>       exp(a t)
LabeledFunction parse_function_spec(const std::string& spec, const GegenParams& params,
                                    std::size_t degree, std::uint64_t seed);

/// Sweep family for degree N: basis elements 0, 1, 2, N/4, N/2, N; random
/// expansions with decay 0, 1 and sigma + 1; Chebyshev T_{N/2} and T_N.
std::vector<LabeledFunction> canonical_family(const GegenParams& params, std::size_t degree,
                                              std::uint64_t seed);

}  // namespace gegen
