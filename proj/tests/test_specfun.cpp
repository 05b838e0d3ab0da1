#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gegen/specfun.hpp"
#include "oracles.hpp"

using namespace gegen;

TEST_CASE("GegenParams validates its domain and derives sigma") {
  CHECK(GegenParams(1.0, 0.5).sigma() == 1.0);
  CHECK(GegenParams(0.5, 1.5).sigma() == 1.5);
  CHECK(GegenParams(-0.25, 0.0).sigma() == 0.0);
  CHECK_THROWS_AS(GegenParams(-0.5, 1.0), DomainError);
  CHECK_THROWS_AS(GegenParams(1.0, -0.1), DomainError);
  CHECK_THROWS_AS(GegenParams(NAN, 1.0), DomainError);
  CHECK_THROWS_AS(GegenParams(1.0, 0.0).require_positive_mu("x"), DomainError);
  CHECK_NOTHROW(GegenParams(1.0, 1e-3).require_positive_mu("x"));
}

TEST_CASE("log_gamma anchors") {
  CHECK(log_gamma(1.0) == 0.0);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-15));
  double log_fact = 0.0;
  for (int k = 2; k <= 9; ++k) log_fact += std::log(static_cast<double>(k));
  CHECK(oracle::rel_err(log_gamma(10.0), log_fact) < 1e-14);
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-2.5), DomainError);
}

TEST_CASE("log_gamma matches the Stirling oracle over (0, 1e4)") {
  double worst = 0.0;
  for (double x = 1e-6; x < 1e4; x *= 1.07) {
    const double want = static_cast<double>(oracle::log_gamma(x));
    // Relative error is meaningless at the zeros x = 1, 2.
    worst = std::max(worst, std::abs(log_gamma(x) - want) / std::max(1.0, std::abs(want)));
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("log_gamma recurrence Gamma(x+1) = x Gamma(x)") {
  for (double x = 0.5; x <= 50.0; x += 0.37) {
    CHECK(oracle::rel_err(std::exp(log_gamma(x + 1.0)), x * std::exp(log_gamma(x))) < 1e-12);
  }
}

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(3.5, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(2.5, 3) == 2.5 * 3.5 * 4.5);
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK(pochhammer(-0.5, 2) == doctest::Approx(-0.25));
}

TEST_CASE("pochhammer step identity") {
  for (double x : {-3.25, -0.5, 0.1, 1.0, 2.75, 17.0}) {
    for (std::size_t n = 0; n < 80; ++n) {
      const double lhs = pochhammer(x, n + 1);
      const double rhs = pochhammer(x, n) * (x + static_cast<double>(n));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    }
  }
}

TEST_CASE("pochhammer large n uses log form without overflow") {
  const double value = pochhammer(0.5, 150);
  const double want = std::exp(static_cast<double>(oracle::log_gamma(150.5L) - oracle::log_gamma(0.5L)));
  CHECK(std::isfinite(value));
  CHECK(oracle::rel_err(value, want) < 1e-12);
  CHECK(oracle::rel_err(pochhammer_ratio(1.5, 0.75, 300),
                        static_cast<double>(std::exp(oracle::log_gamma(301.5L) - oracle::log_gamma(1.5L) -
                                                     oracle::log_gamma(300.75L) + oracle::log_gamma(0.75L)))) < 1e-12);
}

TEST_CASE("jacobi_eval examples") {
  CHECK(jacobi_eval(0.3, -0.7, 0, 0.42) == 1.0);
  CHECK(jacobi_eval(0, 0, 1, 0.5) == 0.5);
  CHECK(jacobi_eval(0, 0, 2, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  // Legendre P_3(t) = (5t^3 - 3t) / 2
  CHECK(jacobi_eval(0, 0, 3, 0.3) == doctest::Approx((5 * 0.027 - 0.9) / 2).epsilon(1e-14));
  CHECK_THROWS_AS(jacobi_eval(0, 0, 2, 1.0000001), DomainError);
  CHECK_THROWS_AS(jacobi_eval(-1.0, 0, 2, 0.0), DomainError);
}

TEST_CASE("jacobi_eval agrees with the explicit sum") {
  for (auto [a, b] : {std::pair{0.5, -0.5}, {-0.25, 1.5}, {2.0, 0.0}, {-0.9, -0.8}}) {
    for (std::size_t n = 0; n <= 12; ++n) {
      for (double t = -1.0; t <= 1.0; t += 0.125) {
        const double want = static_cast<double>(oracle::jacobi_sum(a, b, n, t));
        CHECK(std::abs(jacobi_eval(a, b, n, t) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

TEST_CASE("jacobi_eval endpoint value (alpha+1)_n / n!") {
  for (double a : {-0.5, 0.0, 0.5, 2.5}) {
    for (std::size_t n : {1, 10, 64, 256}) {
      const double want = std::exp(static_cast<double>(oracle::log_gamma(n + a + 1.0L) -
                                                       oracle::log_gamma(a + 1.0L) -
                                                       oracle::log_gamma(n + 1.0L)));
      const double tol = n <= 64 ? 1e-10 : 1e-8;
      CHECK(oracle::rel_err(jacobi_eval(a, 0.3, n, 1.0), want) < tol);
    }
  }
}

TEST_CASE("jacobi_eval_all matches single evaluations") {
  std::vector<double> all(40);
  jacobi_eval_all(0.75, -0.4, 0.31, all);
  for (std::size_t n = 0; n < all.size(); ++n) CHECK(all[n] == jacobi_eval(0.75, -0.4, n, 0.31));
}

TEST_CASE("jacobi_norm_sq examples and quadrature oracle") {
  CHECK(jacobi_norm_sq(0, 0, 0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(jacobi_norm_sq(0, 0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  const double quad = static_cast<double>(
      oracle::jacobi_integral([](long double) { return 1.0L; }, 0.5L, -0.25L));
  CHECK(oracle::rel_err(jacobi_norm_sq(0.5, -0.25, 0), quad) < 1e-14);
  // alpha + beta = -1 takes the n = 0 special case.
  const double quad2 = static_cast<double>(
      oracle::jacobi_integral([](long double) { return 1.0L; }, -0.25L, -0.75L));
  CHECK(oracle::rel_err(jacobi_norm_sq(-0.25, -0.75, 0), quad2) < 1e-14);
  for (std::size_t n : {1, 2, 5}) {
    const double want = static_cast<double>(oracle::jacobi_integral(
        [n](long double t) {
          const long double p = oracle::jacobi_sum(0.5L, -0.25L, n, t);
          return p * p;
        },
        0.5L, -0.25L));
    CHECK(oracle::rel_err(jacobi_norm_sq(0.5, -0.25, n), want) < 1e-12);
  }
}

TEST_CASE("gegen_eval low degrees") {
  const GegenParams params(1.3, 0.7);
  for (double t : {-1.0, -0.4, 0.0, 0.55, 1.0}) {
    CHECK(gegen_eval(params, 0, t) == 1.0);
    CHECK(gegen_eval(params, 1, t) == doctest::Approx((1.3 + 0.7) / (0.7 + 0.5) * t).epsilon(1e-14));
  }
  CHECK_THROWS_AS(gegen_eval(params, 3, -1.5), DomainError);
}

TEST_CASE("gegen_eval reduces to Gegenbauer at mu = 0") {
  for (double lambda : {0.25, 1.0, 2.5}) {
    const GegenParams params(lambda, 0.0);
    for (std::size_t n = 0; n <= 32; ++n) {
      const double scale = pochhammer(2 * lambda, n) / pochhammer(lambda + 0.5, n);
      for (int k = 0; k <= 100; ++k) {
        const double t = -1.0 + 2.0 * k / 100.0;
        const double want = scale * jacobi_eval(lambda - 0.5, lambda - 0.5, n, t);
        CHECK(std::abs(gegen_eval(params, n, t) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

TEST_CASE("gegen_eval parity") {
  for (auto [l, m] : {std::pair{1.0, 0.5}, {0.25, 2.0}, {-0.3, 0.0}}) {
    const GegenParams params(l, m);
    for (std::size_t n = 0; n <= 30; ++n) {
      for (double t : {0.1, 0.37, 0.8, 1.0}) {
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        CHECK(gegen_eval(params, n, -t) == sign * gegen_eval(params, n, t));
        CHECK(gegen_orthonormal_eval(params, n, -t) == sign * gegen_orthonormal_eval(params, n, t));
      }
    }
  }
}

TEST_CASE("orthonormal constant at n = 0 is the inverse root of the Beta mass") {
  for (auto [l, m] : {std::pair{1.0, 0.5}, {0.25, 2.0}, {-0.4, 0.0}, {0.0, 0.0}}) {
    const GegenParams params(l, m);
    const double mass = static_cast<double>(oracle::beta(l + 0.5L, m + 0.5L));
    CHECK(oracle::rel_err(gegen_orthonormal_eval(params, 0, 0.3), 1.0 / std::sqrt(mass)) < 1e-14);
  }
}

TEST_CASE("orthonormality against the tanh-sinh oracle") {
  for (auto [l, m] : {std::pair{1.0, 0.5}, {0.25, 2.0}, {2.5, 1.0}, {-0.4, 0.3}, {0.5, 0.0}}) {
    const GegenParams params(l, m);
    for (std::size_t i = 0; i <= 6; ++i) {
      for (std::size_t j = i; j <= 6; ++j) {
        const double got = static_cast<double>(oracle::v_integral(
            [&](long double t) {
              const double td = static_cast<double>(t);
              return static_cast<long double>(gegen_orthonormal_eval(params, i, td)) *
                     gegen_orthonormal_eval(params, j, td);
            },
            l, m));
        CHECK(std::abs(got - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("gegen_orthonormal_eval_all matches single evaluations") {
  const GegenParams params(0.8, 1.7);
  std::vector<double> all(33);
  gegen_orthonormal_eval_all(params, -0.62, all);
  for (std::size_t n = 0; n < all.size(); ++n) {
    CHECK(all[n] == doctest::Approx(gegen_orthonormal_eval(params, n, -0.62)).epsilon(1e-14));
  }
  const OrthonormalBasis basis(params, 4);
  std::vector<double> too_many(6);
  CHECK_THROWS_AS(basis.eval_all(0.1, too_many), std::out_of_range);
}

TEST_CASE("connection integral residual") {
  const GegenParams params(1.0, 0.5);
  for (double t : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
    CHECK(gegen_connection_residual(params, 0, t, 1) < 1e-14);
    CHECK(gegen_connection_residual(params, 1, t, 2) < 1e-10);
  }
  double worst = 0.0;
  for (std::size_t n = 0; n <= 10; ++n) {
    for (int k = 0; k <= 40; ++k) {
      worst = std::max(worst, gegen_connection_residual(params, n, -1.0 + k / 20.0, 64));
    }
  }
  CHECK(worst <= 1e-8);
  CHECK_THROWS_AS(gegen_connection_residual(GegenParams(1.0, 0.0), 2, 0.5, 16), DomainError);
}

TEST_CASE("connection n = 1 against the Beta-moment oracle") {
  // c_mu * 2 nu t * B(3/2, mu) / B(1/2, mu) with nu = lambda + mu.
  for (double mu : {0.3, 1.0, 2.2}) {
    const double lambda = 0.6;
    const double nu = lambda + mu;
    const double t = 0.45;
    const double rhs = static_cast<double>(2.0L * nu * t * oracle::beta(1.5L, mu) / oracle::beta(0.5L, mu));
    CHECK(oracle::rel_err(gegen_eval(GegenParams(lambda, mu), 1, t), rhs) < 1e-13);
  }
}
