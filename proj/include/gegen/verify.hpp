#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gegen/inequalities.hpp"

namespace gegen {

/// One checked quantity: passes when value <= tolerance.
struct VerifyRecord {
  std::string suite;
  std::string check;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifySettings {
  double lambda = 1.0;
  double mu = 0.5;
  std::size_t degree = 16;
  std::size_t npoints = 0;  // 0: default_rule_points(degree)
  std::string omega_spec = "canonical";
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

/// Names accepted by run_verify_suite, in the order "all" runs them.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite ("all" runs every suite applicable to the parameters).
std::vector<VerifyRecord> run_verify_suite(const std::string& suite,
                                           const VerifySettings& settings);

/// Resolves "canonical" to power:a=2 sigma + 1, otherwise parses the spec.
WeightSeq resolve_omega(const std::string& spec, const GegenParams& params,
                        std::size_t truncation);

std::string verify_csv(const std::vector<VerifyRecord>& records);

}  // namespace gegen
