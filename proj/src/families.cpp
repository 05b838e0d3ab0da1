#include "gegen/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gegen/io.hpp"

namespace gegen {

namespace {

std::size_t parse_index(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a non-negative integer: '" + text + "'");
  }
  if (used != text.size() || text.front() == '-') {
    throw std::invalid_argument("not a non-negative integer: '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

LabeledFunction basis_member(const GegenParams& params, std::size_t m) {
  return {"basis:m=" + std::to_string(m),
          [params, m](double t) { return gegen_orthonormal_eval(params, m, t); }};
}

LabeledFunction chebyshev_member(std::size_t k) {
  return {"cheb:k=" + std::to_string(k), [k](double t) {
            return std::cos(static_cast<double>(k) * std::acos(std::clamp(t, -1.0, 1.0)));
          }};
}

LabeledFunction random_member(const GegenParams& params, std::size_t degree, double decay,
                              std::uint64_t seed, const std::string& label) {
  SeededUniform rng(seed);
  return {label, as_function(Expansion(params, random_decaying_coeffs(degree, decay, rng)))};
}

}  // namespace

std::vector<double> random_decaying_coeffs(std::size_t degree, double decay,
                                           SeededUniform& rng) {
  std::vector<double> coeffs(degree + 1);
  for (std::size_t n = 0; n <= degree; ++n) {
    coeffs[n] = rng(-1.0, 1.0) * std::pow(static_cast<double>(n + 1), -decay);
  }
  return coeffs;
}

LabeledFunction parse_function_spec(const std::string& spec, const GegenParams& params,
                                    std::size_t degree, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto value_of = [&](const std::string& key) {
    if (rest.rfind(key + "=", 0) != 0) {
      throw std::invalid_argument("function spec '" + spec + "' expects " + key + "=<value>");
    }
    return rest.substr(key.size() + 1);
  };

  if (kind == "basis") return basis_member(params, parse_index(value_of("m")));
  if (kind == "cheb") return chebyshev_member(parse_index(value_of("k")));
  if (kind == "monomial") {
    const auto k = parse_index(value_of("k"));
    return {spec, [k](double t) { return std::pow(t, static_cast<double>(k)); }};
  }
  if (kind == "poly") {
    std::vector<double> coeffs;
    std::stringstream stream(rest);
    std::string item;
    while (std::getline(stream, item, ';')) coeffs.push_back(io::parse_real(item));
    if (coeffs.empty()) throw std::invalid_argument("poly spec needs coefficients");
    return {spec, [coeffs](double t) {
              double sum = 0.0;
              for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) sum = sum * t + *it;
              return sum;
            }};
  }
  if (kind == "random") {
    return random_member(params, degree, io::parse_real(value_of("d")), seed, spec);
  }
  if (kind == "exp") {
    const double a = io::parse_real(value_of("a"));
    return {spec, [a](double t) { return std::exp(a * t); }};
  }
  throw std::invalid_argument("unknown function spec '" + spec + "'");
}

std::vector<LabeledFunction> canonical_family(const GegenParams& params, std::size_t degree,
                                              std::uint64_t seed) {
  std::vector<LabeledFunction> family;
  std::vector<std::size_t> indices = {0, 1, 2, degree / 4, degree / 2, degree};
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (std::size_t m : indices) {
    if (m <= degree) family.push_back(basis_member(params, m));
  }

  const double decays[] = {0.0, 1.0, params.sigma() + 1.0};
  for (std::size_t k = 0; k < 3; ++k) {
    std::ostringstream label;
    label << "random:d=" << io::format_real(decays[k]);
    family.push_back(random_member(params, degree, decays[k], seed + k, label.str()));
  }

  std::vector<std::size_t> orders = {degree / 2, degree};
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  for (std::size_t k : orders) family.push_back(chebyshev_member(k));
  return family;
}

}  // namespace gegen
