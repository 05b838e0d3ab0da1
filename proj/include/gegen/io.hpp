#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "gegen/asymptotics.hpp"
#include "gegen/inequalities.hpp"
#include "gegen/quadrature.hpp"
#include "gegen/transform.hpp"

namespace gegen::io {

/// printf "%.17g": 17 significant digits, enough to round-trip any double.
std::string format_real(double value);

/// Writes `content` to a sibling temporary file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::string rule_csv(const std::vector<double>& nodes, const std::vector<double>& weights);
nlohmann::json rule_json(const std::vector<double>& nodes, const std::vector<double>& weights);

std::string expansion_csv(const Expansion& expansion);
nlohmann::json expansion_json(const Expansion& expansion);
Expansion expansion_from_json(const nlohmann::json& json);

std::string reports_csv(const std::vector<InequalityReport>& reports);
nlohmann::json reports_json(const std::vector<InequalityReport>& reports);

nlohmann::json fit_json(const ExponentFit& fit, double sigma_expected);
/// `n,sup_norm,argmax_t` rows followed by a "# {json}" footer line with the fit.
std::string scan_csv(const SupNormScan& scan, const ExponentFit& fit);
nlohmann::json scan_json(const SupNormScan& scan, const ExponentFit& fit);

/// A parsed CSV table. Lines starting with '#' are skipped.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column; throws std::invalid_argument when absent.
  std::size_t column(const std::string& name) const;
};

CsvTable parse_csv(std::istream& in, bool has_header = true);
CsvTable read_csv(const std::filesystem::path& path, bool has_header = true);

/// Strict full-string parse of a real; throws std::invalid_argument.
double parse_real(const std::string& text);
/// Comma-separated reals, e.g. "1.5,2,3".
std::vector<double> parse_real_list(const std::string& text);

/// omega DSL: "power:a=<real>", "const:c=<real>", "table:<path>".
WeightSeq parse_omega_spec(const std::string& spec, std::size_t truncation);

}  // namespace gegen::io
