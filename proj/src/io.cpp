#include "gegen/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace gegen::io {

namespace {

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) return {};
  const auto end = text.find_last_not_of(" \t");
  return text.substr(begin, end - begin + 1);
}

}  // namespace

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path temp = path;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + temp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string rule_csv(const std::vector<double>& nodes, const std::vector<double>& weights) {
  std::ostringstream out;
  out << "node,weight\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << format_real(nodes[i]) << ',' << format_real(weights[i]) << '\n';
  }
  return out.str();
}

nlohmann::json rule_json(const std::vector<double>& nodes, const std::vector<double>& weights) {
  return {{"nodes", nodes}, {"weights", weights}};
}

std::string expansion_csv(const Expansion& expansion) {
  std::ostringstream out;
  out << "n,coeff\n";
  const auto& coeffs = expansion.coeffs();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    out << n << ',' << format_real(coeffs[n]) << '\n';
  }
  return out.str();
}

nlohmann::json expansion_json(const Expansion& expansion) {
  return {{"lambda", expansion.params().lambda()},
          {"mu", expansion.params().mu()},
          {"degree", expansion.degree()},
          {"coeffs", expansion.coeffs()}};
}

Expansion expansion_from_json(const nlohmann::json& json) {
  const GegenParams params(json.at("lambda").get<double>(), json.at("mu").get<double>());
  auto coeffs = json.at("coeffs").get<std::vector<double>>();
  if (json.contains("degree") && json.at("degree").get<std::size_t>() + 1 != coeffs.size()) {
    throw std::invalid_argument("expansion JSON: degree does not match coefficient count");
  }
  return Expansion(params, std::move(coeffs));
}

std::string reports_csv(const std::vector<InequalityReport>& reports) {
  std::ostringstream out;
  out << "functional,label,p,s,N,lhs,fnorm,m_omega,ratio\n";
  for (const auto& r : reports) {
    out << functional_name(r.functional) << ',' << csv_cell(r.label) << ','
        << format_real(r.p) << ',' << format_real(r.s) << ',' << r.degree << ','
        << format_real(r.lhs) << ',' << format_real(r.f_norm) << ','
        << format_real(r.m_omega) << ',' << format_real(r.ratio) << '\n';
  }
  return out.str();
}

nlohmann::json reports_json(const std::vector<InequalityReport>& reports) {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& r : reports) {
    array.push_back({{"functional", functional_name(r.functional)},
                     {"label", r.label},
                     {"p", r.p},
                     {"s", r.s},
                     {"N", r.degree},
                     {"lhs", r.lhs},
                     {"fnorm", r.f_norm},
                     {"m_omega", r.m_omega},
                     {"ratio", r.ratio}});
  }
  return array;
}

nlohmann::json fit_json(const ExponentFit& fit, double sigma_expected) {
  return {{"slope", fit.slope},
          {"intercept", fit.intercept},
          {"odd_intercept", fit.odd_intercept},
          {"residual", fit.residual},
          {"sigma_expected", sigma_expected}};
}

std::string scan_csv(const SupNormScan& scan, const ExponentFit& fit) {
  std::ostringstream out;
  out << "n,sup_norm,argmax_t\n";
  for (const auto& e : scan.entries) {
    out << e.n << ',' << format_real(e.sup_norm) << ',' << format_real(e.argmax_t) << '\n';
  }
  out << "# " << fit_json(fit, scan.params.sigma()).dump() << '\n';
  return out.str();
}

nlohmann::json scan_json(const SupNormScan& scan, const ExponentFit& fit) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : scan.entries) {
    entries.push_back({{"n", e.n}, {"sup_norm", e.sup_norm}, {"argmax_t", e.argmax_t}});
  }
  return {{"lambda", scan.params.lambda()},
          {"mu", scan.params.mu()},
          {"entries", entries},
          {"fit", fit_json(fit, scan.params.sigma())}};
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::invalid_argument("CSV has no column '" + name + "'");
}

CsvTable parse_csv(std::istream& in, bool has_header) {
  CsvTable table;
  std::string line;
  bool header_pending = has_header;
  while (std::getline(in, line)) {
    if (trim(line).empty() || line.front() == '#') continue;
    auto cells = split_csv_line(line);
    if (header_pending) {
      table.header = std::move(cells);
      header_pending = false;
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path, bool has_header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_csv(in, has_header);
}

double parse_real(const std::string& text) {
  std::string value = trim(text);
  if (!value.empty() && value.front() == '+') value.erase(0, 1);
  double result = 0.0;
  const char* end = value.data() + value.size();
  // from_chars keeps subnormals that stod rejects as out of range.
  const auto [ptr, ec] = std::from_chars(value.data(), end, result);
  if (ec != std::errc() || ptr != end || value.empty()) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return result;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(parse_real(item));
  if (values.empty()) throw std::invalid_argument("empty list of reals");
  return values;
}

WeightSeq parse_omega_spec(const std::string& spec, std::size_t truncation) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto named_value = [&](const std::string& key) {
    if (rest.rfind(key + "=", 0) != 0) {
      throw std::invalid_argument("omega spec '" + spec + "' expects " + key + "=<real>");
    }
    return parse_real(rest.substr(key.size() + 1));
  };
  if (kind == "power") {
    WeightSeq w = WeightSeq::power(named_value("a"), truncation);
    w.label = spec;
    return w;
  }
  if (kind == "const") {
    const double c = named_value("c");
    if (!(c > 0.0)) throw DomainError("omega const:c must be positive");
    WeightSeq w = WeightSeq::constant(c, truncation);
    w.label = spec;
    return w;
  }
  if (kind == "table") {
    const CsvTable table = read_csv(rest, false);
    std::vector<double> values;
    for (const auto& row : table.rows) {
      try {
        values.push_back(parse_real(row.back()));
      } catch (const std::invalid_argument&) {
        if (!values.empty()) throw;  // only a leading header row may be non-numeric
      }
    }
    for (double v : values) {
      if (!(v > 0.0)) throw DomainError("omega table entries must be positive");
    }
    return WeightSeq::table(std::move(values), spec);
  }
  throw std::invalid_argument("unknown omega spec '" + spec + "'");
}

}  // namespace gegen::io
