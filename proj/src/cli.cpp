#include "gegen/cli.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "gegen/asymptotics.hpp"
#include "gegen/families.hpp"
#include "gegen/io.hpp"
#include "gegen/parallel.hpp"
#include "gegen/plot.hpp"
#include "gegen/verify.hpp"

namespace gegen::cli {

namespace {

struct Output {
  std::string text;
};

GegenParams validated_params(const RunConfig& config) {
  if (!(config.lambda > -0.5)) throw UsageError("--lambda must be > -1/2");
  if (!(config.mu >= 0.0)) throw UsageError("--mu must be >= 0");
  return GegenParams(config.lambda, config.mu);
}

void require_positive_mu(const RunConfig& config, const char* command) {
  if (!(config.mu > 0.0)) throw UsageError(std::string(command) + " requires --mu > 0");
}

std::size_t rule_points(const RunConfig& config) {
  return config.npoints > 0 ? config.npoints : default_rule_points(config.degree);
}

std::size_t threads(const RunConfig& config) {
  return config.threads > 0 ? config.threads : thread_budget();
}

std::string dump(const nlohmann::json& json) { return json.dump(2) + "\n"; }

Output run_eval(const RunConfig& config) {
  const GegenParams params = validated_params(config);
  std::vector<double> points = config.t_points;
  if (points.empty()) {
    for (int k = 0; k <= 10; ++k) points.push_back(-1.0 + 0.2 * k);
    points.back() = 1.0;
  }
  for (double t : points) {
    if (!(t >= -1.0 && t <= 1.0)) throw UsageError("--t values must lie in [-1, 1]");
  }
  std::ostringstream csv;
  nlohmann::json rows = nlohmann::json::array();
  csv << "n,t,value,orthonormal\n";
  for (std::size_t n = 0; n <= config.degree; ++n) {
    for (double t : points) {
      const double raw = gegen_eval(params, n, t);
      const double ortho = gegen_orthonormal_eval(params, n, t);
      csv << n << ',' << io::format_real(t) << ',' << io::format_real(raw) << ','
          << io::format_real(ortho) << '\n';
      rows.push_back({{"n", n}, {"t", t}, {"value", raw}, {"orthonormal", ortho}});
    }
  }
  return {config.format == Format::csv ? csv.str() : dump(rows)};
}

Output run_quad(const RunConfig& config) {
  const std::size_t npoints = config.npoints > 0 ? config.npoints : config.degree + 32;
  std::vector<double> nodes;
  std::vector<double> weights;
  if (config.rule == "v") {
    const MappedRule rule = v_rule(validated_params(config), npoints);
    nodes = rule.nodes;
    weights = rule.weights;
  } else if (config.rule == "jacobi") {
    if (!(config.alpha > -1.0) || !(config.beta > -1.0)) {
      throw UsageError("--alpha and --beta must be > -1");
    }
    const QuadRule rule = gauss_jacobi(config.alpha, config.beta, npoints);
    nodes = rule.nodes;
    weights = rule.weights;
  } else {
    throw UsageError("--rule must be 'v' or 'jacobi'");
  }
  return {config.format == Format::csv ? io::rule_csv(nodes, weights)
                                       : dump(io::rule_json(nodes, weights))};
}

Output run_transform(const RunConfig& config) {
  const GegenParams params = validated_params(config);
  if (config.functions.size() != 1) throw UsageError("transform needs exactly one --function");
  const LabeledFunction f =
      parse_function_spec(config.functions.front(), params, config.degree, config.seed);
  const Expansion expansion =
      analyze(f.f, params, config.degree, v_rule(params, rule_points(config)));
  return {config.format == Format::csv ? io::expansion_csv(expansion)
                                       : dump(io::expansion_json(expansion))};
}

Output run_sweep(const RunConfig& config) {
  const GegenParams params = validated_params(config);
  SweepRequest request;
  request.functionals = {parse_functional(config.functional)};
  request.p_grid = config.p_grid;
  request.s_grid = config.s_grid;
  request.degree = config.degree;
  request.threads = threads(config);
  if (request.functionals.front() == Functional::hyp && request.s_grid.empty()) {
    throw UsageError("the hyp functional needs --s");
  }
  for (double p : request.p_grid) {
    if (!(p > 1.0 && p <= 2.0)) throw UsageError("--p values must lie in (1, 2]");
  }
  if (config.functions.empty()) {
    request.family = canonical_family(params, config.degree, config.seed);
  } else {
    for (const auto& spec : config.functions) {
      request.family.push_back(parse_function_spec(spec, params, config.degree, config.seed));
    }
  }
  const WeightSeq w = resolve_omega(config.omega_spec, params, config.degree);
  const auto reports =
      inequality_sweep(request, params, w, v_rule(params, rule_points(config)));
  return {config.format == Format::csv ? io::reports_csv(reports)
                                       : dump(io::reports_json(reports))};
}

Output run_supnorm(const RunConfig& config) {
  const GegenParams params = validated_params(config);
  require_positive_mu(config, "supnorm");
  const auto colon = config.nladder.find(':');
  if (colon == std::string::npos) throw UsageError("--nladder expects lo:hi");
  std::size_t lo = 0;
  std::size_t hi = 0;
  try {
    lo = std::stoul(config.nladder.substr(0, colon));
    hi = std::stoul(config.nladder.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("--nladder expects lo:hi with positive integers");
  }
  if (lo == 0 || hi < lo) throw UsageError("--nladder expects 0 < lo <= hi");
  FitModel model = FitModel::parity_intercepts;
  if (config.fit == "pooled") model = FitModel::pooled;
  else if (config.fit != "parity") throw UsageError("--fit must be 'parity' or 'pooled'");

  const SupNormScan scan =
      supnorm_scan(params, geometric_ladder(lo, hi, config.ladder_steps), threads(config));
  const ExponentFit fit = exponent_fit(scan, lo, model);
  return {config.format == Format::csv ? io::scan_csv(scan, fit)
                                       : dump(io::scan_json(scan, fit))};
}

Output run_plot(const RunConfig& config) {
  if (config.plot_input.empty()) throw UsageError("plot needs --input");
  if (config.plot_x.empty() || config.plot_y.empty()) throw UsageError("plot needs --x and --y");
  const io::CsvTable table = io::read_csv(config.plot_input);
  plot::PlotSpec spec{config.plot_x, config.plot_y, config.log_x, config.log_y, config.title};
  try {
    return {plot::render_svg(table, spec)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "eval") return Command::eval;
  if (name == "quad") return Command::quad;
  if (name == "transform") return Command::transform;
  if (name == "verify") return Command::verify;
  if (name == "sweep") return Command::sweep;
  if (name == "supnorm") return Command::supnorm;
  if (name == "plot") return Command::plot;
  throw UsageError("unknown command '" + name + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Output output;
    int status = kSuccess;
    switch (config.command) {
      case Command::eval:
        output = run_eval(config);
        break;
      case Command::quad:
        output = run_quad(config);
        break;
      case Command::transform:
        output = run_transform(config);
        break;
      case Command::sweep:
        output = run_sweep(config);
        break;
      case Command::supnorm:
        output = run_supnorm(config);
        break;
      case Command::plot:
        output = run_plot(config);
        break;
      case Command::verify: {
        validated_params(config);
        const bool all = config.suite == "all";
        if (!all && (config.suite == "connection" || config.suite == "supnorm")) {
          require_positive_mu(config, ("verify --suite " + config.suite).c_str());
        }
        VerifySettings settings{config.lambda, config.mu, config.degree, config.npoints,
                                config.omega_spec, config.seed, threads(config)};
        const auto records = run_verify_suite(config.suite, settings);
        if (config.format == Format::csv) {
          output.text = verify_csv(records);
        } else {
          nlohmann::json rows = nlohmann::json::array();
          for (const auto& r : records) {
            rows.push_back({{"suite", r.suite}, {"check", r.check}, {"value", r.value},
                            {"tolerance", r.tolerance}, {"passed", r.passed}});
          }
          output.text = dump(rows);
        }
        for (const auto& r : records) {
          if (!r.passed) {
            err << "FAIL " << r.suite << '/' << r.check << " value=" << io::format_real(r.value)
                << " tolerance=" << io::format_real(r.tolerance) << '\n';
            status = kVerificationFailure;
          }
        }
        break;
      }
    }
    if (config.output_path.empty()) {
      out << output.text;
    } else {
      io::write_atomic(config.output_path, output.text);
    }
    return status;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {  // UsageError, MismatchError, bad specs
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

}  // namespace gegen::cli
