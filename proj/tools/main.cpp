// Command-line front end for the generalized Gegenbauer toolkit.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gegen/cli.hpp"

namespace {

using gegen::cli::Command;
using gegen::cli::RunConfig;

void add_params(CLI::App* app, RunConfig& config) {
  app->add_option("--lambda", config.lambda, "lambda > -1/2")->capture_default_str();
  app->add_option("--mu", config.mu, "mu >= 0")->capture_default_str();
}

void add_output(CLI::App* app, RunConfig& config, std::string& format) {
  app->add_option("-o,--output", config.output_path, "Output file (default: stdout)");
  app->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void add_degree(CLI::App* app, RunConfig& config) {
  app->add_option("--degree", config.degree, "Maximum polynomial degree N")->capture_default_str();
  app->add_option("--npoints", config.npoints,
                  "Quadrature half-points (default: degree + 32)");
}

void add_common(CLI::App* app, RunConfig& config) {
  app->add_option("--seed", config.seed, "Seed for randomized family members")
      ->capture_default_str();
  app->add_option("--threads", config.threads,
                  "Worker threads (default: GEGEN_THREADS or all cores)");
  app->add_option("--omega", config.omega_spec,
                  "Weight: canonical (power with a = 2 sigma + 1), power:a=<r>, const:c=<r>, "
                  "table:<csv>")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Gegenbauer polynomials, expansions and inequality harness"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "csv";

  auto* eval = app.add_subcommand("eval", "Evaluate C_n and orthonormal C̃_n for n <= degree");
  add_params(eval, config);
  add_degree(eval, config);
  add_output(eval, config, format);
  eval->add_option("--t", config.t_points, "Evaluation points (default: 11 uniform)")
      ->delimiter(',');

  auto* quad = app.add_subcommand("quad", "Dump a quadrature rule as node,weight");
  add_params(quad, config);
  add_degree(quad, config);
  add_output(quad, config, format);
  quad->add_option("--rule", config.rule, "v (weight v_{lambda,mu}) or jacobi")
      ->capture_default_str();
  quad->add_option("--alpha", config.alpha, "Jacobi alpha")->capture_default_str();
  quad->add_option("--beta", config.beta, "Jacobi beta")->capture_default_str();

  auto* transform = app.add_subcommand("transform", "Expansion coefficients of a function");
  add_params(transform, config);
  add_degree(transform, config);
  add_output(transform, config, format);
  transform->add_option("--seed", config.seed, "Seed for random:d= functions")
      ->capture_default_str();
  transform
      ->add_option("--function", config.functions,
                   "basis:m=<k>, monomial:k=<k>, poly:<c0>;<c1>;.., cheb:k=<k>, "
                   "random:d=<r>, exp:a=<r>")
      ->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_params(verify, config);
  add_degree(verify, config);
  add_output(verify, config, format);
  add_common(verify, config);
  verify->add_option("--suite", config.suite, "Suite name or 'all'")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Evaluate inequality functionals over a family");
  add_params(sweep, config);
  add_degree(sweep, config);
  add_output(sweep, config, format);
  add_common(sweep, config);
  sweep->add_option("--functional", config.functional, "paley, hy or hyp")
      ->capture_default_str();
  sweep->add_option("--p", config.p_grid, "Comma-separated p in (1, 2]")->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--s", config.s_grid, "Comma-separated s in [p, p'] (hyp)")
      ->delimiter(',');
  sweep->add_option("--function", config.functions,
                    "Family member spec, repeatable (default: canonical family)");

  auto* supnorm = app.add_subcommand("supnorm", "Sup-norm scan and growth exponent fit");
  add_params(supnorm, config);
  add_output(supnorm, config, format);
  supnorm->add_option("--threads", config.threads, "Worker threads");
  supnorm->add_option("--nladder", config.nladder, "Degree range lo:hi")->capture_default_str();
  supnorm->add_option("--steps", config.ladder_steps, "Ladder points per octave")
      ->capture_default_str();
  supnorm->add_option("--fit", config.fit, "parity (even/odd intercepts) or pooled")
      ->capture_default_str();

  auto* plot = app.add_subcommand("plot", "Render CSV columns to a static SVG");
  plot->add_option("--input", config.plot_input, "Input CSV")->required();
  plot->add_option("--x", config.plot_x, "x column")->required();
  plot->add_option("--y", config.plot_y, "y column(s)")->delimiter(',')->required();
  plot->add_flag("--logx", config.log_x, "Logarithmic x axis");
  plot->add_flag("--logy", config.log_y, "Logarithmic y axis");
  plot->add_option("--title", config.title, "Chart title");
  plot->add_option("-o,--output", config.output_path, "Output SVG (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gegen::cli::kUsageError;
  }

  config.format = format == "json" ? gegen::cli::Format::json : gegen::cli::Format::csv;
  config.command = gegen::cli::parse_command(app.get_subcommands().front()->get_name());
  return gegen::cli::run(config, std::cout, std::cerr);
}
