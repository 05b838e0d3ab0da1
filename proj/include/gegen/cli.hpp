#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace gegen::cli {

enum class Command { eval, quad, transform, verify, sweep, supnorm, plot };
enum class Format { csv, json };

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kRuntimeError = 3,
};

/// Invalid configuration detected before or during dispatch.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  Command command = Command::eval;
  double lambda = 1.0;
  double mu = 0.5;
  std::size_t degree = 16;
  std::size_t npoints = 0;  // 0: degree + 32
  std::vector<double> p_grid = {1.5};
  std::vector<double> s_grid;
  std::string omega_spec = "canonical";  // or power:a=, const:c=, table:<path>
  std::string output_path;               // empty: standard output
  Format format = Format::csv;
  std::uint64_t seed = 0;
  std::size_t threads = 0;  // 0: GEGEN_THREADS or hardware concurrency

  // eval
  std::vector<double> t_points;  // empty: 11 uniform points on [-1, 1]
  // quad
  std::string rule = "v";  // "v" or "jacobi"
  double alpha = 0.0;
  double beta = 0.0;
  // transform / sweep
  std::vector<std::string> functions;  // empty sweep family: canonical family
  std::string functional = "hyp";
  // verify
  std::string suite = "all";
  // supnorm
  std::string nladder = "32:512";
  unsigned ladder_steps = 2;
  std::string fit = "parity";  // "parity" or "pooled"
  // plot
  std::string plot_input;
  std::string plot_x;
  std::vector<std::string> plot_y;
  bool log_x = false;
  bool log_y = false;
  std::string title;
};

Command parse_command(const std::string& name);

/// Validates and executes one command. Reports go to config.output_path
/// (written atomically) or to `out`; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gegen::cli
