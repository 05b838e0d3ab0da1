#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gegen/asymptotics.hpp"
#include "gegen/cli.hpp"
#include "gegen/families.hpp"
#include "gegen/io.hpp"
#include "gegen/plot.hpp"
#include "gegen/verify.hpp"

using namespace gegen;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "gegen_test_io_cli";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Captured {
  int status;
  std::string out;
  std::string err;
};

Captured run_cli(const cli::RunConfig& config) {
  std::ostringstream out, err;
  const int status = cli::run(config, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("format_real round trips through parse_real") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int k = 0; k < 2000; ++k) {
    const double x = std::ldexp(u(rng), static_cast<int>(u(rng)));
    CHECK(io::parse_real(io::format_real(x)) == x);
  }
  for (double x : {0.0, -0.0, 1.0, 0.1, 1e-300, std::numeric_limits<double>::max(),
                   std::numeric_limits<double>::denorm_min()}) {
    CHECK(io::parse_real(io::format_real(x)) == x);
  }
  CHECK(io::format_real(0.5) == "0.5");
}

TEST_CASE("parse_real and parse_real_list") {
  CHECK(io::parse_real(" 2.5 ") == 2.5);
  CHECK(io::parse_real("+1e-3") == 1e-3);
  CHECK_THROWS_AS(io::parse_real(""), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_real("1e999"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_real("abc"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_real("1.5x"), std::invalid_argument);
  CHECK(io::parse_real_list("1.5,2,3") == std::vector<double>{1.5, 2.0, 3.0});
}

TEST_CASE("expansion serialization round trips") {
  const GegenParams params(0.25, 2.0);
  SeededUniform rng(4);
  const Expansion e(params, random_decaying_coeffs(20, 1.0, rng));
  const Expansion back = io::expansion_from_json(nlohmann::json::parse(io::expansion_json(e).dump()));
  CHECK(back.params() == params);
  CHECK(back.coeffs() == e.coeffs());

  std::istringstream csv(io::expansion_csv(e));
  const io::CsvTable table = io::parse_csv(csv);
  CHECK(table.header == std::vector<std::string>{"n", "coeff"});
  REQUIRE(table.rows.size() == 21);
  for (std::size_t n = 0; n <= 20; ++n) {
    CHECK(table.rows[n][0] == std::to_string(n));
    CHECK(io::parse_real(table.rows[n][1]) == e.coeffs()[n]);
  }
}

TEST_CASE("rule csv header and cells") {
  const std::string csv = io::rule_csv({-0.5, 0.5}, {1.0, 1.0});
  CHECK(csv.rfind("node,weight\n", 0) == 0);
  std::istringstream in(csv);
  CHECK(io::parse_csv(in).rows.size() == 2);
}

TEST_CASE("omega specs") {
  const WeightSeq p = io::parse_omega_spec("power:a=3", 10);
  CHECK(p(1) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(p.truncation == 10);
  const WeightSeq c = io::parse_omega_spec("const:c=0.25", 4);
  CHECK(c(4) == 0.25);
  CHECK_THROWS_AS(io::parse_omega_spec("power:b=3", 4), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_omega_spec("nonsense", 4), std::invalid_argument);

  const fs::path table = scratch_dir() / "omega.csv";
  {
    std::ofstream f(table);
    f << "n,omega\n0,1\n1,0.5\n2,0.25\n";
  }
  const WeightSeq t = io::parse_omega_spec("table:" + table.string(), 99);
  CHECK(t.truncation == 2);
  CHECK(t(2) == 0.25);
}

TEST_CASE("canonical omega resolves to the critical power") {
  const GegenParams params(0.5, 1.5);
  const WeightSeq w = resolve_omega("canonical", params, 16);
  CHECK(w(1) == doctest::Approx(std::pow(2.0, -4.0)).epsilon(1e-15));
}

TEST_CASE("scan csv carries a json footer") {
  SupNormScan scan{GegenParams(1.0, 0.5), {}};
  for (std::size_t n : {32, 64, 128, 256, 512}) scan.entries.push_back({n, 2.0 * n, 0.9});
  const ExponentFit fit = exponent_fit(scan, 32);
  std::istringstream in(io::scan_csv(scan, fit));
  std::string line, last;
  std::getline(in, line);
  CHECK(line == "n,sup_norm,argmax_t");
  while (std::getline(in, line)) last = line;
  REQUIRE(last.rfind("# ", 0) == 0);
  const auto footer = nlohmann::json::parse(last.substr(2));
  CHECK(footer.at("slope").get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(footer.at("sigma_expected").get<double>() == 1.0);
  for (const char* key : {"intercept", "residual"}) CHECK(footer.contains(key));
  std::istringstream again(io::scan_csv(scan, fit));
  CHECK(io::parse_csv(again).rows.size() == 5);
}

TEST_CASE("write_atomic replaces the file and leaves no temporaries") {
  const fs::path dir = scratch_dir() / "atomic";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path target = dir / "out.txt";
  io::write_atomic(target, "first");
  io::write_atomic(target, "second");
  CHECK(slurp(target) == "second");
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1);
}

TEST_CASE("function specs") {
  const GegenParams params(1.0, 0.5);
  CHECK(parse_function_spec("monomial:k=3", params, 8, 0).f(0.5) == 0.125);
  CHECK(parse_function_spec("poly:1;2;3", params, 8, 0).f(2.0 / 2) == 6.0);
  CHECK(parse_function_spec("cheb:k=2", params, 8, 0).f(0.5) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(parse_function_spec("exp:a=1", params, 8, 0).f(0.0) == 1.0);
  const auto b = parse_function_spec("basis:m=2", params, 8, 0);
  CHECK(b.f(0.3) == gegen_orthonormal_eval(params, 2, 0.3));
  CHECK(parse_function_spec("random:d=1", params, 8, 7).f(0.2) ==
        parse_function_spec("random:d=1", params, 8, 7).f(0.2));
  CHECK_THROWS_AS(parse_function_spec("bogus", params, 8, 0), std::invalid_argument);
}

TEST_CASE("SeededUniform is deterministic and in range") {
  SeededUniform a(42), b(42), c(43);
  bool differs = false;
  for (int k = 0; k < 1000; ++k) {
    const double x = a(-2.0, 3.0);
    CHECK(x == b(-2.0, 3.0));
    CHECK(x >= -2.0);
    CHECK(x < 3.0);
    differs = differs || x != c(-2.0, 3.0);
  }
  CHECK(differs);
}

TEST_CASE("run: usage and runtime exit codes") {
  cli::RunConfig config;
  config.command = cli::Command::eval;
  config.lambda = -0.6;
  CHECK(run_cli(config).status == cli::kUsageError);
  config.lambda = 1.0;
  config.mu = -1.0;
  CHECK(run_cli(config).status == cli::kUsageError);
  config.mu = 0.0;
  config.command = cli::Command::supnorm;
  CHECK(run_cli(config).status == cli::kUsageError);
  config.command = cli::Command::verify;
  config.suite = "connection";
  CHECK(run_cli(config).status == cli::kUsageError);
  config.suite = "nonexistent";
  CHECK(run_cli(config).status == cli::kUsageError);
  config.mu = 0.5;
  config.command = cli::Command::sweep;
  config.functional = "hyp";
  config.s_grid.clear();
  CHECK(run_cli(config).status == cli::kUsageError);
  config.command = cli::Command::eval;
  config.t_points = {1.5};
  const Captured bad_t = run_cli(config);
  CHECK(bad_t.status == cli::kUsageError);
  CHECK(bad_t.err.find("usage error") != std::string::npos);
  CHECK_THROWS_AS(cli::parse_command("frobnicate"), cli::UsageError);
}

TEST_CASE("run: eval output") {
  cli::RunConfig config;
  config.command = cli::Command::eval;
  config.degree = 2;
  config.t_points = {0.0, 1.0};
  const Captured c = run_cli(config);
  REQUIRE(c.status == 0);
  std::istringstream in(c.out);
  const io::CsvTable table = io::parse_csv(in);
  CHECK(table.header == std::vector<std::string>{"n", "t", "value", "orthonormal"});
  CHECK(table.rows.size() == 6);
}

TEST_CASE("run: verify parseval example") {
  cli::RunConfig config;
  config.command = cli::Command::verify;
  config.suite = "parseval";
  config.degree = 16;
  const Captured c = run_cli(config);
  CHECK(c.status == cli::kSuccess);
  std::istringstream in(c.out);
  const io::CsvTable table = io::parse_csv(in);
  CHECK(table.header == std::vector<std::string>{"suite", "check", "value", "tolerance", "passed"});
  REQUIRE(!table.rows.empty());
  for (const auto& row : table.rows) {
    CHECK(row[0] == "parseval");
    CHECK(io::parse_real(row[2]) <= 1e-10);
  }
}

TEST_CASE("run: verify all suites pass") {
  for (auto [l, m] : {std::pair{1.0, 0.5}, {2.5, 0.0}}) {
    cli::RunConfig config;
    config.command = cli::Command::verify;
    config.lambda = l;
    config.mu = m;
    config.threads = 2;
    const Captured c = run_cli(config);
    CHECK_MESSAGE(c.status == cli::kSuccess, c.err);
  }
}

TEST_CASE("run: verification failure exit code") {
  // Rule far too small for the degree, so Parseval is off by more than the tolerance.
  cli::RunConfig config;
  config.command = cli::Command::verify;
  config.suite = "parseval";
  config.degree = 40;
  config.npoints = 4;
  const Captured c = run_cli(config);
  CHECK(c.status == cli::kVerificationFailure);
  CHECK(c.err.find("FAIL parseval/") != std::string::npos);
}

TEST_CASE("run: sweep endpoint rows are byte identical") {
  cli::RunConfig config;
  config.command = cli::Command::sweep;
  config.functional = "hyp";
  config.p_grid = {1.5};
  config.s_grid = {1.5, 2.0, 3.0};
  config.omega_spec = "power:a=3";
  config.degree = 32;
  config.threads = 2;
  const Captured hyp = run_cli(config);
  REQUIRE(hyp.status == 0);
  config.functional = "paley";
  const Captured paley = run_cli(config);
  REQUIRE(paley.status == 0);
  std::istringstream hin(hyp.out), pin(paley.out);
  const io::CsvTable ht = io::parse_csv(hin), pt = io::parse_csv(pin);
  CHECK(ht.header == std::vector<std::string>{"functional", "label", "p", "s", "N", "lhs", "fnorm",
                                              "m_omega", "ratio"});
  REQUIRE(ht.rows.size() == 3 * pt.rows.size());
  for (std::size_t i = 0; i < pt.rows.size(); ++i) {
    const auto& h = ht.rows[3 * i];
    const auto& p = pt.rows[i];
    CHECK(h[0] == "hyp");
    CHECK(p[0] == "paley");
    CHECK(h[3] == "1.5");
    for (std::size_t col = 1; col < h.size(); ++col) CHECK(h[col] == p[col]);
  }
}

TEST_CASE("run: identical configs give identical files") {
  const fs::path dir = scratch_dir();
  for (cli::Command command : {cli::Command::sweep, cli::Command::transform, cli::Command::supnorm}) {
    cli::RunConfig config;
    config.command = command;
    config.degree = 16;
    config.seed = 1234;
    config.s_grid = {1.5, 2.0};
    config.nladder = "16:64";
    if (command == cli::Command::transform) config.functions = {"random:d=1"};
    std::string files[2];
    for (int k = 0; k < 2; ++k) {
      config.threads = k == 0 ? 1 : 4;
      config.output_path = (dir / ("det" + std::to_string(k))).string();
      REQUIRE(run_cli(config).status == 0);
      files[k] = slurp(config.output_path);
    }
    CHECK(!files[0].empty());
    CHECK(files[0] == files[1]);
  }
}

TEST_CASE("run: seed changes the random family") {
  cli::RunConfig config;
  config.command = cli::Command::transform;
  config.functions = {"random:d=0"};
  config.seed = 1;
  const std::string a = run_cli(config).out;
  config.seed = 2;
  CHECK(run_cli(config).out != a);
}

TEST_CASE("run: json formats parse") {
  for (cli::Command command : {cli::Command::eval, cli::Command::quad, cli::Command::transform,
                               cli::Command::sweep, cli::Command::verify}) {
    cli::RunConfig config;
    config.command = command;
    config.degree = 8;
    config.format = cli::Format::json;
    config.functions = command == cli::Command::transform ? std::vector<std::string>{"exp:a=1"}
                                                          : std::vector<std::string>{};
    config.functional = "paley";
    config.suite = "orthonormality";
    const Captured c = run_cli(config);
    REQUIRE(c.status == 0);
    CHECK(nlohmann::json::accept(c.out));
  }
}

TEST_CASE("run: quad jacobi rule") {
  cli::RunConfig config;
  config.command = cli::Command::quad;
  config.rule = "jacobi";
  config.npoints = 2;
  const Captured c = run_cli(config);
  REQUIRE(c.status == 0);
  std::istringstream in(c.out);
  const io::CsvTable t = io::parse_csv(in);
  REQUIRE(t.rows.size() == 2);
  CHECK(io::parse_real(t.rows[1][0]) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  config.alpha = -1.0;
  CHECK(run_cli(config).status == cli::kUsageError);
  config.rule = "simpson";
  CHECK(run_cli(config).status == cli::kUsageError);
}

TEST_CASE("run: supnorm slope example") {
  cli::RunConfig config;
  config.command = cli::Command::supnorm;
  config.nladder = "32:512";
  config.format = cli::Format::json;
  const Captured c = run_cli(config);
  REQUIRE(c.status == 0);
  const auto json = nlohmann::json::parse(c.out);
  CHECK(std::abs(json.at("fit").at("slope").get<double>() - 1.0) <= 0.1);
}

TEST_CASE("plot renders an svg from csv") {
  const fs::path csv = scratch_dir() / "plot.csv";
  {
    std::ofstream f(csv);
    f << "n,sup_norm,argmax_t\n32,10,1\n64,20,1\n128,40,0.5\n# {}\n";
  }
  cli::RunConfig config;
  config.command = cli::Command::plot;
  config.plot_input = csv.string();
  config.plot_x = "n";
  config.plot_y = {"sup_norm"};
  config.log_x = config.log_y = true;
  const Captured c = run_cli(config);
  REQUIRE(c.status == 0);
  CHECK(c.out.find("<svg") != std::string::npos);
  CHECK(c.out.find("<polyline") != std::string::npos);
  config.plot_y = {"missing"};
  CHECK(run_cli(config).status == cli::kUsageError);
}
