#include <iostream>

#include <CLI11.hpp>

#include "renyi/cli.hpp"

namespace {

using renyi::cli::Command;
using renyi::cli::OutputFormat;
using renyi::cli::RunConfig;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renyi entropies, entropy powers and entropy power inequality checks"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json";
  std::string output;
  std::size_t grid_n = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output,-o", output, "Write the result to this file instead of stdout");
  app.add_option("--grid-n", grid_n, "Quadrature intervals per window (power of two >= 1024)");

  auto* constants = app.add_subcommand("constants", "Table of EPI constants over an (r, m) grid");
  constants->add_option("--r", cfg.r_values, "Orders r")->delimiter(',');
  constants->add_option("--m", cfg.m_values, "Numbers of variables")->delimiter(',');
  constants->add_option("--alpha", cfg.alpha, "Exponent for the general constants (default 0.5)");

  auto* entropy = app.add_subcommand("entropy", "Renyi entropies and entropy powers");
  entropy->add_option("--density", cfg.density_specs, "JSON density spec (repeatable)")->required();
  entropy->add_option("--p", cfg.orders, "Orders p")->delimiter(',')->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", cfg.suite, "Suite name (default, smoke)");
  verify->add_option("--entropy-tol", cfg.entropy_tol, "Tolerance in nats for entropy-difference forms");
  verify->add_option("--power-tol", cfg.power_rel_tol, "Relative tolerance for entropy-power forms");
  verify->add_option("--info-tol", cfg.info_tol, "Tolerance in nats for the information inequality");

  auto* optimize = app.add_subcommand("optimize", "Simplex minimisations against the closed forms");
  optimize->add_option("--r", cfg.r_values, "Orders r")->delimiter(',');
  optimize->add_option("--m", cfg.m_values, "Numbers of variables (2 to 4)")->delimiter(',');
  optimize->add_option("--alpha", cfg.alpha, "Exponent of the mixed objective (default 0.5)");

  auto* report = app.add_subcommand("report", "Aggregate JSON verification outputs into CSV");
  report->add_option("inputs", cfg.inputs, "JSON files written by verify")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*constants) cfg.command = Command::Constants;
  if (*entropy) cfg.command = Command::Entropy;
  if (*verify) cfg.command = Command::Verify;
  if (*optimize) cfg.command = Command::Optimize;
  if (*report) cfg.command = Command::Report;
  cfg.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  if (!output.empty()) cfg.output_path = output;

  try {
    cfg.grid_n = grid_n != 0 ? grid_n : renyi::cli::grid_n_from_env();
  } catch (const renyi::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }
  return renyi::cli::run(cfg, std::cout, std::cerr);
}
