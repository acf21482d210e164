#include <cstdlib>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include "armm/version.hpp"
#include "commands.hpp"

namespace {

void configure_logging() {
  auto logger = spdlog::stderr_logger_mt("armm");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  const char* env = std::getenv("SMOOTH_LOG");
  const std::string level = env ? env : "info";
  if (level == "error") {
    spdlog::set_level(spdlog::level::err);
  } else if (level == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else {
    spdlog::set_level(spdlog::level::info);
  }
}

void add_weight_options(CLI::App* cmd, armm::cli::WeightArgs& w) {
  auto* weights = cmd->add_option("--weights", w.weights_path, "Weights JSON: {alpha, beta} or {p, q, A}")
                      ->check(CLI::ExistingFile);
  auto* uniform = cmd->add_option("--uniform", w.uniform, "Tied uniform vertex half-width M");
  weights->excludes(uniform);
  cmd->add_option("--a", w.mass_a, "Data mass A for --uniform (B = 1 - A)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();

  CLI::App app{"Auto-regressive moving-mean smoothing"};
  app.set_version_flag("--version", std::string(armm::version()));
  app.require_subcommand(1);

  armm::cli::SmoothArgs smooth;
  auto* smooth_cmd = app.add_subcommand("smooth", "Smooth a CSV series with the closed-form AR solver");
  smooth_cmd->add_option("--input", smooth.input, "Input CSV")->required();
  smooth_cmd->add_option("--output", smooth.output, "Output CSV ('-' for stdout)")->capture_default_str();
  add_weight_options(smooth_cmd, smooth.weights);
  smooth_cmd->add_flag("--verify", smooth.verify, "Cross-check against the dense oracle (N <= 512)");
  smooth_cmd->add_flag("--emit-plot", smooth.emit_plot, "Write y, y_bar and x as index/value data");

  armm::cli::DesignArgs design;
  auto* design_cmd = app.add_subcommand("design", "Search tapered-window vertices for the best weights");
  design_cmd->add_option("--input", design.input, "Input CSV")->required();
  design_cmd->add_option("--output", design.output, "Report JSON path")->required();
  design_cmd->add_option("--mode", design.mode, "joint, tied or cascade")
      ->check(CLI::IsMember({"joint", "tied", "cascade"}))
      ->capture_default_str();
  design_cmd->add_option("--max-halfwidth", design.max_half_width, "Largest window half-width L (default log2 N)");
  design_cmd->add_option("--a", design.mass_a, "Fixed data mass A")->capture_default_str();
  design_cmd->add_option("--threads", design.threads, "Worker threads (0 = all cores)")->capture_default_str();

  armm::cli::AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Spectrum, effective window and characteristic root");
  add_weight_options(analyze_cmd, analyze.weights);
  analyze_cmd->add_option("--n", analyze.n, "Signal length N")->required();
  analyze_cmd->add_option("--output", analyze.output, "Report JSON ('-' for stdout)")->capture_default_str();

  armm::cli::GenerateArgs generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic noisy test series");
  generate_cmd->add_option("--n", generate.n, "Length")->capture_default_str();
  generate_cmd->add_option("--seed", generate.seed, "RNG seed")->capture_default_str();
  generate_cmd->add_option("--noise", generate.noise, "Gaussian noise sigma")->capture_default_str();
  generate_cmd->add_option("--output", generate.output, "Output CSV ('-' for stdout)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : armm::cli::kValidationError;
  }

  if (*smooth_cmd) return armm::cli::run_smooth(smooth);
  if (*design_cmd) return armm::cli::run_design(design);
  if (*analyze_cmd) return armm::cli::run_analyze(analyze);
  return armm::cli::run_generate(generate);
}
