#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "armm/design.hpp"
#include "armm/error.hpp"
#include "armm/io.hpp"
#include "armm/smoother.hpp"
#include "armm/spectral.hpp"
#include "armm/verify.hpp"
#include "armm/version.hpp"

namespace armm::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr double kVerifyTol = 1e-10;

bool is_stdout(const std::string& path) { return path.empty() || path == "-"; }

// "out/x.csv" + ".plot.dat" -> "out/x.plot.dat"
fs::path sibling(const fs::path& output, std::string_view suffix) {
  fs::path p = output;
  p.replace_extension();
  p += suffix;
  return p;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

void emit_signal(const std::string& output, std::span<const double> values) {
  if (is_stdout(output)) {
    io::write_signal_csv(std::cout, values);
    std::cout.flush();
  } else {
    io::write_signal_csv(fs::path(output), values);
  }
}

void emit_json(const std::string& output, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (is_stdout(output)) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text(output, text);
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Written next to file outputs only; the timestamp and elapsed time live here
// and nowhere else so the outputs themselves stay byte-identical across runs.
void write_manifest(const std::string& primary_output, const std::string& command, const json& inputs,
                    const json& config, const json& outputs, Clock::time_point started) {
  if (is_stdout(primary_output)) return;
  json manifest;
  manifest["command"] = command;
  manifest["inputs"] = inputs;
  manifest["config"] = config;
  manifest["outputs"] = outputs;
  manifest["elapsed_seconds"] = std::chrono::duration<double>(Clock::now() - started).count();
  manifest["created_utc"] = utc_timestamp();
  manifest["version"] = std::string(version());
  const fs::path path = sibling(primary_output, ".manifest.json");
  write_text(path, manifest.dump(2) + "\n");
  spdlog::debug("manifest written to {}", path.string());
}

Theta resolve_theta(const WeightArgs& args, std::size_t n) {
  if (!args.weights_path.empty()) return io::read_weights_json(args.weights_path);
  if (args.uniform) return Theta::uniform(*args.uniform, args.mass_a, n);
  throw Error(Errc::InvalidWeights, "either --weights or --uniform is required");
}

json weight_config(const WeightArgs& args, const Theta& theta) {
  json cfg;
  if (!args.weights_path.empty()) cfg["weights"] = args.weights_path;
  if (args.uniform) {
    cfg["uniform"] = *args.uniform;
    cfg["a"] = args.mass_a;
  }
  cfg["theta"] = io::to_json(theta);
  return cfg;
}

// Runs `body`, mapping library failures to exit codes.
int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return e.code() == Errc::Io ? kIoError : kValidationError;
  } catch (const fs::filesystem_error& e) {
    spdlog::error("{}", e.what());
    return kIoError;
  } catch (const json::exception& e) {
    spdlog::error("{}", e.what());
    return kValidationError;
  }
}

std::string plot_blocks(const std::vector<std::pair<std::string, std::span<const double>>>& series) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, values] : series) {
    if (!first) os << "\n\n";
    first = false;
    os << "# " << name << "\n# index value\n";
    for (std::size_t i = 0; i < values.size(); ++i) os << i << ' ' << io::format_real(values[i]) << '\n';
  }
  return os.str();
}

}  // namespace

int run_smooth(const SmoothArgs& args) {
  return guarded([&] {
    const auto started = Clock::now();
    if (args.emit_plot && is_stdout(args.output)) {
      throw Error(Errc::InvalidWeights, "--emit-plot needs --output PATH");
    }
    const Signal y = io::read_signal_csv(args.input);
    const Theta theta = resolve_theta(args.weights, y.size());
    spdlog::info("smoothing {} samples, A = {}, B = {}", y.size(), theta.mass_a(), theta.mass_b());

    const Decomposition parts = decompose(y, theta);
    const Signal x = ar_smooth(y, theta);
    emit_signal(args.output, x.values());

    json outputs = json::array({args.output});
    json config = weight_config(args.weights, theta);
    int status = kOk;

    if (args.verify) {
      std::FILE* report = is_stdout(args.output) ? stderr : stdout;
      if (y.size() > verify::kMaxOracleSize) {
        spdlog::warn("verification skipped: dense oracle is limited to {} samples", verify::kMaxOracleSize);
        config["verify"] = "skipped";
      } else {
        const Signal dense = verify::solve_dense(parts.y_bar, build_ar_kernel_theta(theta));
        const double deviation = verify::max_relative_deviation(x.values(), dense.values());
        const bool ok = deviation <= kVerifyTol;
        std::fprintf(report, "verify: max relative deviation %.3e (tol %.0e) %s\n", deviation, kVerifyTol,
                     ok ? "ok" : "FAILED");
        std::fflush(report);
        config["verify"] = {{"max_relative_deviation", deviation}, {"tolerance", kVerifyTol}, {"ok", ok}};
        if (!ok) status = kVerificationFailure;
      }
    }

    if (args.emit_plot) {
      const fs::path plot = sibling(args.output, ".plot.dat");
      write_text(plot, plot_blocks({{"y", y.values()}, {"y_bar", parts.y_bar.values()}, {"x", x.values()}}));
      outputs.push_back(plot.string());
    }
    write_manifest(args.output, "smooth", json::array({args.input}), config, outputs, started);
    return status;
  });
}

int run_design(const DesignArgs& args) {
  return guarded([&] {
    const auto started = Clock::now();
    if (is_stdout(args.output)) {
      throw Error(Errc::InvalidWeights, "design needs --output PATH for the report");
    }
    const Signal y = io::read_signal_csv(args.input);
    DesignConfig cfg;
    cfg.mode = parse_design_mode(args.mode);
    cfg.max_half_width = args.max_half_width.value_or(default_max_half_width(y.size()));
    cfg.mass_a = args.mass_a;
    cfg.threads = args.threads;
    spdlog::info("design search: mode {}, L = {}, N = {}", to_string(cfg.mode), cfg.max_half_width, y.size());

    DesignReport report;
    std::optional<Signal> x;
    if (cfg.mode == DesignMode::Cascade) {
      auto result = cascade_design(y, cfg.max_half_width, cfg.threads);
      report = std::move(result.report);
      x = std::move(result.x);
    } else {
      report = design_search(y, cfg);
      x = ar_smooth(y, report.best_theta);
    }
    spdlog::info("best vertex m_p = {}, m_q = {}, value {}", report.best_vertex.m_p, report.best_vertex.m_q,
                 report.best_j);

    emit_json(args.output, io::to_json(report));
    const fs::path smoothed = sibling(args.output, ".smoothed.csv");
    io::write_signal_csv(smoothed, x->values());

    json config{{"mode", std::string(to_string(cfg.mode))},
                {"max_half_width", cfg.max_half_width},
                {"a", cfg.mass_a},
                {"threads", cfg.threads},
                {"search_seconds", report.elapsed.count()}};
    write_manifest(args.output, "design", json::array({args.input}), config,
                   json::array({args.output, smoothed.string()}), started);
    return kOk;
  });
}

int run_analyze(const AnalyzeArgs& args) {
  return guarded([&] {
    const auto started = Clock::now();
    if (args.n < 3) throw Error(Errc::TooShort, "--n must be at least 3");
    const Theta theta = resolve_theta(args.weights, args.n);
    const Window w = weights_from_theta(theta);
    const ARKernel kernel = build_ar_kernel(w);
    const SpectrumReport report = effective_window(kernel, args.n);
    if (report.r_star) {
      spdlog::info("characteristic root r* = {}", *report.r_star);
    } else {
      spdlog::info("identity kernel: no characteristic root (NoSmoothingTerm)");
    }

    json doc = io::to_json(report);
    doc["n"] = args.n;
    doc["window"] = w.taps();
    doc["kernel"] = kernel.taps();
    emit_json(args.output, doc);

    json outputs = json::array({args.output});
    if (!is_stdout(args.output)) {
      // Offsets centered on zero; log10(u) makes the exponential tails linear.
      const auto n = static_cast<long>(args.n);
      std::ostringstream os;
      os << "# offset u log10_u\n";
      for (long k = -(n - 1) / 2; k <= n / 2; ++k) {
        const double u = report.u[static_cast<std::size_t>(((k % n) + n) % n)];
        os << k << ' ' << io::format_real(u) << ' ' << (u > 0.0 ? io::format_real(std::log10(u)) : "nan") << '\n';
      }
      const fs::path plot = sibling(args.output, ".u.dat");
      write_text(plot, os.str());
      outputs.push_back(plot.string());
    }
    json config = weight_config(args.weights, theta);
    config["n"] = args.n;
    json inputs = json::array();
    if (!args.weights.weights_path.empty()) inputs.push_back(args.weights.weights_path);
    write_manifest(args.output, "analyze", inputs, config, outputs, started);
    return kOk;
  });
}

int run_generate(const GenerateArgs& args) {
  return guarded([&] {
    const auto started = Clock::now();
    if (args.n < 3) throw Error(Errc::TooShort, "--n must be at least 3");
    std::mt19937_64 rng(args.seed);
    std::normal_distribution<double> noise(0.0, args.noise);
    std::vector<double> y(args.n);
    const double len = static_cast<double>(args.n);
    for (std::size_t i = 0; i < args.n; ++i) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / len;
      y[i] = std::sin(3.0 * t) + 0.5 * std::sin(11.0 * t) + noise(rng);
    }
    emit_signal(args.output, y);
    write_manifest(args.output, "generate", json::array(),
                   {{"n", args.n}, {"seed", args.seed}, {"noise", args.noise}}, json::array({args.output}), started);
    return kOk;
  });
}

}  // namespace armm::cli
