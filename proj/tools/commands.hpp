#ifndef ARMM_TOOLS_COMMANDS_HPP
#define ARMM_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace armm::cli {

enum ExitCode : int { kOk = 0, kIoError = 2, kValidationError = 3, kVerificationFailure = 4 };

struct WeightArgs {
  std::string weights_path;        // JSON weights file, or empty
  std::optional<std::size_t> uniform;  // tied uniform vertex half-width
  double mass_a = 1.0 / 3.0;
};

struct SmoothArgs {
  std::string input;
  std::string output = "-";
  WeightArgs weights;
  bool verify = false;
  bool emit_plot = false;
};

struct DesignArgs {
  std::string input;
  std::string output;
  std::string mode = "joint";
  std::optional<std::size_t> max_half_width;
  double mass_a = 1.0 / 3.0;
  unsigned threads = 0;
};

struct AnalyzeArgs {
  std::string output = "-";
  WeightArgs weights;
  std::size_t n = 0;
};

struct GenerateArgs {
  std::string output = "-";
  std::size_t n = 256;
  std::uint64_t seed = 1;
  double noise = 0.3;
};

int run_smooth(const SmoothArgs& args);
int run_design(const DesignArgs& args);
int run_analyze(const AnalyzeArgs& args);
int run_generate(const GenerateArgs& args);

}  // namespace armm::cli

#endif
