#ifndef ARMM_IO_HPP
#define ARMM_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "armm/design.hpp"
#include "armm/signal.hpp"
#include "armm/spectral.hpp"
#include "armm/theta.hpp"

namespace armm::io {

/// One value per line, or "index,value" (index ignored). Blank lines and
/// lines starting with '#' are skipped.
Signal parse_signal_csv(std::istream& in);
Signal read_signal_csv(const std::filesystem::path& path);

/// One value per line, 17 significant digits.
void write_signal_csv(std::ostream& out, std::span<const double> values);
void write_signal_csv(const std::filesystem::path& path, std::span<const double> values);

/// {"alpha": [...], "beta": [...]} or {"p": [...], "q": [...], "A": a}.
Theta parse_weights_json(const nlohmann::json& doc);
Theta read_weights_json(const std::filesystem::path& path);

nlohmann::json to_json(const Theta& theta);
nlohmann::json to_json(const SpectrumReport& report);
/// Elapsed time is left out so reports stay byte-identical across runs.
nlohmann::json to_json(const DesignReport& report);

std::string format_real(double value);

}  // namespace armm::io

#endif
