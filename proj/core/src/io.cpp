#include "armm/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "armm/error.hpp"

namespace armm::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view field, std::size_t line_no) {
  field = trim(field);
  double value = 0.0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": cannot parse '" + std::string(field) + "'");
  }
  return value;
}

std::vector<double> taps_from_json(const nlohmann::json& node, const char* key) {
  if (!node.contains(key)) {
    throw Error(Errc::Parse, std::string("weights JSON lacks '") + key + "'");
  }
  const auto& arr = node.at(key);
  if (!arr.is_array() || arr.empty() || arr.size() % 2 == 0) {
    throw Error(Errc::Parse, std::string("'") + key + "' must be a non-empty odd-length array");
  }
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (!v.is_number()) throw Error(Errc::Parse, std::string("'") + key + "' holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string format_real(double value) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << value;
  return os.str();
}

Signal parse_signal_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto comma = view.find(',');
    if (comma == std::string_view::npos) {
      values.push_back(parse_real(view, line_no));
    } else {
      const auto rest = view.substr(comma + 1);
      if (rest.find(',') != std::string_view::npos) {
        throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": expected at most two columns");
      }
      values.push_back(parse_real(rest, line_no));
    }
  }
  return Signal(std::move(values));
}

Signal read_signal_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return parse_signal_csv(in);
}

void write_signal_csv(std::ostream& out, std::span<const double> values) {
  for (double v : values) out << format_real(v) << '\n';
}

void write_signal_csv(const std::filesystem::path& path, std::span<const double> values) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  write_signal_csv(out, values);
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

Theta parse_weights_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(Errc::Parse, "weights JSON must be an object");
  if (doc.contains("alpha") || doc.contains("beta")) {
    return Theta(SymmetricWeights::from_taps(taps_from_json(doc, "alpha")),
                 SymmetricWeights::from_taps(taps_from_json(doc, "beta")));
  }
  if (doc.contains("p")) {
    if (!doc.contains("A") || !doc.at("A").is_number()) {
      throw Error(Errc::Parse, "weights JSON with 'p' needs a numeric 'A'");
    }
    const double a = doc.at("A").get<double>();
    if (!(a > 0.0 && a <= 1.0)) throw Error(Errc::InvalidWeights, "'A' must lie in (0, 1]");
    const Window p(SymmetricWeights::from_taps(taps_from_json(doc, "p")));
    if (!doc.contains("q")) {
      if (a != 1.0) throw Error(Errc::Parse, "weights JSON lacks 'q' but A < 1");
      return Theta(p, SymmetricWeights::from_half({0.0}));
    }
    const Window q(SymmetricWeights::from_taps(taps_from_json(doc, "q")));
    return Theta::from_shapes(p, q, a, 1.0 - a);
  }
  throw Error(Errc::Parse, "weights JSON needs 'alpha'/'beta' or 'p'/'q'/'A'");
}

Theta read_weights_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::Parse, path.string() + ": " + e.what());
  }
  return parse_weights_json(doc);
}

nlohmann::json to_json(const Theta& theta) {
  return {{"alpha", theta.alpha().taps()},
          {"beta", theta.beta().taps()},
          {"A", theta.mass_a()},
          {"B", theta.mass_b()}};
}

nlohmann::json to_json(const SpectrumReport& report) {
  nlohmann::json j;
  j["V"] = report.v;
  j["u"] = report.u;
  j["r_star"] = report.r_star ? nlohmann::json(*report.r_star) : nlohmann::json(nullptr);
  if (!report.r_star) j["note"] = "NoSmoothingTerm";
  j["V_min"] = report.min_v();
  return j;
}

nlohmann::json to_json(const DesignReport& report) {
  nlohmann::json j;
  j["mode"] = std::string(to_string(report.mode));
  j["max_half_width"] = report.max_half_width;
  j["A"] = report.mass_a;
  j["B"] = report.mass_b;
  j["objective"] = report.mode == DesignMode::Cascade ? "H0" : "J";
  j["best"] = {{"m_p", report.best_vertex.m_p}, {"m_q", report.best_vertex.m_q}, {"value", report.best_j}};
  j["best_theta"] = to_json(report.best_theta);
  auto& cands = j["candidates"] = nlohmann::json::array();
  for (const auto& c : report.candidates) {
    cands.push_back({{"m_p", c.vertex.m_p}, {"m_q", c.vertex.m_q}, {"value", c.objective}});
  }
  if (report.stage2_kernel) j["stage2_kernel"] = report.stage2_kernel->taps();
  if (report.final_objective) j["final_G"] = *report.final_objective;
  return j;
}

}  // namespace armm::io
