#ifndef ARMM_DESIGN_HPP
#define ARMM_DESIGN_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "armm/signal.hpp"
#include "armm/spectral.hpp"
#include "armm/theta.hpp"

namespace armm {

enum class DesignMode { Joint, Tied, Cascade };

std::string_view to_string(DesignMode mode) noexcept;
/// Throws Errc::Parse for anything but "joint", "tied" or "cascade".
DesignMode parse_design_mode(std::string_view text);

struct DesignConfig {
  std::size_t max_half_width = 1;  // L
  double mass_a = 1.0 / 3.0;       // A; B = 1 - A
  DesignMode mode = DesignMode::Joint;
  /// Worker threads for vertex evaluation; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// floor(log2 N), at least 1 and capped so the window still fits.
std::size_t default_max_half_width(std::size_t n) noexcept;

/// A polytope vertex: p uniform on -m_p..m_p, q uniform off-center on
/// 1 <= |k| <= m_q.
struct Vertex {
  std::size_t m_p = 1;
  std::size_t m_q = 1;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Candidate {
  Vertex vertex;
  double objective = 0.0;  // J for joint/tied, H0 for the cascade stage-1 scan

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct DesignReport {
  DesignMode mode = DesignMode::Joint;
  std::size_t max_half_width = 1;
  double mass_a = 1.0 / 3.0;
  double mass_b = 2.0 / 3.0;
  Vertex best_vertex;
  Theta best_theta = Theta::uniform(1, 1.0 / 3.0, 3);
  double best_j = 0.0;
  std::vector<Candidate> candidates;
  /// Cascade only: the fixed stage-2 AR kernel and the full G at the result.
  std::optional<ARKernel> stage2_kernel;
  std::optional<double> final_objective;
  std::chrono::duration<double> elapsed{};

  /// Equality on everything except the elapsed time.
  [[nodiscard]] bool same_result(const DesignReport& other) const;
};

/// J(y, theta) = min_x G(x, y, theta), evaluated at the closed-form minimizer.
double evaluate_J(const Signal& y, const Theta& theta);

/// Joint: every (m_p, m_q) in 1..L x 1..L. Tied: m_p = m_q. Cascade: the
/// stage-1 p scan (m_p in 1..L, m_q = 1).
std::vector<Vertex> enumerate_vertices(std::size_t max_half_width, std::size_t n, DesignMode mode);

/// The argmin among candidates, ties (|dJ| <= tie tolerance) broken by
/// smaller m_p + m_q and then smaller m_p. Independent of candidate order.
std::size_t select_best(const std::vector<Candidate>& candidates, double tie_tolerance);

/// Ties are declared when objectives differ by at most this times (1 + sum y^2).
inline constexpr double kTieRelTol = 1e-12;

/// Exhaustive vertex search with fixed masses (A, 1 - A).
DesignReport design_search(const Signal& y, const DesignConfig& cfg);

struct CascadeResult {
  TaperedWindow p;
  Signal x;
  DesignReport report;
};

/// Stage 1 picks p among uniform windows m = 1..L minimizing H0; stage 2
/// smooths the moving mean with the fixed length-3 AR filter w = (1/3, 1/3, 1/3).
CascadeResult cascade_design(const Signal& y, std::size_t max_half_width, unsigned threads = 1);

}  // namespace armm

#endif
