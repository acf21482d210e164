#include "armm/design.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <tuple>

#include "armm/error.hpp"
#include "armm/smoother.hpp"

namespace armm {
namespace {

double energy(const Signal& y) {
  double e = 0.0;
  for (double v : y.values()) e += v * v;
  return e;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Evaluates `objective` at every vertex; slot i always holds vertex i's value
// no matter which worker computed it.
std::vector<Candidate> evaluate_all(const std::vector<Vertex>& vertices,
                                    const std::function<double(const Vertex&)>& objective, unsigned threads) {
  std::vector<Candidate> out(vertices.size());
  std::vector<std::exception_ptr> errors(vertices.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < vertices.size(); i = next++) {
      try {
        out[i] = Candidate{vertices[i], objective(vertices[i])};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(1, vertices.size()));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

void validate(const Signal& y, std::size_t max_half_width, double mass_a) {
  if (max_half_width == 0) {
    throw Error(Errc::ZeroWidth, "maximum half-width must be at least 1");
  }
  check_fits(max_half_width, y.size());
  if (!(mass_a > 0.0 && mass_a <= 1.0)) {
    throw Error(Errc::InvalidWeights, "data mass A must lie in (0, 1], got " + std::to_string(mass_a));
  }
}

Theta vertex_theta(const Vertex& vtx, double mass_a, std::size_t n) {
  return Theta::from_shapes(make_uniform_window(vtx.m_p, n), make_uniform_offcenter(vtx.m_q, n), mass_a, 1.0 - mass_a);
}

}  // namespace

std::string_view to_string(DesignMode mode) noexcept {
  switch (mode) {
    case DesignMode::Joint: return "joint";
    case DesignMode::Tied: return "tied";
    case DesignMode::Cascade: return "cascade";
  }
  return "joint";
}

DesignMode parse_design_mode(std::string_view text) {
  if (text == "joint") return DesignMode::Joint;
  if (text == "tied") return DesignMode::Tied;
  if (text == "cascade") return DesignMode::Cascade;
  throw Error(Errc::Parse, "unknown design mode '" + std::string(text) + "'");
}

std::size_t default_max_half_width(std::size_t n) noexcept {
  const auto log2n = static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(std::max<std::size_t>(n, 1)))));
  return std::max<std::size_t>(1, std::min(log2n, max_half_width(n)));
}

bool DesignReport::same_result(const DesignReport& other) const {
  return mode == other.mode && max_half_width == other.max_half_width && mass_a == other.mass_a &&
         mass_b == other.mass_b && best_vertex == other.best_vertex && best_theta == other.best_theta &&
         best_j == other.best_j && candidates == other.candidates && stage2_kernel == other.stage2_kernel &&
         final_objective == other.final_objective;
}

double evaluate_J(const Signal& y, const Theta& theta) { return objective_G(ar_smooth(y, theta), y, theta); }

std::vector<Vertex> enumerate_vertices(std::size_t max_half_width, std::size_t n, DesignMode mode) {
  if (max_half_width == 0) {
    throw Error(Errc::ZeroWidth, "maximum half-width must be at least 1");
  }
  check_fits(max_half_width, n);
  std::vector<Vertex> out;
  switch (mode) {
    case DesignMode::Joint:
      out.reserve(max_half_width * max_half_width);
      for (std::size_t mp = 1; mp <= max_half_width; ++mp) {
        for (std::size_t mq = 1; mq <= max_half_width; ++mq) out.push_back({mp, mq});
      }
      break;
    case DesignMode::Tied:
      for (std::size_t m = 1; m <= max_half_width; ++m) out.push_back({m, m});
      break;
    case DesignMode::Cascade:
      for (std::size_t m = 1; m <= max_half_width; ++m) out.push_back({m, 1});
      break;
  }
  return out;
}

std::size_t select_best(const std::vector<Candidate>& candidates, double tie_tolerance) {
  if (candidates.empty()) {
    throw Error(Errc::InvalidWeights, "no candidates to select from");
  }
  double lowest = candidates.front().objective;
  for (const auto& c : candidates) lowest = std::min(lowest, c.objective);
  std::size_t best = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].objective > lowest + tie_tolerance) continue;
    if (best == candidates.size()) {
      best = i;
      continue;
    }
    const Vertex& a = candidates[i].vertex;
    const Vertex& b = candidates[best].vertex;
    const auto key_a = std::make_tuple(a.m_p + a.m_q, a.m_p, a.m_q);
    const auto key_b = std::make_tuple(b.m_p + b.m_q, b.m_p, b.m_q);
    if (key_a < key_b) best = i;
  }
  return best;
}

DesignReport design_search(const Signal& y, const DesignConfig& cfg) {
  if (cfg.mode == DesignMode::Cascade) {
    return cascade_design(y, cfg.max_half_width, cfg.threads).report;
  }
  const auto start = std::chrono::steady_clock::now();
  validate(y, cfg.max_half_width, cfg.mass_a);
  const std::size_t n = y.size();
  const auto vertices = enumerate_vertices(cfg.max_half_width, n, cfg.mode);

  DesignReport report;
  report.mode = cfg.mode;
  report.max_half_width = cfg.max_half_width;
  report.mass_a = cfg.mass_a;
  report.mass_b = 1.0 - cfg.mass_a;
  report.candidates = evaluate_all(
      vertices, [&](const Vertex& v) { return evaluate_J(y, vertex_theta(v, cfg.mass_a, n)); }, cfg.threads);

  const std::size_t best = select_best(report.candidates, kTieRelTol * (1.0 + energy(y)));
  report.best_vertex = report.candidates[best].vertex;
  report.best_j = report.candidates[best].objective;
  report.best_theta = vertex_theta(report.best_vertex, cfg.mass_a, n);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

CascadeResult cascade_design(const Signal& y, std::size_t max_half_width, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  constexpr double kStage2Mass = 1.0 / 3.0;
  validate(y, max_half_width, kStage2Mass);
  const std::size_t n = y.size();
  const auto vertices = enumerate_vertices(max_half_width, n, DesignMode::Cascade);

  DesignReport report;
  report.mode = DesignMode::Cascade;
  report.max_half_width = max_half_width;
  report.mass_a = kStage2Mass;
  report.mass_b = 1.0 - kStage2Mass;
  report.candidates = evaluate_all(
      vertices, [&](const Vertex& v) { return data_scatter(y, make_uniform_window(v.m_p, n)); }, threads);

  const std::size_t best = select_best(report.candidates, kTieRelTol * (1.0 + energy(y)));
  report.best_vertex = report.candidates[best].vertex;
  report.best_j = report.candidates[best].objective;

  TaperedWindow p = make_uniform_window(report.best_vertex.m_p, n);
  const ARKernel stage2 = build_ar_kernel(make_uniform_window(1, n));
  Signal x = deconvolve(moving_mean(y, p), stage2);

  report.best_theta = vertex_theta(report.best_vertex, kStage2Mass, n);
  report.stage2_kernel = stage2;
  report.final_objective = objective_G(x, y, report.best_theta);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return CascadeResult{std::move(p), std::move(x), std::move(report)};
}

}  // namespace armm
