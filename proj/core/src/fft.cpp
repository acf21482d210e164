#include "armm/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace armm::fft {
namespace {

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

Buffer allocate(std::size_t n) { return Buffer(fftw_alloc_complex(n)); }

// FFTW's planner is not reentrant; execution of an existing plan on new
// arrays is. Plans are created once per (size, direction) on fftw_malloc'd
// buffers and reused with fftw_execute_dft, which needs the same alignment,
// so every call also works on fftw_malloc'd buffers. FFTW_ESTIMATE keeps the
// chosen algorithm, and therefore the rounding, identical across runs.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    Buffer in = allocate(n);
    Buffer out = allocate(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), in.get(), out.get(), sign, FFTW_ESTIMATE);
    plans_.emplace(key, plan);
    return plan;
  }

  PlanCache(const PlanCache&) = delete;
  PlanCache& operator=(const PlanCache&) = delete;

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  PlanCache() = default;

  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

Spectrum run(const Buffer& in, std::size_t n, int sign) {
  Buffer out = allocate(n);
  fftw_execute_dft(PlanCache::instance().get(n, sign), in.get(), out.get());
  Spectrum result(n);
  for (std::size_t i = 0; i < n; ++i) result[i] = {out[i][0], out[i][1]};
  return result;
}

}  // namespace

Spectrum forward(std::span<const double> x) {
  const std::size_t n = x.size();
  Buffer in = allocate(n);
  for (std::size_t i = 0; i < n; ++i) {
    in[i][0] = x[i];
    in[i][1] = 0.0;
  }
  return run(in, n, FFTW_FORWARD);
}

Spectrum inverse(std::span<const std::complex<double>> spectrum) {
  const std::size_t n = spectrum.size();
  Buffer in = allocate(n);
  for (std::size_t i = 0; i < n; ++i) {
    in[i][0] = spectrum[i].real();
    in[i][1] = spectrum[i].imag();
  }
  Spectrum result = run(in, n, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& c : result) c *= scale;
  return result;
}

}  // namespace armm::fft
