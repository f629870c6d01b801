#pragma once

#include <fftw3.h>

#include <cmath>
#include <cstdint>
#include <mutex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ffskit/tensor.hpp"

namespace ffskit {

namespace detail {

constexpr double two_pi = 2.0 * std::numbers::pi;

/// Process-wide cache of FFTW plans, keyed by (length, direction).
///
/// Plans are created with FFTW_UNALIGNED so they can execute on any buffer;
/// plan creation is serialized (FFTW planning is not thread-safe) while
/// execution on distinct buffers is safe concurrently.
class FftPlanCache {
 public:
  static FftPlanCache& instance() {
    static FftPlanCache cache;
    return cache;
  }

  void execute(std::size_t n, int sign, const cdouble* in, cdouble* out) {
    fftw_plan plan = acquire(n, sign);
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<cdouble*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
  }

  FftPlanCache(const FftPlanCache&) = delete;
  FftPlanCache& operator=(const FftPlanCache&) = delete;

 private:
  FftPlanCache() = default;

  ~FftPlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan acquire(std::size_t n, int sign) {
    const std::uint64_t key = (static_cast<std::uint64_t>(n) << 1) | (sign == FFTW_BACKWARD);
    std::scoped_lock lock(mutex_);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    std::vector<cdouble> a(n), b(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(a.data()),
                                      reinterpret_cast<fftw_complex*>(b.data()), sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw std::runtime_error("fft: planning failed");
    plans_.emplace(key, plan);
    return plan;
  }

  std::mutex mutex_;
  std::unordered_map<std::uint64_t, fftw_plan> plans_;
};

/// Unnormalized forward transform, out-of-place; buffers must not overlap.
inline void fft_forward(std::span<const cdouble> x, std::span<cdouble> out) {
  FftPlanCache::instance().execute(x.size(), FFTW_FORWARD, x.data(), out.data());
}

/// Unnormalized backward transform (no 1/N factor).
inline void fft_backward_raw(std::span<const cdouble> x, std::span<cdouble> out) {
  FftPlanCache::instance().execute(x.size(), FFTW_BACKWARD, x.data(), out.data());
}

inline void check_transform_input(std::span<const cdouble> x, const char* what) {
  if (x.empty()) throw std::invalid_argument(std::string(what) + ": empty input");
  for (const cdouble& v : x) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument(std::string(what) + ": non-finite input value");
    }
  }
}

}  // namespace detail

/// Forward DFT: X_k = sum_n x_n exp(-j 2 pi n k / N), unnormalized.
/// Any length is supported (prime lengths included) at O(N log N) cost.
inline std::vector<cdouble> dft(std::span<const cdouble> x) {
  detail::check_transform_input(x, "dft");
  std::vector<cdouble> out(x.size());
  detail::fft_forward(x, out);
  return out;
}

/// Inverse DFT: x_n = (1/N) sum_k X_k exp(+j 2 pi n k / N).
inline std::vector<cdouble> idft(std::span<const cdouble> x) {
  detail::check_transform_input(x, "idft");
  std::vector<cdouble> out(x.size());
  detail::fft_backward_raw(x, out);
  const double scale = 1.0 / static_cast<double>(x.size());
  for (cdouble& v : out) v *= scale;
  return out;
}

/// Smallest 5-smooth integer (prime factors in {2, 3, 5}) that is >= n.
inline std::size_t next_fast_len(std::size_t n) {
  if (n == 0) throw std::invalid_argument("next_fast_len: n must be >= 1");
  for (;; ++n) {
    std::size_t m = n;
    while (m % 2 == 0) m /= 2;
    while (m % 3 == 0) m /= 3;
    while (m % 5 == 0) m /= 5;
    if (m == 1) return n;
  }
}

}  // namespace ffskit
