#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffskit/tensor.hpp"

namespace ffskit {

/// Parameters of a periodic Dirichlet kernel (all coefficients equal to one).
struct DirichletSpec {
  double period = 1.0;
  double center = 0.0;
  std::size_t bandwidth = 1;  ///< N_FS, odd
};

inline void validate(const DirichletSpec& spec) {
  if (!(spec.period > 0.0) || !std::isfinite(spec.period)) {
    throw std::invalid_argument("DirichletSpec: period must be positive and finite");
  }
  if (!std::isfinite(spec.center)) {
    throw std::invalid_argument("DirichletSpec: center must be finite");
  }
  if (spec.bandwidth == 0 || spec.bandwidth % 2 == 0) {
    throw std::invalid_argument("DirichletSpec: bandwidth must be an odd positive count");
  }
}

/// Dirichlet kernel sum_{k=-N}^{N} exp(j (2 pi / T) k (t - T_c)), evaluated
/// through the closed form sin(N_FS pi u / T) / sin(pi u / T) with u = t - T_c.
/// Near the removable singularity u = 0 (mod T) the direct cosine sum is used
/// instead; the kernel value there is N_FS.
inline std::vector<cdouble> dirichlet(std::span<const double> t, const DirichletSpec& spec) {
  validate(spec);
  constexpr double pi = std::numbers::pi;
  const std::size_t n_half = (spec.bandwidth - 1) / 2;

  std::vector<cdouble> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double u = (t[i] - spec.center) / spec.period;
    const double denom = std::sin(pi * u);
    double value;
    if (std::abs(denom) < 1e-9) {
      value = 1.0;
      for (std::size_t k = 1; k <= n_half; ++k) {
        value += 2.0 * std::cos(2.0 * pi * static_cast<double>(k) * u);
      }
    } else {
      value = std::sin(static_cast<double>(spec.bandwidth) * pi * u) / denom;
    }
    out[i] = value;
  }
  return out;
}

/// 2-D Dirichlet kernel: the outer product of two 1-D kernels.
inline Tensor dirichlet_2d(std::span<const double> x, std::span<const double> y,
                           const DirichletSpec& spec_x, const DirichletSpec& spec_y) {
  const std::vector<cdouble> dx = dirichlet(x, spec_x);
  const std::vector<cdouble> dy = dirichlet(y, spec_y);
  Tensor out({dx.size(), dy.size()});
  for (std::size_t i = 0; i < dx.size(); ++i) {
    for (std::size_t j = 0; j < dy.size(); ++j) out[i * dy.size() + j] = dx[i] * dy[j];
  }
  return out;
}

/// Multiplies ascending-time samples by a Tukey window of taper fraction
/// alpha in [0, 1]: alpha = 0 leaves the input unchanged, alpha = 1 is a full
/// cosine window, and for alpha > 0 the endpoints go exactly to zero.
inline std::vector<cdouble> apply_taper(std::span<const cdouble> x, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("apply_taper: taper fraction must be in [0, 1]");
  }
  std::vector<cdouble> out(x.begin(), x.end());
  if (alpha == 0.0 || x.size() < 2) return out;

  constexpr double pi = std::numbers::pi;
  const double span = static_cast<double>(x.size() - 1);
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double pos = static_cast<double>(n) / span;
    const double edge = pos <= 0.5 ? pos : 1.0 - pos;
    if (edge < 0.5 * alpha) {
      out[n] *= 0.5 * (1.0 + std::cos(pi * (2.0 * edge / alpha - 1.0)));
    }
  }
  return out;
}

}  // namespace ffskit
