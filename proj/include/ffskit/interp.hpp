#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffskit/czt.hpp"
#include "ffskit/ffs.hpp"
#include "ffskit/grid.hpp"
#include "ffskit/tensor.hpp"

namespace ffskit {

/// Closed interval [start, stop] sampled at `count` equi-spaced points
/// t_n = start + n (stop - start) / (count - 1), n in [0, count).
struct InterpRequest {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 0;  ///< >= 2 so the step is defined
};

namespace detail {

inline void validate_interp(std::size_t n_fs, double period, const InterpRequest& req,
                            const char* what) {
  if (n_fs == 0 || n_fs % 2 == 0) {
    throw std::invalid_argument(std::string(what) + ": coefficient count must be odd");
  }
  if (!(period > 0.0) || !std::isfinite(period)) {
    throw std::invalid_argument(std::string(what) + ": period must be positive");
  }
  if (!(req.start < req.stop)) {
    throw std::invalid_argument(std::string(what) + ": interval start must be < stop");
  }
  if (req.count < 2) {
    throw std::invalid_argument(std::string(what) + ": need at least 2 sample points");
  }
}

/// Bandlimited evaluation of sum_k X_k exp(j 2 pi k t / T) on an equi-spaced
/// interval, as a chirp Z-transform over the coefficients:
///   x = A^N CZT(X) . W^{-N n},  A = exp(-j 2 pi a / T),
///   W = exp(j (2 pi / T) (b - a) / (M - 1)).
struct InterpAxisPlan {
  BluesteinPlan czt_plan;
  std::vector<cdouble> post;  // A^N W^{-N n}

  InterpAxisPlan(std::size_t n_fs, double period, const InterpRequest& req)
      : czt_plan(n_fs, make_params(n_fs, period, req)) {
    const double n_half = static_cast<double>((n_fs - 1) / 2);
    const double start_turns = req.start / period;
    const double step_turns = (req.stop - req.start) / (static_cast<double>(req.count - 1) * period);
    post.resize(req.count);
    for (std::size_t n = 0; n < req.count; ++n) {
      const long double turns =
          std::remainder(-static_cast<long double>(n_half) *
                             (static_cast<long double>(start_turns) +
                              static_cast<long double>(step_turns) * static_cast<long double>(n)),
                         1.0L);
      post[n] = std::polar(1.0, two_pi * static_cast<double>(turns));
    }
  }

  static CztParams make_params(std::size_t n_fs, double period, const InterpRequest& req) {
    validate_interp(n_fs, period, req, "fs_interp");
    const double start_turns = std::remainder(req.start / period, 1.0);
    const double step_turns =
        std::remainder((req.stop - req.start) / (static_cast<double>(req.count - 1) * period), 1.0);
    return {std::polar(1.0, -two_pi * start_turns), std::polar(1.0, two_pi * step_turns),
            req.count};
  }

  void apply(std::span<const cdouble> src, std::span<cdouble> dst) const {
    czt_plan.apply(src, dst);
    for (std::size_t n = 0; n < post.size(); ++n) dst[n] *= post[n];
  }
};

}  // namespace detail

/// Interpolates a bandlimited T-periodic signal, given by its length-N_FS
/// coefficient vector in ascending index order, at `req.count` equi-spaced
/// points of [req.start, req.stop]. Cost O(L log L), L ~ N_FS + count,
/// independent of the interval width.
inline std::vector<cdouble> fs_interp(std::span<const cdouble> coeffs, double period,
                                      const InterpRequest& req) {
  const detail::InterpAxisPlan plan(coeffs.size(), period, req);
  std::vector<cdouble> out(req.count);
  plan.apply(coeffs, out);
  return out;
}

/// Separable N-D interpolation: fs_interp applied along every axis.
inline Tensor fs_interpn(const Tensor& coeffs, std::span<const double> periods,
                         std::span<const InterpRequest> reqs) {
  if (periods.size() != coeffs.rank() || reqs.size() != coeffs.rank()) {
    throw std::invalid_argument("fs_interpn: need one period and one request per axis");
  }
  Tensor t = coeffs;
  for (std::size_t axis = 0; axis < coeffs.rank(); ++axis) {
    const detail::InterpAxisPlan plan(t.extent(axis), periods[axis], reqs[axis]);
    t = transform_axis(t, axis, reqs[axis].count,
                       [&](std::span<const cdouble> s, std::span<cdouble> d) { plan.apply(s, d); });
  }
  return t;
}

/// Timestamps of the zero-padding baseline below: the ascending-time sample
/// grid of the internal synthesis, truncated to n_target points when the
/// padding parity forced one extra internal point.
inline std::vector<double> fs_interp_zero_pad_points(double period, double center,
                                                     std::size_t n_fs, std::size_t n_target) {
  if (n_fs == 0 || n_fs % 2 == 0) {
    throw std::invalid_argument("fs_interp_zero_pad: coefficient count must be odd");
  }
  if (n_target < n_fs) {
    throw std::invalid_argument("fs_interp_zero_pad: target resolution must be >= N_FS");
  }
  std::size_t n_internal = n_target;
  if ((n_internal - n_fs) % 2 == 1) ++n_internal;  // odd-length synthesis needs even padding

  const SamplePoints pts = sample_points({period, center, n_fs, n_internal});
  std::vector<double> natural(n_target);
  for (std::size_t i = 0; i < n_target; ++i) natural[i] = pts.timestamps[pts.natural_to_ffs[i]];
  return natural;
}

/// Baseline full-period interpolation: pads the coefficient vector with zeros
/// to n_target and synthesizes one period at that resolution, returning
/// samples in ascending-time order (timestamps from
/// fs_interp_zero_pad_points). When n_target - N_FS is odd, one extra point is
/// synthesized internally and dropped from the end, so the step is
/// T / (n_target + 1) in that case. Cost O(n_target log n_target) regardless
/// of any region of interest.
inline std::vector<cdouble> fs_interp_zero_pad(std::span<const cdouble> coeffs, double period,
                                               double center, std::size_t n_target) {
  const std::size_t n_fs = coeffs.size();
  if (n_fs == 0 || n_fs % 2 == 0) {
    throw std::invalid_argument("fs_interp_zero_pad: coefficient count must be odd");
  }
  if (n_target < n_fs) {
    throw std::invalid_argument("fs_interp_zero_pad: target resolution must be >= N_FS");
  }
  std::size_t n_internal = n_target;
  if ((n_internal - n_fs) % 2 == 1) ++n_internal;

  PeriodicGrid grid({DimSpec{period, center, n_fs, n_internal}});
  const FsCoefficients padded = FsCoefficients::from_trimmed(
      grid, Tensor::line(std::vector<cdouble>(coeffs.begin(), coeffs.end())));
  const SampleTensor natural = from_ffs_order(iffsn(padded), grid);

  std::vector<cdouble> out(natural.values.values().begin(),
                           natural.values.values().begin() + static_cast<std::ptrdiff_t>(n_target));
  return out;
}

}  // namespace ffskit
