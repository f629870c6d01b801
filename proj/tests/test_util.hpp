#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include "ffskit/ffs.hpp"
#include "ffskit/grid.hpp"
#include "ffskit/tensor.hpp"

namespace ffskit::testutil {

inline double max_abs(std::span<const cdouble> v) {
  double m = 0.0;
  for (const cdouble& x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs_diff(std::span<const cdouble> a, std::span<const cdouble> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Max-norm error of `got` against `want`, relative to the magnitude of `want`.
inline double rel_error(std::span<const cdouble> got, std::span<const cdouble> want) {
  const double scale = max_abs(want);
  const double err = max_abs_diff(got, want);
  return scale > 0.0 ? err / scale : err;
}

inline std::vector<cdouble> random_coeffs(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cdouble> out(n);
  for (cdouble& v : out) v = {dist(rng), dist(rng)};
  return out;
}

inline Tensor random_tensor(std::mt19937_64& rng, std::vector<std::size_t> shape) {
  Tensor t(std::move(shape));
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = {dist(rng), dist(rng)};
  return t;
}

/// Bandlimited random samples: synthesis of random coefficients on the grid,
/// returned in the requested order.
inline SampleTensor random_bandlimited(std::mt19937_64& rng, const PeriodicGrid& grid,
                                       SampleOrder order) {
  std::vector<std::size_t> trimmed_shape(grid.rank());
  for (std::size_t d = 0; d < grid.rank(); ++d) trimmed_shape[d] = grid.dims[d].bandwidth;
  const FsCoefficients coeffs =
      FsCoefficients::from_trimmed(grid, random_tensor(rng, trimmed_shape));
  SampleTensor samples = iffsn(coeffs);
  return order == SampleOrder::ffs ? samples : from_ffs_order(samples, grid);
}

/// Ascending-time timestamps of a 1-D grid axis.
inline std::vector<double> natural_timestamps(const DimSpec& dim) {
  const SamplePoints pts = sample_points(dim);
  std::vector<double> out(dim.sample_count);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = pts.timestamps[pts.natural_to_ffs[i]];
  return out;
}

inline Tensor transpose_2d(const Tensor& t) {
  Tensor out({t.extent(1), t.extent(0)});
  for (std::size_t i = 0; i < t.extent(0); ++i) {
    for (std::size_t j = 0; j < t.extent(1); ++j) {
      out[j * t.extent(0) + i] = t[i * t.extent(1) + j];
    }
  }
  return out;
}

}  // namespace ffskit::testutil
