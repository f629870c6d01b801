#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ffskit/tensor.hpp"

namespace ffskit {

/// One axis of a periodic sampling grid.
///
/// A T-periodic function of bandwidth N_FS = 2N + 1 (an odd number of Fourier
/// series coefficients, indices k in [-N, N]) is sampled N_s >= N_FS times per
/// period. The zero padding Q = N_s - N_FS is even when N_s is odd and odd
/// when N_s is even; with an odd bandwidth this holds automatically, and the
/// sample parity selects the matching timestamp formula (see sample_points).
struct DimSpec {
  double period = 1.0;           ///< T > 0
  double center = 0.0;           ///< T_c, mid-point of the sampled period
  std::size_t bandwidth = 1;     ///< N_FS, odd
  std::size_t sample_count = 1;  ///< N_s >= N_FS
};

inline void validate(const DimSpec& dim) {
  if (!(dim.period > 0.0) || !std::isfinite(dim.period)) {
    throw std::invalid_argument("DimSpec: period must be positive and finite");
  }
  if (!std::isfinite(dim.center)) {
    throw std::invalid_argument("DimSpec: center must be finite");
  }
  if (dim.bandwidth == 0 || dim.bandwidth % 2 == 0) {
    throw std::invalid_argument("DimSpec: bandwidth must be an odd positive count");
  }
  if (dim.sample_count < dim.bandwidth) {
    throw std::invalid_argument("DimSpec: sample_count must be >= bandwidth");
  }
}

/// Half-width M of the index sequence: (N_s - 1) / 2 for odd N_s, N_s / 2 for even.
inline std::size_t half_width(const DimSpec& dim) {
  return dim.sample_count % 2 == 1 ? (dim.sample_count - 1) / 2 : dim.sample_count / 2;
}

/// Cartesian product of per-axis periodic grids.
struct PeriodicGrid {
  std::vector<DimSpec> dims;

  explicit PeriodicGrid(std::vector<DimSpec> d) : dims(std::move(d)) {
    if (dims.empty()) throw std::invalid_argument("PeriodicGrid: needs at least one dimension");
    for (const DimSpec& dim : dims) validate(dim);
  }

  std::size_t rank() const { return dims.size(); }

  std::vector<std::size_t> sample_shape() const {
    std::vector<std::size_t> s(dims.size());
    for (std::size_t d = 0; d < dims.size(); ++d) s[d] = dims[d].sample_count;
    return s;
  }
};

/// Arrangement of samples along an axis: ascending time, or the split order
/// [t_0 ... t_M, t_-M ... t_-1] consumed by the series transforms.
enum class SampleOrder { natural, ffs };

/// Complex sample values tagged with their ordering convention.
struct SampleTensor {
  Tensor values;
  SampleOrder order = SampleOrder::natural;
};

/// Timestamps in ffs order plus the permutation from natural positions:
/// ffs_values[natural_to_ffs[i]] = natural_values[i].
struct SamplePoints {
  std::vector<double> timestamps;
  std::vector<std::size_t> natural_to_ffs;
};

/// Signed time index of ffs-order position `pos`: [0 ... M, -M ... -1] for odd
/// N_s and [0 ... M-1, -M ... -1] for even N_s.
inline long long ffs_time_index(std::size_t pos, std::size_t n_s) {
  return pos <= (n_s - 1) / 2 ? static_cast<long long>(pos)
                              : static_cast<long long>(pos) - static_cast<long long>(n_s);
}

/// Sample timestamps mandated by the series transforms, in ffs order.
///
/// Odd N_s: t_n = T_c + (T / N_s) n. Even N_s: t_n = T_c + (T / N_s)(1/2 + n).
/// Both layouts are the ascending-time order rotated left by M, so the
/// returned permutation is natural_to_ffs[i] = (i - M) mod N_s.
inline SamplePoints sample_points(const DimSpec& dim) {
  validate(dim);
  const std::size_t n_s = dim.sample_count;
  const std::size_t m = half_width(dim);
  const double step = dim.period / static_cast<double>(n_s);
  const double offset = n_s % 2 == 1 ? 0.0 : 0.5;

  SamplePoints out;
  out.timestamps.resize(n_s);
  out.natural_to_ffs.resize(n_s);
  for (std::size_t pos = 0; pos < n_s; ++pos) {
    const double n = static_cast<double>(ffs_time_index(pos, n_s));
    out.timestamps[pos] = dim.center + step * (n + offset);
    out.natural_to_ffs[pos] = (pos + n_s - m) % n_s;
  }
  return out;
}

namespace detail {

inline void check_grid_shape(const Tensor& t, const PeriodicGrid& grid, const char* what) {
  if (t.shape() != grid.sample_shape()) {
    throw std::invalid_argument(std::string(what) + ": tensor shape does not match grid");
  }
}

inline Tensor rotate_axes(const Tensor& in, const PeriodicGrid& grid, bool to_ffs) {
  Tensor out = in;
  for (std::size_t axis = 0; axis < grid.rank(); ++axis) {
    const std::size_t n_s = grid.dims[axis].sample_count;
    const std::size_t m = half_width(grid.dims[axis]);
    const std::size_t shift = to_ffs ? m : n_s - m;  // left rotation amount
    if (shift % n_s == 0) continue;
    out = transform_axis(out, axis, n_s, [&](std::span<const cdouble> src, std::span<cdouble> dst) {
      for (std::size_t j = 0; j < n_s; ++j) dst[j] = src[(j + shift) % n_s];
    });
  }
  return out;
}

}  // namespace detail

/// Reorders ascending-time samples into the split order expected by ffs/ffsn.
inline SampleTensor to_ffs_order(const SampleTensor& x, const PeriodicGrid& grid) {
  if (x.order != SampleOrder::natural) {
    throw std::invalid_argument("to_ffs_order: input must be in natural order");
  }
  detail::check_grid_shape(x.values, grid, "to_ffs_order");
  return {detail::rotate_axes(x.values, grid, true), SampleOrder::ffs};
}

/// Exact inverse of to_ffs_order.
inline SampleTensor from_ffs_order(const SampleTensor& x, const PeriodicGrid& grid) {
  if (x.order != SampleOrder::ffs) {
    throw std::invalid_argument("from_ffs_order: input must be in ffs order");
  }
  detail::check_grid_shape(x.values, grid, "from_ffs_order");
  return {detail::rotate_axes(x.values, grid, false), SampleOrder::natural};
}

}  // namespace ffskit
