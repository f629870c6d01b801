#pragma once

#include <stdexcept>

#include "ffskit/ffs.hpp"
#include "ffskit/grid.hpp"
#include "ffskit/tensor.hpp"

namespace ffskit {

/// Scaling of the coefficient product: plain X_k H_k per axis, or T X_k H_k
/// per axis so the result matches the periodic convolution integral
/// integral_T f(tau) h(t - tau) dtau.
enum class ConvolveScale { coefficient_product, integral };

struct ConvolveOptions {
  /// true: inputs are in natural order and reordered internally;
  /// false: inputs are already in ffs order.
  bool reorder = true;
  ConvolveScale scale = ConvolveScale::coefficient_product;
};

/// Circular convolution of two periodic bandlimited signals sharing one grid:
/// analysis of both inputs, elementwise coefficient product, synthesis.
/// Output samples are returned in the same order as the inputs.
inline SampleTensor convolve(const SampleTensor& f, const SampleTensor& h,
                             const PeriodicGrid& grid, const ConvolveOptions& opts = {}) {
  if (f.values.shape() != h.values.shape()) {
    throw std::invalid_argument("convolve: inputs must have the same shape");
  }
  const SampleOrder expected = opts.reorder ? SampleOrder::natural : SampleOrder::ffs;
  if (f.order != expected || h.order != expected) {
    throw std::invalid_argument(opts.reorder
                                    ? "convolve: reorder=true expects natural-order inputs"
                                    : "convolve: reorder=false expects ffs-order inputs");
  }

  const SampleTensor ff = opts.reorder ? to_ffs_order(f, grid) : f;
  const SampleTensor hh = opts.reorder ? to_ffs_order(h, grid) : h;

  FsCoefficients f_coeffs = ffsn(ff, grid);
  const FsCoefficients h_coeffs = ffsn(hh, grid);

  double scale = 1.0;
  if (opts.scale == ConvolveScale::integral) {
    for (const DimSpec& dim : grid.dims) scale *= dim.period;
  }
  Tensor& g = f_coeffs.coeffs();
  const Tensor& hc = h_coeffs.coeffs();
  for (std::size_t i = 0; i < g.size(); ++i) g[i] *= hc[i] * scale;

  SampleTensor out = iffsn(f_coeffs);
  return opts.reorder ? from_ffs_order(out, grid) : out;
}

}  // namespace ffskit
