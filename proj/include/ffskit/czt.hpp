#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffskit/spectral.hpp"
#include "ffskit/tensor.hpp"

namespace ffskit {

/// Parameters of the chirp Z-transform: evaluation points z_k = A W^{-k} on a
/// logarithmic spiral with complex starting point A and complex ratio W.
struct CztParams {
  cdouble start;              ///< A, nonzero
  cdouble ratio;              ///< W, nonzero
  std::size_t out_len = 0;    ///< M >= 1
};

namespace detail {

/// mag^e * exp(j 2 pi arg_turns e), with the phase product folded to one turn
/// in extended precision. Computing each chirp power from its index keeps the
/// phase error bounded for exponents up to ~2^40, where cumulative
/// multiplication would drift by one ulp per step.
inline cdouble chirp_power(double mag, double arg_turns, double exponent) {
  const double m = mag == 1.0 ? 1.0 : std::pow(mag, exponent);
  const long double turns =
      std::remainder(static_cast<long double>(arg_turns) * static_cast<long double>(exponent), 1.0L);
  return std::polar(m, two_pi * static_cast<double>(turns));
}

/// Bluestein evaluation of the chirp Z-transform
///   out_k = sum_n x_n A^{-n} W^{n k},  k in [0, M)
/// via the identity n k = (n^2 + k^2 - (k - n)^2) / 2, which rewrites the sum
/// as a circular convolution realized with transforms of length
/// L = next_fast_len(N + M - 1).
struct BluesteinPlan {
  std::size_t n_in = 0;
  std::size_t m_out = 0;
  std::size_t len = 0;
  std::vector<cdouble> input_chirp;   // A^{-n} W^{n^2 / 2}
  std::vector<cdouble> filter_fft;    // DFT_L of the wrapped chirp filter W^{-m^2 / 2}
  std::vector<cdouble> output_chirp;  // W^{k^2 / 2} / L

  BluesteinPlan(std::size_t n, const CztParams& p)
      : n_in(n), m_out(p.out_len), len(next_fast_len(n + p.out_len - 1)) {
    if (n == 0) throw std::invalid_argument("czt: empty input");
    if (p.out_len == 0) throw std::invalid_argument("czt: output length must be >= 1");
    if (p.start == cdouble(0.0) || p.ratio == cdouble(0.0)) {
      throw std::invalid_argument("czt: start point and ratio must be nonzero");
    }

    const double w_mag = std::abs(p.ratio);
    const double w_turns = std::arg(p.ratio) / two_pi;
    const double a_mag = std::abs(p.start);
    const double a_turns = std::arg(p.start) / two_pi;

    input_chirp.resize(n_in);
    for (std::size_t i = 0; i < n_in; ++i) {
      const double di = static_cast<double>(i);
      input_chirp[i] =
          chirp_power(a_mag, a_turns, -di) * chirp_power(w_mag, w_turns, 0.5 * di * di);
    }

    // Filter taps at signed lags m in (-N, M); negative lags wrap to L - m.
    std::vector<cdouble> filter(len, cdouble(0.0));
    for (std::size_t m = 0; m < m_out; ++m) {
      const double dm = static_cast<double>(m);
      filter[m] = chirp_power(w_mag, w_turns, -0.5 * dm * dm);
    }
    for (std::size_t m = 1; m < n_in; ++m) {
      const double dm = static_cast<double>(m);
      filter[len - m] = chirp_power(w_mag, w_turns, -0.5 * dm * dm);
    }
    filter_fft.resize(len);
    fft_forward(filter, filter_fft);

    const double inv_len = 1.0 / static_cast<double>(len);
    output_chirp.resize(m_out);
    for (std::size_t k = 0; k < m_out; ++k) {
      const double dk = static_cast<double>(k);
      output_chirp[k] = chirp_power(w_mag, w_turns, 0.5 * dk * dk) * inv_len;
    }
  }

  void apply(std::span<const cdouble> src, std::span<cdouble> dst) const {
    std::vector<cdouble> a(len, cdouble(0.0));
    for (std::size_t i = 0; i < n_in; ++i) a[i] = src[i] * input_chirp[i];
    std::vector<cdouble> spectrum(len);
    fft_forward(a, spectrum);
    for (std::size_t i = 0; i < len; ++i) spectrum[i] *= filter_fft[i];
    fft_backward_raw(spectrum, a);
    for (std::size_t k = 0; k < m_out; ++k) dst[k] = a[k] * output_chirp[k];
  }
};

}  // namespace detail

/// Chirp Z-transform of arbitrary input/output lengths, O(L log L) with
/// L = next_fast_len(N + M - 1). With A = 1, W = exp(-j 2 pi / N) and M = N it
/// reduces to the DFT. Non-unit |W| with large exponents may overflow; the
/// parameters are not range-guarded.
inline std::vector<cdouble> czt(std::span<const cdouble> x, const CztParams& p) {
  const detail::BluesteinPlan plan(x.size(), p);
  std::vector<cdouble> out(p.out_len);
  plan.apply(x, out);
  return out;
}

/// Separable N-D chirp Z-transform: the 1-D transform applied along every
/// axis with that axis's parameters. Axis order does not affect the result.
inline Tensor cztn(const Tensor& x, std::span<const CztParams> params) {
  if (params.size() != x.rank()) {
    throw std::invalid_argument("cztn: need one parameter set per axis");
  }
  Tensor t = x;
  for (std::size_t axis = 0; axis < params.size(); ++axis) {
    const detail::BluesteinPlan plan(t.extent(axis), params[axis]);
    t = transform_axis(t, axis, params[axis].out_len,
                       [&](std::span<const cdouble> s, std::span<cdouble> d) { plan.apply(s, d); });
  }
  return t;
}

}  // namespace ffskit
