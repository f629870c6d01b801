#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "ffskit/czt.hpp"
#include "ffskit/grid.hpp"
#include "ffskit/tensor.hpp"

// Direct-summation counterparts of the fast transforms. Each routine follows
// the defining sum in extended precision and shares no code with the fast
// paths, so the two can check each other.
namespace ffskit::reference {

using ldouble = long double;
using lcomplex = std::complex<ldouble>;

constexpr ldouble two_pi_l = 2.0L * std::numbers::pi_v<ldouble>;

namespace detail {

/// exp(j 2 pi turns) with the argument folded to one turn.
inline lcomplex phasor(ldouble turns) {
  const ldouble t = std::remainder(turns, 1.0L);
  return {std::cos(two_pi_l * t), std::sin(two_pi_l * t)};
}

}  // namespace detail

/// O(N^2) forward DFT with exactly reduced twiddle exponents.
inline std::vector<cdouble> direct_dft(std::span<const cdouble> x) {
  if (x.empty()) throw std::invalid_argument("direct_dft: empty input");
  const long long n = static_cast<long long>(x.size());
  std::vector<cdouble> out(x.size());
  for (long long k = 0; k < n; ++k) {
    lcomplex acc(0.0L, 0.0L);
    for (long long i = 0; i < n; ++i) {
      const long long r = (i * k) % n;
      acc += lcomplex(x[i].real(), x[i].imag()) *
             detail::phasor(-static_cast<ldouble>(r) / static_cast<ldouble>(n));
    }
    out[k] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  return out;
}

/// O(N^2) inverse DFT.
inline std::vector<cdouble> direct_idft(std::span<const cdouble> x) {
  if (x.empty()) throw std::invalid_argument("direct_idft: empty input");
  const long long n = static_cast<long long>(x.size());
  std::vector<cdouble> out(x.size());
  for (long long k = 0; k < n; ++k) {
    lcomplex acc(0.0L, 0.0L);
    for (long long i = 0; i < n; ++i) {
      const long long r = (i * k) % n;
      acc += lcomplex(x[i].real(), x[i].imag()) *
             detail::phasor(static_cast<ldouble>(r) / static_cast<ldouble>(n));
    }
    acc /= static_cast<ldouble>(n);
    out[k] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  return out;
}

/// O(N M) chirp Z-transform: out_k = sum_n x_n A^{-n} W^{n k}.
inline std::vector<cdouble> direct_czt(std::span<const cdouble> x, const CztParams& p) {
  if (x.empty()) throw std::invalid_argument("direct_czt: empty input");
  if (p.out_len == 0) throw std::invalid_argument("direct_czt: output length must be >= 1");
  if (p.start == cdouble(0.0) || p.ratio == cdouble(0.0)) {
    throw std::invalid_argument("direct_czt: start point and ratio must be nonzero");
  }
  const lcomplex a_inv = 1.0L / lcomplex(p.start.real(), p.start.imag());
  const lcomplex w(p.ratio.real(), p.ratio.imag());

  std::vector<cdouble> out(p.out_len, cdouble(0.0));
  std::vector<lcomplex> acc(p.out_len, lcomplex(0.0L, 0.0L));
  lcomplex a_pow(1.0L, 0.0L);  // A^{-n}
  lcomplex w_row(1.0L, 0.0L);  // W^{n}
  for (std::size_t n = 0; n < x.size(); ++n) {
    lcomplex term = lcomplex(x[n].real(), x[n].imag()) * a_pow;
    for (std::size_t k = 0; k < p.out_len; ++k) {
      acc[k] += term;
      term *= w_row;  // advances W^{n k} across k
    }
    a_pow *= a_inv;
    w_row *= w;
  }
  for (std::size_t k = 0; k < p.out_len; ++k) {
    out[k] = {static_cast<double>(acc[k].real()), static_cast<double>(acc[k].imag())};
  }
  return out;
}

/// Bandlimited synthesis sum_{k=-N}^{N} X_k exp(j 2 pi k t / T) at one point,
/// from coefficients in ascending index order.
inline cdouble synth_point(std::span<const cdouble> coeffs, double period, double t) {
  if (coeffs.empty() || coeffs.size() % 2 == 0) {
    throw std::invalid_argument("synth_point: coefficient count must be odd");
  }
  const long long n_half = static_cast<long long>((coeffs.size() - 1) / 2);
  const ldouble turns_per_k = static_cast<ldouble>(t) / static_cast<ldouble>(period);
  lcomplex acc(0.0L, 0.0L);
  for (long long k = -n_half; k <= n_half; ++k) {
    const cdouble c = coeffs[static_cast<std::size_t>(k + n_half)];
    acc += lcomplex(c.real(), c.imag()) * detail::phasor(static_cast<ldouble>(k) * turns_per_k);
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

inline std::vector<cdouble> synth_points(std::span<const cdouble> coeffs, double period,
                                         std::span<const double> t) {
  std::vector<cdouble> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = synth_point(coeffs, period, t[i]);
  return out;
}

/// 2-D bandlimited synthesis on a point grid, coefficients in ascending index
/// order along both axes.
inline Tensor synth_grid_2d(const Tensor& coeffs, double period_x, double period_y,
                            std::span<const double> x, std::span<const double> y) {
  if (coeffs.rank() != 2) throw std::invalid_argument("synth_grid_2d: rank-2 coefficients expected");
  const long long nx = static_cast<long long>((coeffs.extent(0) - 1) / 2);
  const long long ny = static_cast<long long>((coeffs.extent(1) - 1) / 2);
  Tensor out({x.size(), y.size()});
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      lcomplex acc(0.0L, 0.0L);
      for (long long kx = -nx; kx <= nx; ++kx) {
        for (long long ky = -ny; ky <= ny; ++ky) {
          const cdouble c = coeffs[static_cast<std::size_t>(kx + nx) * coeffs.extent(1) +
                                   static_cast<std::size_t>(ky + ny)];
          const ldouble turns = static_cast<ldouble>(kx) * static_cast<ldouble>(x[i]) /
                                    static_cast<ldouble>(period_x) +
                                static_cast<ldouble>(ky) * static_cast<ldouble>(y[j]) /
                                    static_cast<ldouble>(period_y);
          acc += lcomplex(c.real(), c.imag()) * detail::phasor(turns);
        }
      }
      out[i * y.size() + j] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }
  }
  return out;
}

/// O(N_s N_FS) coefficient recovery by the orthogonality of the sampled
/// harmonics: X_k = (1/N_s) sum_n x(t_n) exp(-j 2 pi k t_n / T), with x given
/// in ffs order at the sample_points timestamps.
inline std::vector<cdouble> direct_fs_analysis(std::span<const cdouble> samples_ffs,
                                               const DimSpec& dim) {
  validate(dim);
  if (samples_ffs.size() != dim.sample_count) {
    throw std::invalid_argument("direct_fs_analysis: sample count mismatch");
  }
  const SamplePoints pts = sample_points(dim);
  const long long n_half = static_cast<long long>((dim.bandwidth - 1) / 2);

  std::vector<cdouble> out(dim.bandwidth);
  for (long long k = -n_half; k <= n_half; ++k) {
    lcomplex acc(0.0L, 0.0L);
    for (std::size_t n = 0; n < samples_ffs.size(); ++n) {
      const ldouble turns = -static_cast<ldouble>(k) * static_cast<ldouble>(pts.timestamps[n]) /
                            static_cast<ldouble>(dim.period);
      acc += lcomplex(samples_ffs[n].real(), samples_ffs[n].imag()) * detail::phasor(turns);
    }
    acc /= static_cast<ldouble>(dim.sample_count);
    out[static_cast<std::size_t>(k + n_half)] = {static_cast<double>(acc.real()),
                                                 static_cast<double>(acc.imag())};
  }
  return out;
}

/// O(N^4) direct circular convolution of two rank-2 sample arrays:
/// out[i,j] = sum_{a,b} f[a,b] h[(i-a) mod N_0, (j-b) mod N_1].
inline Tensor direct_circular_conv_2d(const Tensor& f, const Tensor& h) {
  if (f.rank() != 2 || f.shape() != h.shape()) {
    throw std::invalid_argument("direct_circular_conv_2d: matching rank-2 tensors expected");
  }
  const std::size_t rows = f.extent(0);
  const std::size_t cols = f.extent(1);
  Tensor out({rows, cols});
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      cdouble acc(0.0);
      for (std::size_t a = 0; a < rows; ++a) {
        const std::size_t ia = (i + rows - a) % rows;
        const cdouble* f_row = f.data() + a * cols;
        const cdouble* h_row = h.data() + ia * cols;
        for (std::size_t b = 0; b < cols; ++b) {
          acc += f_row[b] * h_row[(j + cols - b) % cols];
        }
      }
      out[i * cols + j] = acc;
    }
  }
  return out;
}

/// Riemann-sum evaluation of the periodic convolution integral
/// integral_0^T f(tau) h(t - tau) dtau at the given points, with f and h
/// synthesized from their coefficient vectors. Exact (up to rounding) for
/// bandlimited f, h when n_quad exceeds the combined bandwidth.
inline std::vector<cdouble> quadrature_convolution(std::span<const cdouble> f_coeffs,
                                                   std::span<const cdouble> h_coeffs, double period,
                                                   std::span<const double> t,
                                                   std::size_t n_quad = 4096) {
  if (n_quad == 0) throw std::invalid_argument("quadrature_convolution: n_quad must be >= 1");
  const double dtau = period / static_cast<double>(n_quad);
  std::vector<cdouble> f_tau(n_quad);
  for (std::size_t i = 0; i < n_quad; ++i) {
    f_tau[i] = synth_point(f_coeffs, period, dtau * static_cast<double>(i));
  }
  std::vector<cdouble> out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) {
    lcomplex acc(0.0L, 0.0L);
    for (std::size_t i = 0; i < n_quad; ++i) {
      const cdouble hv = synth_point(h_coeffs, period, t[j] - dtau * static_cast<double>(i));
      acc += lcomplex(f_tau[i].real(), f_tau[i].imag()) * lcomplex(hv.real(), hv.imag());
    }
    acc *= static_cast<ldouble>(dtau);
    out[j] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  return out;
}

}  // namespace ffskit::reference
