#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffskit/ffs.hpp"
#include "ffskit/grid.hpp"
#include "ffskit/interp.hpp"
#include "ffskit/tensor.hpp"

// Free-space propagation between two parallel planes with the angular
// spectrum method: the source plane is analyzed into Fourier series
// coefficients, multiplied by the propagation transfer function, and the
// target plane is interpolated on the requested region at the requested
// resolution.
namespace ffskit::optics {

/// Square source plane and propagation settings. The plane spans one period
/// per axis, centered at the origin; spatial frequencies are k / period.
struct OpticsSetup {
  std::size_t sample_count = 64;  ///< N_s per axis of the padded source plane
  std::size_t bandwidth = 31;     ///< N_FS per axis
  double period = 1.0;            ///< plane extent per axis
  double wavelength = 0.02;       ///< same length units as period
  double distance = 0.5;          ///< plane separation z
};

inline PeriodicGrid plane_grid(const OpticsSetup& s) {
  const DimSpec dim{s.period, 0.0, s.bandwidth, s.sample_count};
  return PeriodicGrid({dim, dim});
}

/// Binary circular aperture of the given radius, sampled on the plane grid in
/// natural order.
inline SampleTensor circular_aperture(const OpticsSetup& s, double radius) {
  const PeriodicGrid grid = plane_grid(s);
  const SamplePoints pts = sample_points(grid.dims[0]);
  std::vector<double> natural(s.sample_count);
  for (std::size_t i = 0; i < s.sample_count; ++i) {
    natural[i] = pts.timestamps[pts.natural_to_ffs[i]];
  }
  Tensor values({s.sample_count, s.sample_count});
  for (std::size_t i = 0; i < s.sample_count; ++i) {
    for (std::size_t j = 0; j < s.sample_count; ++j) {
      const double r2 = natural[i] * natural[i] + natural[j] * natural[j];
      values[i * s.sample_count + j] = r2 <= radius * radius ? 1.0 : 0.0;
    }
  }
  return {std::move(values), SampleOrder::natural};
}

/// Angular spectrum transfer function on the coefficient grid:
/// H(f_x, f_y) = exp(j 2 pi z sqrt(1/lambda^2 - f_x^2 - f_y^2)) for
/// propagating components, zero for evanescent ones (1/lambda^2 < f^2).
/// Unit modulus wherever nonzero.
inline Tensor angular_spectrum_transfer(const OpticsSetup& s) {
  const long long n_half = static_cast<long long>((s.bandwidth - 1) / 2);
  const double inv_l2 = 1.0 / (s.wavelength * s.wavelength);
  Tensor h({s.bandwidth, s.bandwidth});
  for (long long kx = -n_half; kx <= n_half; ++kx) {
    for (long long ky = -n_half; ky <= n_half; ++ky) {
      const double fx = static_cast<double>(kx) / s.period;
      const double fy = static_cast<double>(ky) / s.period;
      const double arg = inv_l2 - fx * fx - fy * fy;
      const std::size_t idx = static_cast<std::size_t>(kx + n_half) * s.bandwidth +
                              static_cast<std::size_t>(ky + n_half);
      h[idx] = arg < 0.0 ? cdouble(0.0)
                         : std::polar(1.0, 2.0 * std::numbers::pi * s.distance * std::sqrt(arg));
    }
  }
  return h;
}

struct PropagationResult {
  Tensor field;            ///< complex field on the requested output grid
  double energy_source;    ///< sum |F_k|^2 over the source coefficients
  double energy_target;    ///< sum |G_k|^2 after the transfer multiply
};

namespace detail {

inline double coeff_energy(const Tensor& t) {
  double e = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) e += std::norm(t[i]);
  return e;
}

inline Tensor target_coeffs(const SampleTensor& source_natural, const OpticsSetup& s) {
  const PeriodicGrid grid = plane_grid(s);
  const Tensor f = ffsn(to_ffs_order(source_natural, grid), grid).trimmed();
  const Tensor h = angular_spectrum_transfer(s);
  Tensor g = f;
  for (std::size_t i = 0; i < g.size(); ++i) g[i] *= h[i];
  return g;
}

}  // namespace detail

/// Propagates a natural-order source plane and interpolates the target field
/// on [region_x] x [region_y].
inline PropagationResult propagate(const SampleTensor& source_natural, const OpticsSetup& s,
                                   const InterpRequest& region_x, const InterpRequest& region_y) {
  const PeriodicGrid grid = plane_grid(s);
  const Tensor f = ffsn(to_ffs_order(source_natural, grid), grid).trimmed();
  const Tensor h = angular_spectrum_transfer(s);
  Tensor g = f;
  for (std::size_t i = 0; i < g.size(); ++i) g[i] *= h[i];

  const double periods[2] = {s.period, s.period};
  const InterpRequest reqs[2] = {region_x, region_y};
  PropagationResult out{fs_interpn(g, periods, reqs), detail::coeff_energy(f),
                        detail::coeff_energy(g)};
  return out;
}

/// Same output region computed as an n x n grid of independent tiles; each
/// tile keeps the single-shot step, so the assembled field must match
/// propagate() on the union grid. Requires counts divisible by n_tiles.
inline Tensor propagate_tiled(const SampleTensor& source_natural, const OpticsSetup& s,
                              const InterpRequest& region_x, const InterpRequest& region_y,
                              std::size_t n_tiles) {
  if (n_tiles == 0 || region_x.count % n_tiles != 0 || region_y.count % n_tiles != 0) {
    throw std::invalid_argument("propagate_tiled: counts must be divisible by the tile count");
  }
  const Tensor g = detail::target_coeffs(source_natural, s);
  const double periods[2] = {s.period, s.period};

  const auto tile_request = [n_tiles](const InterpRequest& r, std::size_t tile) {
    const double step = (r.stop - r.start) / static_cast<double>(r.count - 1);
    const std::size_t per_tile = r.count / n_tiles;
    const double a = r.start + step * static_cast<double>(tile * per_tile);
    const double b = a + step * static_cast<double>(per_tile - 1);
    return InterpRequest{a, b, per_tile};
  };

  Tensor out({region_x.count, region_y.count});
  for (std::size_t tx = 0; tx < n_tiles; ++tx) {
    for (std::size_t ty = 0; ty < n_tiles; ++ty) {
      const InterpRequest reqs[2] = {tile_request(region_x, tx), tile_request(region_y, ty)};
      const Tensor tile = fs_interpn(g, periods, reqs);
      const std::size_t row0 = tx * (region_x.count / n_tiles);
      const std::size_t col0 = ty * (region_y.count / n_tiles);
      for (std::size_t i = 0; i < tile.extent(0); ++i) {
        for (std::size_t j = 0; j < tile.extent(1); ++j) {
          out[(row0 + i) * region_y.count + (col0 + j)] = tile[i * tile.extent(1) + j];
        }
      }
    }
  }
  return out;
}

/// Intensity |field|^2 of a complex field tensor.
inline std::vector<double> intensity(const Tensor& field) {
  std::vector<double> out(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) out[i] = std::norm(field[i]);
  return out;
}

/// Writes a rank-2 intensity map as plain PGM (P2, 8 bit, row-major; first
/// tensor axis = image rows), normalized to the maximum value.
inline void write_pgm(const std::string& path, const Tensor& field) {
  if (field.rank() != 2) throw std::invalid_argument("write_pgm: rank-2 tensor expected");
  const std::vector<double> values = intensity(field);
  const double peak = *std::max_element(values.begin(), values.end());
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_pgm: cannot open " + path);
  os << "P2\n" << field.extent(1) << ' ' << field.extent(0) << "\n255\n";
  for (std::size_t i = 0; i < field.extent(0); ++i) {
    for (std::size_t j = 0; j < field.extent(1); ++j) {
      const double v = peak > 0.0 ? values[i * field.extent(1) + j] / peak : 0.0;
      os << static_cast<int>(std::lround(255.0 * v));
      os << (j + 1 < field.extent(1) ? ' ' : '\n');
    }
  }
}

/// Writes raw intensity values as CSV, one image row per line.
inline void write_intensity_csv(const std::string& path, const Tensor& field) {
  if (field.rank() != 2) throw std::invalid_argument("write_intensity_csv: rank-2 tensor expected");
  const std::vector<double> values = intensity(field);
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_intensity_csv: cannot open " + path);
  os.precision(17);
  for (std::size_t i = 0; i < field.extent(0); ++i) {
    for (std::size_t j = 0; j < field.extent(1); ++j) {
      os << values[i * field.extent(1) + j];
      os << (j + 1 < field.extent(1) ? ',' : '\n');
    }
  }
}

}  // namespace ffskit::optics
