// Benchmark and demo harness: reproduces the library's complexity trends at
// desk scale, runs the direct-summation verification suites, and demonstrates
// angular-spectrum propagation. Benchmarks emit CSV with the schema
//   method,dim,N_FS,N_s,M,region_fraction,reps,seconds_mean,seconds_std
// Exit codes: 0 success, 1 failure (verification or cross-check), 2 usage.

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ffskit/ffskit.hpp"

namespace {

using ffskit::cdouble;
using ffskit::Tensor;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::size_t verify_threads() {
  if (const char* env = std::getenv("FFSKIT_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
    std::cerr << "warning: ignoring invalid FFSKIT_THREADS value '" << env << "'\n";
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<cdouble> random_coeffs(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cdouble> out(n);
  for (cdouble& v : out) v = {dist(rng), dist(rng)};
  return out;
}

Tensor random_tensor(std::mt19937_64& rng, std::vector<std::size_t> shape) {
  Tensor t(std::move(shape));
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = {dist(rng), dist(rng)};
  return t;
}

double max_abs(std::span<const cdouble> v) {
  double m = 0.0;
  for (const cdouble& x : v) m = std::max(m, std::abs(x));
  return m;
}

double rel_error(std::span<const cdouble> got, std::span<const cdouble> want) {
  double err = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i) err = std::max(err, std::abs(got[i] - want[i]));
  const double scale = max_abs(want);
  return scale > 0.0 ? err / scale : err;
}

int emit_csv(const std::vector<ffskit::BenchRecord>& records, const std::string& out_path) {
  if (out_path.empty()) {
    ffskit::write_csv(std::cout, records);
    return kExitOk;
  }
  std::ofstream os(out_path);
  if (!os) {
    std::cerr << "error: cannot open output file " << out_path << "\n";
    return kExitFailure;
  }
  ffskit::write_csv(os, records);
  return kExitOk;
}

// --------------------------------------------------------------------------
// bench-interp-1d / bench-interp-2d

std::size_t matched_target_resolution(std::size_t m, double fraction) {
  // Full-period point count at the region's step (b - a) / (M - 1).
  return static_cast<std::size_t>(std::ceil(static_cast<double>(m - 1) / fraction));
}

int run_bench_interp_1d(std::size_t n_fs, std::size_t n_s, const std::vector<double>& fractions,
                        const std::vector<std::size_t>& m_values, std::size_t reps,
                        std::uint64_t seed, const std::string& out_path) {
  std::cerr << "bench-interp-1d seed=" << seed << "\n";
  std::mt19937_64 rng(seed);
  const double period = 1.0;
  ffskit::PeriodicGrid grid({ffskit::DimSpec{period, 0.0, n_fs, n_s}});

  // Bandlimited signal sampled on the grid, analyzed back to coefficients.
  const ffskit::FsCoefficients synth =
      ffskit::FsCoefficients::from_trimmed(grid, Tensor::line(random_coeffs(rng, n_fs)));
  const ffskit::SampleTensor samples = ffskit::iffs(synth);
  const std::vector<cdouble> coeffs = ffskit::ffs(samples, grid).trimmed().values();

  std::vector<ffskit::BenchRecord> records;
  for (const double fraction : fractions) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
      std::cerr << "error: region fraction must be in (0, 1]\n";
      return kExitUsage;
    }
    for (const std::size_t m : m_values) {
      const std::size_t n_target = matched_target_resolution(m, fraction);
      if (n_target < n_fs) {
        std::cerr << "error: fraction " << fraction << " with M=" << m
                  << " implies a full-period resolution below N_FS; need (M-1)/fraction >= N_FS\n";
        return kExitUsage;
      }

      // Cross-check: evaluate the CZT path on the zero-pad output grid and
      // require pointwise agreement before timing anything.
      const std::vector<double> zp_points =
          ffskit::fs_interp_zero_pad_points(period, 0.0, n_fs, n_target);
      const std::vector<cdouble> zp = ffskit::fs_interp_zero_pad(coeffs, period, 0.0, n_target);
      const std::vector<cdouble> czt_same = ffskit::fs_interp(
          coeffs, period, {zp_points.front(), zp_points.back(), n_target});
      const double err = rel_error(czt_same, zp);
      if (err > 1e-8) {
        std::cerr << "error: cross-check disagreement " << err << " at fraction " << fraction
                  << ", M=" << m << "\n";
        return kExitFailure;
      }

      const ffskit::InterpRequest region{-0.5 * fraction * period, 0.5 * fraction * period, m};
      auto [czt_mean, czt_std] = ffskit::time_reps(reps, [&] {
        volatile double guard = ffskit::fs_interp(coeffs, period, region)[0].real();
        (void)guard;
      });
      auto [zp_mean, zp_std] = ffskit::time_reps(reps, [&] {
        volatile double guard = ffskit::fs_interp_zero_pad(coeffs, period, 0.0, n_target)[0].real();
        (void)guard;
      });
      records.push_back({"czt", 1, {n_fs}, {n_s}, {m}, fraction, reps, czt_mean, czt_std});
      records.push_back(
          {"zero_pad", 1, {n_fs}, {n_s}, {n_target}, fraction, reps, zp_mean, zp_std});
    }
  }
  return emit_csv(records, out_path);
}

int run_bench_interp_2d(std::size_t n_fs, std::size_t n_s, const std::vector<double>& fractions,
                        const std::vector<std::size_t>& m_values, std::size_t reps,
                        std::uint64_t seed, const std::string& out_path) {
  std::cerr << "bench-interp-2d seed=" << seed << "\n";
  std::mt19937_64 rng(seed);
  const double period = 1.0;
  const ffskit::DimSpec dim{period, 0.0, n_fs, n_s};
  ffskit::PeriodicGrid grid({dim, dim});

  const ffskit::FsCoefficients synth =
      ffskit::FsCoefficients::from_trimmed(grid, random_tensor(rng, {n_fs, n_fs}));
  const ffskit::SampleTensor samples = ffskit::iffsn(synth);
  const Tensor coeffs = ffskit::ffsn(samples, grid).trimmed();
  const double periods[2] = {period, period};

  std::vector<ffskit::BenchRecord> records;
  for (const double fraction : fractions) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
      std::cerr << "error: region fraction must be in (0, 1]\n";
      return kExitUsage;
    }
    for (const std::size_t m : m_values) {
      if (m < 2) {
        std::cerr << "error: need at least a 2x2 output region\n";
        return kExitUsage;
      }
      const std::size_t n_target = matched_target_resolution(m, fraction);
      if (n_target < n_fs) {
        std::cerr << "error: fraction " << fraction << " with M=" << m
                  << " implies a full-period resolution below N_FS; need (M-1)/fraction >= N_FS\n";
        return kExitUsage;
      }

      // Cross-check on a trimmed-down variant of the same configuration: the
      // CZT path must match the zero-pad synthesis pointwise on its grid.
      {
        const std::vector<double> zp_points =
            ffskit::fs_interp_zero_pad_points(period, 0.0, n_fs, n_target);
        const ffskit::InterpRequest full{zp_points.front(), zp_points.back(), n_target};
        const ffskit::InterpRequest reqs[2] = {full, full};
        const Tensor czt_same = ffskit::fs_interpn(coeffs, periods, reqs);

        std::size_t n_internal = n_target;
        if ((n_internal - n_fs) % 2 == 1) ++n_internal;
        ffskit::PeriodicGrid zp_grid(
            {ffskit::DimSpec{period, 0.0, n_fs, n_internal}, ffskit::DimSpec{period, 0.0, n_fs, n_internal}});
        const ffskit::SampleTensor zp_full = ffskit::from_ffs_order(
            ffskit::iffsn(ffskit::FsCoefficients::from_trimmed(zp_grid, coeffs)), zp_grid);
        double err = 0.0;
        double scale = 0.0;
        for (std::size_t i = 0; i < n_target; ++i) {
          for (std::size_t j = 0; j < n_target; ++j) {
            const cdouble a = czt_same[i * n_target + j];
            const cdouble b = zp_full.values[i * n_internal + j];
            err = std::max(err, std::abs(a - b));
            scale = std::max(scale, std::abs(b));
          }
        }
        if (err > 1e-8 * scale) {
          std::cerr << "error: 2-D cross-check disagreement " << err / scale << " at fraction "
                    << fraction << ", M=" << m << "\n";
          return kExitFailure;
        }
      }

      const ffskit::InterpRequest region{-0.5 * fraction * period, 0.5 * fraction * period, m};
      const ffskit::InterpRequest reqs[2] = {region, region};
      auto [czt_mean, czt_std] = ffskit::time_reps(reps, [&] {
        volatile double guard = ffskit::fs_interpn(coeffs, periods, reqs)[0].real();
        (void)guard;
      });
      std::size_t n_internal = n_target;
      if ((n_internal - n_fs) % 2 == 1) ++n_internal;
      ffskit::PeriodicGrid zp_grid(
          {ffskit::DimSpec{period, 0.0, n_fs, n_internal}, ffskit::DimSpec{period, 0.0, n_fs, n_internal}});
      auto [zp_mean, zp_std] = ffskit::time_reps(reps, [&] {
        const ffskit::SampleTensor full =
            ffskit::iffsn(ffskit::FsCoefficients::from_trimmed(zp_grid, coeffs));
        volatile double guard = full.values[0].real();
        (void)guard;
      });
      records.push_back(
          {"czt", 2, {n_fs, n_fs}, {n_s, n_s}, {m, m}, fraction, reps, czt_mean, czt_std});
      records.push_back({"zero_pad", 2, {n_fs, n_fs}, {n_s, n_s}, {n_target, n_target}, fraction,
                         reps, zp_mean, zp_std});
    }
  }
  return emit_csv(records, out_path);
}

// --------------------------------------------------------------------------
// bench-convolve-2d

int run_bench_convolve_2d(const std::vector<std::size_t>& sizes, std::size_t reps,
                          std::uint64_t seed, const std::string& out_path) {
  std::cerr << "bench-convolve-2d seed=" << seed << "\n";
  std::mt19937_64 rng(seed);
  std::vector<ffskit::BenchRecord> records;
  for (const std::size_t size : sizes) {
    if (size < 4) {
      std::cerr << "error: convolution sizes below 4 are rejected\n";
      return kExitUsage;
    }
    const double period = 1.0;
    // Center chosen so the timestamps are integer multiples of T/N_s. Inputs
    // are kept in ffs order, where array index equals time index mod N_s;
    // the plain array circular convolution divided by the sample count then
    // equals the coefficient-product convolution exactly.
    const bool odd = size % 2 == 1;
    const double center = odd ? 0.0 : -period / (2.0 * static_cast<double>(size));
    const std::size_t n_fs = odd ? size : size - 1;
    const ffskit::DimSpec dim{period, center, n_fs, size};
    ffskit::PeriodicGrid grid({dim, dim});

    const ffskit::SampleTensor f =
        ffskit::iffsn(ffskit::FsCoefficients::from_trimmed(grid, random_tensor(rng, {n_fs, n_fs})));
    const ffskit::SampleTensor h =
        ffskit::iffsn(ffskit::FsCoefficients::from_trimmed(grid, random_tensor(rng, {n_fs, n_fs})));

    const double inv_count = 1.0 / static_cast<double>(size * size);
    const auto naive = [&] {
      Tensor out = ffskit::reference::direct_circular_conv_2d(f.values, h.values);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] *= inv_count;
      return out;
    };
    const ffskit::ConvolveOptions opts{false, ffskit::ConvolveScale::coefficient_product};

    // Agreement check before timing.
    const Tensor naive_out = naive();
    const ffskit::SampleTensor ffs_out = ffskit::convolve(f, h, grid, opts);
    const double err = rel_error(ffs_out.values.values(), naive_out.values());
    if (err > 1e-8) {
      std::cerr << "error: convolution cross-check disagreement " << err << " at size " << size
                << "\n";
      return kExitFailure;
    }

    auto [ffs_mean, ffs_std] = ffskit::time_reps(reps, [&] {
      volatile double guard = ffskit::convolve(f, h, grid, opts).values[0].real();
      (void)guard;
    });
    auto [naive_mean, naive_std] = ffskit::time_reps(reps, [&] {
      volatile double guard = naive()[0].real();
      (void)guard;
    });
    records.push_back(
        {"ffs", 2, {n_fs, n_fs}, {size, size}, {}, std::nullopt, reps, ffs_mean, ffs_std});
    records.push_back(
        {"naive", 2, {n_fs, n_fs}, {size, size}, {}, std::nullopt, reps, naive_mean, naive_std});
  }
  return emit_csv(records, out_path);
}

// --------------------------------------------------------------------------
// demo-optics

int run_demo_optics(std::size_t n_s, std::size_t n_fs, double wavelength, double distance,
                    double radius, double region_start, double region_stop, std::size_t res,
                    std::size_t tiles, const std::string& out_prefix) {
  ffskit::optics::OpticsSetup setup{n_s, n_fs, 1.0, wavelength, distance};
  if (!(wavelength > 0.0) || distance < 0.0) {
    std::cerr << "error: wavelength must be positive and distance nonnegative\n";
    return kExitUsage;
  }
  if (!(region_start < region_stop) || region_start < -0.5 * setup.period ||
      region_stop > 0.5 * setup.period) {
    std::cerr << "error: output region must lie within one period ["
              << -0.5 * setup.period << ", " << 0.5 * setup.period << "]\n";
    return kExitUsage;
  }
  const ffskit::InterpRequest region{region_start, region_stop, res};

  try {
    const ffskit::SampleTensor aperture = ffskit::optics::circular_aperture(setup, radius);
    const ffskit::optics::PropagationResult result =
        ffskit::optics::propagate(aperture, setup, region, region);

    const double ratio =
        result.energy_source > 0.0 ? result.energy_target / result.energy_source : 0.0;
    std::cout << "spectral energy: source " << result.energy_source << ", target "
              << result.energy_target << " (ratio " << ratio << ")\n";

    if (tiles > 1) {
      const Tensor tiled = ffskit::optics::propagate_tiled(aperture, setup, region, region, tiles);
      const double err = rel_error(tiled.values(), result.field.values());
      std::cout << "tiling consistency (" << tiles << "x" << tiles << "): max relative deviation "
                << err << "\n";
      if (err > 1e-9) {
        std::cerr << "error: tiled output deviates from single-shot interpolation\n";
        return kExitFailure;
      }
    }

    ffskit::optics::write_pgm(out_prefix + ".pgm", result.field);
    ffskit::optics::write_intensity_csv(out_prefix + ".csv", result.field);
    std::cout << "wrote " << out_prefix << ".pgm and " << out_prefix << ".csv\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

// --------------------------------------------------------------------------
// verify

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

template <typename CaseFn>
SuiteResult run_suite(const std::string& name, std::size_t n_cases, std::uint64_t seed,
                      std::size_t threads, CaseFn&& case_fn) {
  SuiteResult result{name, n_cases, 0, {}};
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n_cases) return;
      std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * (i + 1));
      const std::optional<std::string> failure = case_fn(i, rng);
      if (failure) {
        std::scoped_lock lock(mu);
        ++result.failures;
        if (result.first_failure.empty()) {
          result.first_failure = "case " + std::to_string(i) + ": " + *failure;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n_threads = std::min(threads, n_cases);
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return result;
}

int run_verify(const std::string& selector, std::uint64_t seed, std::size_t n_cases,
               bool inject_fault) {
  const std::size_t threads = verify_threads();
  std::cout << "verify seed=" << seed << " cases=" << n_cases << " threads=" << threads << "\n";
  const double fault = inject_fault ? 1e-3 : 0.0;

  const auto pick_odd = [](std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> dist(lo / 2, (hi - 1) / 2);
    return 2 * dist(rng) + 1;
  };

  std::vector<SuiteResult> results;

  if (selector == "all" || selector == "dfs") {
    results.push_back(run_suite("dfs", n_cases, seed, threads,
                                [&](std::size_t, std::mt19937_64& rng) -> std::optional<std::string> {
      std::uniform_real_distribution<double> period_dist(0.5, 3.0);
      std::uniform_real_distribution<double> center_dist(-1.0, 1.0);
      const std::size_t n_fs = pick_odd(rng, 1, 31);
      std::uniform_int_distribution<std::size_t> pad(0, 16);
      const ffskit::DimSpec dim{period_dist(rng), center_dist(rng), n_fs, n_fs + pad(rng)};
      ffskit::PeriodicGrid grid({dim});

      // analysis vs the direct orthogonality solve holds for arbitrary samples
      ffskit::SampleTensor x{Tensor::line(random_coeffs(rng, dim.sample_count)),
                             ffskit::SampleOrder::ffs};
      ffskit::FsCoefficients coeffs = ffskit::ffs(x, grid);
      std::vector<cdouble> got(coeffs.coeffs().values().begin(),
                               coeffs.coeffs().values().begin() + static_cast<std::ptrdiff_t>(n_fs));
      got[0] += fault;
      const std::vector<cdouble> want =
          ffskit::reference::direct_fs_analysis(x.values.values(), dim);
      const double err = rel_error(got, want);
      if (err > 1e-10) {
        return "analysis mismatch " + std::to_string(err) + " (N_FS=" + std::to_string(n_fs) +
               ", N_s=" + std::to_string(dim.sample_count) + ")";
      }
      // the round trip is an identity on bandlimited inputs
      const ffskit::SampleTensor bl = ffskit::iffs(
          ffskit::FsCoefficients::from_trimmed(grid, Tensor::line(random_coeffs(rng, n_fs))));
      const ffskit::SampleTensor back = ffskit::iffs(ffskit::ffs(bl, grid));
      const double rt = rel_error(back.values.values(), bl.values.values());
      if (rt > 1e-12) return "round-trip error " + std::to_string(rt);
      return std::nullopt;
    }));
  }

  if (selector == "all" || selector == "czt") {
    results.push_back(run_suite("czt", n_cases, seed + 1, threads,
                                [&](std::size_t, std::mt19937_64& rng) -> std::optional<std::string> {
      std::uniform_int_distribution<std::size_t> len(1, 64);
      std::uniform_real_distribution<double> angle(0.0, 1.0);
      const std::size_t n = len(rng);
      const std::size_t m = len(rng);
      const ffskit::CztParams params{std::polar(1.0, 2.0 * std::numbers::pi * angle(rng)),
                                     std::polar(1.0, 2.0 * std::numbers::pi * angle(rng)), m};
      const std::vector<cdouble> x = random_coeffs(rng, n);
      std::vector<cdouble> got = ffskit::czt(x, params);
      got[0] += fault;
      const std::vector<cdouble> want = ffskit::reference::direct_czt(x, params);
      const double err = rel_error(got, want);
      if (err > 1e-10) {
        return "czt mismatch " + std::to_string(err) + " (N=" + std::to_string(n) +
               ", M=" + std::to_string(m) + ")";
      }
      return std::nullopt;
    }));
  }

  if (selector == "all" || selector == "interp") {
    results.push_back(run_suite("interp", n_cases, seed + 2, threads,
                                [&](std::size_t, std::mt19937_64& rng) -> std::optional<std::string> {
      std::uniform_real_distribution<double> period_dist(0.5, 2.0);
      std::uniform_int_distribution<std::size_t> m_dist(2, 64);
      const std::size_t n_fs = pick_odd(rng, 1, 31);
      const double period = period_dist(rng);
      std::uniform_real_distribution<double> point(-0.5 * period, 0.5 * period);
      double a = point(rng), b = point(rng);
      if (a > b) std::swap(a, b);
      if (a == b) b = a + 0.1 * period;
      const ffskit::InterpRequest req{a, b, m_dist(rng)};
      const std::vector<cdouble> coeffs = random_coeffs(rng, n_fs);
      std::vector<cdouble> got = ffskit::fs_interp(coeffs, period, req);
      got[0] += fault;
      std::vector<double> points(req.count);
      for (std::size_t i = 0; i < req.count; ++i) {
        points[i] = req.start + (req.stop - req.start) * static_cast<double>(i) /
                                    static_cast<double>(req.count - 1);
      }
      const std::vector<cdouble> want = ffskit::reference::synth_points(coeffs, period, points);
      const double err = rel_error(got, want);
      if (err > 1e-10) {
        return "interp mismatch " + std::to_string(err) + " (N_FS=" + std::to_string(n_fs) +
               ", M=" + std::to_string(req.count) + ")";
      }
      return std::nullopt;
    }));
  }

  if (selector == "all" || selector == "convolve") {
    results.push_back(run_suite("convolve", std::max<std::size_t>(1, n_cases / 4), seed + 3,
                                threads,
                                [&](std::size_t, std::mt19937_64& rng) -> std::optional<std::string> {
      std::uniform_real_distribution<double> period_dist(0.5, 2.0);
      const std::size_t n_fs = pick_odd(rng, 1, 15);
      std::uniform_int_distribution<std::size_t> pad(0, 8);
      const ffskit::DimSpec dim{period_dist(rng), 0.0, n_fs, n_fs + pad(rng)};
      ffskit::PeriodicGrid grid({dim});

      const std::vector<cdouble> f_coeffs = random_coeffs(rng, n_fs);
      const std::vector<cdouble> h_coeffs = random_coeffs(rng, n_fs);
      const ffskit::SampleTensor f = ffskit::from_ffs_order(
          ffskit::iffs(ffskit::FsCoefficients::from_trimmed(grid, Tensor::line(f_coeffs))), grid);
      const ffskit::SampleTensor h = ffskit::from_ffs_order(
          ffskit::iffs(ffskit::FsCoefficients::from_trimmed(grid, Tensor::line(h_coeffs))), grid);

      ffskit::SampleTensor got = ffskit::convolve(
          f, h, grid, {true, ffskit::ConvolveScale::integral});
      got.values[0] += fault;
      const ffskit::SamplePoints pts = ffskit::sample_points(dim);
      std::vector<double> natural(dim.sample_count);
      for (std::size_t i = 0; i < natural.size(); ++i) {
        natural[i] = pts.timestamps[pts.natural_to_ffs[i]];
      }
      const std::vector<cdouble> want = ffskit::reference::quadrature_convolution(
          f_coeffs, h_coeffs, dim.period, natural, 4096);
      const double err = rel_error(got.values.values(), want);
      if (err > 1e-6) {
        return "convolution mismatch " + std::to_string(err) + " (N_FS=" + std::to_string(n_fs) +
               ", N_s=" + std::to_string(dim.sample_count) + ")";
      }
      return std::nullopt;
    }));
  }

  if (results.empty()) {
    std::cerr << "error: unknown suite selector '" << selector
              << "' (expected all|dfs|czt|interp|convolve)\n";
    return kExitUsage;
  }

  bool ok = true;
  for (const SuiteResult& r : results) {
    const bool pass = r.failures == 0;
    ok = ok && pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.cases << " cases";
    if (!pass) std::cout << ", " << r.failures << " failures; first: " << r.first_failure;
    std::cout << ")\n";
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier series toolkit benchmarks, demos and verification"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string out_path;
  std::size_t reps = 10;

  // bench-interp-1d
  auto* interp1d = app.add_subcommand("bench-interp-1d",
                                      "Time CZT-based zoom interpolation against the zero-pad "
                                      "baseline at matched resolution (1-D)");
  std::size_t i1_n_fs = 127, i1_n_s = 128;
  std::vector<double> i1_fractions{0.01, 0.02, 0.05, 0.1, 0.25, 0.5, 1.0};
  std::vector<std::size_t> i1_m{512};
  interp1d->add_option("--n-fs", i1_n_fs, "Bandwidth N_FS (odd)");
  interp1d->add_option("--n-s", i1_n_s, "Sample count N_s");
  interp1d->add_option("--fractions", i1_fractions, "Region fractions of the period")->delimiter(',');
  interp1d->add_option("--m", i1_m, "Output point counts")->delimiter(',');
  interp1d->add_option("--reps", reps, "Repetitions per measurement (>= 3)");
  interp1d->add_option("--seed", seed, "RNG seed");
  interp1d->add_option("--out", out_path, "CSV output path (default stdout)");

  // bench-interp-2d
  auto* interp2d = app.add_subcommand("bench-interp-2d",
                                      "Time CZT-based zoom interpolation against the zero-pad "
                                      "baseline at matched resolution (2-D)");
  std::size_t i2_n_fs = 255, i2_n_s = 256;
  std::vector<double> i2_fractions{0.02, 0.05, 0.1, 0.2};
  std::vector<std::size_t> i2_m{64};
  interp2d->add_option("--n-fs", i2_n_fs, "Bandwidth N_FS per axis (odd)");
  interp2d->add_option("--n-s", i2_n_s, "Sample count N_s per axis");
  interp2d->add_option("--fractions", i2_fractions, "Region fractions of the period")->delimiter(',');
  interp2d->add_option("--m", i2_m, "Output point counts per axis")->delimiter(',');
  interp2d->add_option("--reps", reps, "Repetitions per measurement (>= 3)");
  interp2d->add_option("--seed", seed, "RNG seed");
  interp2d->add_option("--out", out_path, "CSV output path (default stdout)");

  // bench-convolve-2d
  auto* conv2d = app.add_subcommand("bench-convolve-2d",
                                    "Time coefficient-product circular convolution against the "
                                    "direct spatial convolution");
  std::vector<std::size_t> c_sizes{16, 32, 64, 128};
  conv2d->add_option("--n-s", c_sizes, "Sample counts per axis (>= 4)")->delimiter(',');
  conv2d->add_option("--reps", reps, "Repetitions per measurement (>= 3)");
  conv2d->add_option("--seed", seed, "RNG seed");
  conv2d->add_option("--out", out_path, "CSV output path (default stdout)");

  // demo-optics
  auto* optics = app.add_subcommand(
      "demo-optics", "Angular-spectrum propagation of a circular aperture with zoom output");
  std::size_t o_n_s = 64, o_n_fs = 31, o_res = 64, o_tiles = 1;
  double o_wavelength = 0.02, o_distance = 0.5, o_radius = 0.05;
  std::vector<double> o_region{-0.05, 0.05};
  std::string o_out = "optics";
  optics->add_option("--n-s", o_n_s, "Source plane samples per axis");
  optics->add_option("--n-fs", o_n_fs, "Bandwidth per axis (odd)");
  optics->add_option("--wavelength", o_wavelength, "Wavelength (period units)");
  optics->add_option("--distance", o_distance, "Plane separation z (period units)");
  optics->add_option("--radius", o_radius, "Aperture radius (period units)");
  optics->add_option("--region", o_region, "Output region [start, stop] per axis")
      ->expected(2)
      ->delimiter(',');
  optics->add_option("--res", o_res, "Output resolution per axis (>= 2)");
  optics->add_option("--tiles", o_tiles, "Tile grid per axis (1 = single shot)");
  optics->add_option("--out", o_out, "Output file prefix");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Run the direct-summation verification suites over randomized cases");
  std::string v_selector = "all";
  std::size_t v_cases = 40;
  bool v_inject = false;
  verify->add_option("suite", v_selector, "Suite selector: all|dfs|czt|interp|convolve");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--cases", v_cases, "Randomized cases per suite");
  verify->add_flag("--inject-fault", v_inject,
                   "Perturb one result per suite to confirm the checks can fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*interp1d) {
      if (reps < 3 || i1_n_fs % 2 == 0 || i1_n_s < i1_n_fs) {
        std::cerr << "error: need reps >= 3, odd N_FS and N_s >= N_FS\n";
        return kExitUsage;
      }
      return run_bench_interp_1d(i1_n_fs, i1_n_s, i1_fractions, i1_m, reps, seed, out_path);
    }
    if (*interp2d) {
      if (reps < 3 || i2_n_fs % 2 == 0 || i2_n_s < i2_n_fs) {
        std::cerr << "error: need reps >= 3, odd N_FS and N_s >= N_FS\n";
        return kExitUsage;
      }
      return run_bench_interp_2d(i2_n_fs, i2_n_s, i2_fractions, i2_m, reps, seed, out_path);
    }
    if (*conv2d) {
      if (reps < 3) {
        std::cerr << "error: need reps >= 3\n";
        return kExitUsage;
      }
      return run_bench_convolve_2d(c_sizes, reps, seed, out_path);
    }
    if (*optics) {
      if (o_res < 2 || o_n_fs % 2 == 0 || o_n_s < o_n_fs) {
        std::cerr << "error: need res >= 2, odd N_FS and N_s >= N_FS\n";
        return kExitUsage;
      }
      return run_demo_optics(o_n_s, o_n_fs, o_wavelength, o_distance, o_radius, o_region[0],
                             o_region[1], o_res, o_tiles, o_out);
    }
    if (*verify) {
      return run_verify(v_selector, seed, v_cases, v_inject);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
