#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ffskit {

/// One timing measurement row of the benchmark CSV output.
struct BenchRecord {
  std::string method;
  std::size_t dim = 1;
  std::vector<std::size_t> bandwidth;     // N_FS per axis
  std::vector<std::size_t> sample_count;  // N_s per axis
  std::vector<std::size_t> out_count;     // M per axis; empty when not applicable
  std::optional<double> region_fraction;
  std::size_t repetitions = 0;  // >= 3
  double seconds_mean = 0.0;
  double seconds_std = 0.0;
};

inline void validate(const BenchRecord& rec) {
  if (rec.repetitions < 3) throw std::invalid_argument("BenchRecord: repetitions must be >= 3");
  if (!(rec.seconds_mean > 0.0)) throw std::invalid_argument("BenchRecord: seconds_mean must be > 0");
}

namespace detail {

inline std::string size_field(const std::vector<std::size_t>& sizes) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i > 0) os << 'x';
    os << sizes[i];
  }
  return os.str();
}

}  // namespace detail

inline constexpr const char* kBenchCsvHeader =
    "method,dim,N_FS,N_s,M,region_fraction,reps,seconds_mean,seconds_std";

inline void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << kBenchCsvHeader << '\n';
  for (const BenchRecord& rec : records) {
    validate(rec);
    os << rec.method << ',' << rec.dim << ',' << detail::size_field(rec.bandwidth) << ','
       << detail::size_field(rec.sample_count) << ',' << detail::size_field(rec.out_count) << ',';
    if (rec.region_fraction) os << *rec.region_fraction;
    os << ',' << rec.repetitions << ',' << rec.seconds_mean << ',' << rec.seconds_std << '\n';
  }
}

/// Times `body` over `reps` repetitions on a monotonic clock, discarding one
/// warm-up run. Returns (mean, sample standard deviation) in seconds.
template <typename F>
std::pair<double, double> time_reps(std::size_t reps, F&& body) {
  if (reps < 3) throw std::invalid_argument("time_reps: repetitions must be >= 3");
  using clock = std::chrono::steady_clock;
  body();  // warm-up, not recorded
  std::vector<double> seconds(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto t0 = clock::now();
    body();
    const auto t1 = clock::now();
    seconds[r] = std::chrono::duration<double>(t1 - t0).count();
  }
  double mean = 0.0;
  for (double s : seconds) mean += s;
  mean /= static_cast<double>(reps);
  double var = 0.0;
  for (double s : seconds) var += (s - mean) * (s - mean);
  var /= static_cast<double>(reps - 1);
  return {mean, std::sqrt(var)};
}

}  // namespace ffskit
