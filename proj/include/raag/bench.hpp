#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "raag/raag.hpp"

namespace raag {

struct BenchRow {
  std::size_t requested_length = 0;
  std::size_t length = 0;           // actual length of the sampled word
  std::vector<double> seconds;      // one per timed repetition
  double mean_seconds = 0.0;
};

/// For each length, samples one trivial word (seed derived from `seed` and
/// the row index), runs is_trivial once as a warm-up, then times
/// `repetitions` calls with a monotonic clock. Lengths must be ascending,
/// even, at least 3 of them, and repetitions > 0 (DomainError otherwise).
std::vector<BenchRow> bench_word_problem(const Raag& group, std::span<const std::size_t> lengths,
                                         std::size_t repetitions, std::uint64_t seed);

/// Least-squares slope of log(mean_seconds) against log(length).
double loglog_slope(std::span<const BenchRow> rows);

}  // namespace raag
