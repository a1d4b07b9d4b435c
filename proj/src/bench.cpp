#include "raag/bench.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "raag/errors.hpp"
#include "raag/random.hpp"

namespace raag {

std::vector<BenchRow> bench_word_problem(const Raag& group, std::span<const std::size_t> lengths,
                                         std::size_t repetitions, std::uint64_t seed) {
  if (lengths.size() < 3) throw DomainError("need at least 3 lengths for a slope fit");
  if (repetitions == 0) throw DomainError("repetitions must be positive");
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (lengths[i] == 0 || lengths[i] % 2 != 0) throw DomainError("lengths must be even and positive");
    if (i > 0 && lengths[i] <= lengths[i - 1]) throw DomainError("lengths must be strictly ascending");
  }
  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const auto w = sample_trivial_word(group, lengths[i], derive_seed(seed, i));
    BenchRow row;
    row.requested_length = lengths[i];
    row.length = w.letters.size();
    if (!is_trivial(group, w)) throw std::logic_error("sampled word is not trivial");
    for (std::size_t r = 0; r < repetitions; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const bool trivial = is_trivial(group, w);
      const auto stop = std::chrono::steady_clock::now();
      if (!trivial) throw std::logic_error("solver disagreed with itself");
      row.seconds.push_back(std::chrono::duration<double>(stop - start).count());
    }
    row.mean_seconds = std::accumulate(row.seconds.begin(), row.seconds.end(), 0.0) /
                       static_cast<double>(row.seconds.size());
    rows.push_back(std::move(row));
  }
  return rows;
}

double loglog_slope(std::span<const BenchRow> rows) {
  if (rows.size() < 2) throw DomainError("need at least 2 points for a slope");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    if (r.length == 0 || r.mean_seconds <= 0) throw DomainError("cannot take the log of a zero measurement");
    const double x = std::log(static_cast<double>(r.length));
    const double y = std::log(r.mean_seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(rows.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0) throw DomainError("lengths must differ for a slope fit");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace raag
