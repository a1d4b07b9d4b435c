#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace raag {

// Every randomized operation takes an explicit seed and builds its own
// engine; nothing here touches a global or entropy-backed source.
using Rng = std::mt19937_64;

// SplitMix64 finalizer; used to derive independent sub-streams from one seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Uniform integer in [0, bound). bound must be positive. Rejection sampling
// keeps results identical across standard library implementations.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

// True with probability p; p <= 0 never, p >= 1 always.
bool bernoulli(Rng& rng, double p);

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

}  // namespace raag
