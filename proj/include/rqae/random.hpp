#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace rqae {

// Deterministic uniform stream with counter-based splitting: a sweep hands
// run i an independent substream, so execution order cannot change results.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(mix(seed)) {}

  static RandomStream substream(std::uint64_t master_seed, std::uint64_t index) {
    return RandomStream(master_seed + (index + 1) * 0x9e3779b97f4a7c15ull);
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits; avoids the implementation-defined
  // std::uniform_real_distribution so streams are bit-stable everywhere.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // Bernoulli counting. Consumes exactly `shots` draws for every p, which
  // keeps two samplers with equal p and equal seed draw-for-draw identical.
  std::int64_t binomial(std::int64_t shots, double p) {
    if (shots < 0) throw std::invalid_argument("binomial: negative shot count");
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < shots; ++i) {
      if (next_unit() < p) ++hits;
    }
    return hits;
  }

 private:
  // splitmix64 finalizer; decorrelates adjacent raw seeds.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace rqae
