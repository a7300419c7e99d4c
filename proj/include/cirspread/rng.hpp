#pragma once

#include <cstdint>

namespace cirspread {

// SplitMix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based stream: draw k of stream s under seed m is
// mix64(key(m,s) + k*GAMMA), so a stream's output depends only on
// (seed, stream, draw index) — never on which worker consumes it.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(mix64(seed) ^ stream)), counter_(0) {}

  std::uint64_t next_u64() {
    counter_ += 0x9E3779B97F4A7C15ULL;
    return mix64(key_ + counter_);
  }

  // Uniform on the open interval (0,1).
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via inverse CDF (one uniform per draw).
  double next_normal();

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

// Double-precision inverse of the standard normal CDF (Acklam's rational
// approximation polished with one Halley step).
double inverse_normal_cdf(double p);

// Marsaglia-Tsang for shape >= 1, boosting trick below 1. Unit scale.
double sample_gamma(CounterRng& rng, double shape);

// Exact Poisson: inversion for small means, Hormann's PTRS rejection
// otherwise. mean must be < ~2^53 for the count to stay exact.
std::uint64_t sample_poisson(CounterRng& rng, double mean);

}  // namespace cirspread
