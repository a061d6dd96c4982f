#pragma once

// Seeded random lattice pairs. All randomness comes from one std::mt19937_64
// seeded with InstanceSpec::seed; bounded draws use rejection sampling on the
// raw 64-bit output, so the stream is fixed by the standard.

#include <cstdint>
#include <random>

#include "hivekit/lattice.hpp"

namespace hivekit {

struct InstanceSpec {
  std::size_t n = 3;
  RingConfig ring = RingConfig::padic(2);
  std::int64_t lo = 0, hi = 2;  // diagonal exponent range
  std::uint64_t seed = 0;
  std::size_t mix_steps = 6;    // elementary operations per unimodular factor
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound)
  std::int64_t between(std::int64_t lo, std::int64_t hi);  // inclusive

 private:
  std::mt19937_64 g_;
};

// Product of `steps` elementary unimodular matrices: row additions with a
// multiplier u * t^k (k in [0, max_exp], u a small unit) and row swaps.
Matrix random_unimodular(const RingConfig& cfg, std::size_t n, std::size_t steps, std::int64_t max_exp, Rng& rng);

struct RandomPair {
  Lattice N, L, M;  // L = N * M
  Partition d1, d2;  // diagonal exponents drawn for N and M
};

RandomPair random_pair(const InstanceSpec& spec);

}  // namespace hivekit
