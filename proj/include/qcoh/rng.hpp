#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qcoh {

/// Seed for every sampling entry point. Identical seeds reproduce identical
/// sample streams.
struct RngSeed {
  std::uint64_t value;
};

/// Deterministic substream generator. Sample index k of an ensemble draws
/// from SplitRng(seed, k), so the output of a batch never depends on how the
/// indices are partitioned across workers.
///
/// Stream-split rule: the engine is a std::mt19937_64 seeded with
/// mix(mix(seed) ^ (stream + 1) * 0x9E3779B97F4A7C15), where mix is the
/// SplitMix64 finalizer. Uniform and normal variates are derived from the
/// raw 64-bit engine output directly (no std::*_distribution), so a given
/// (seed, stream, call sequence) always yields the same values.
class SplitRng {
 public:
  explicit SplitRng(RngSeed seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal (one Box-Muller pair per call, second value discarded).
  double normal();
  /// Standard complex Gaussian: N(0,1) real and imaginary parts.
  std::complex<double> complex_normal();

  static std::uint64_t substream_seed(RngSeed seed, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qcoh
