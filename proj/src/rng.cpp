#include "qcoh/rng.hpp"

#include <cmath>
#include <numbers>

namespace qcoh {

namespace {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitRng::substream_seed(RngSeed seed, std::uint64_t stream) {
  return mix64(mix64(seed.value) ^ ((stream + 1) * 0x9E3779B97F4A7C15ull));
}

SplitRng::SplitRng(RngSeed seed, std::uint64_t stream)
    : engine_(substream_seed(seed, stream)) {}

double SplitRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SplitRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double SplitRng::normal() { return complex_normal().real(); }

std::complex<double> SplitRng::complex_normal() {
  // Box-Muller; 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  return {mag * std::cos(ang), mag * std::sin(ang)};
}

}  // namespace qcoh
