#include "qcoh/tomography.hpp"

#include <cmath>
#include <numbers>

namespace qcoh {

namespace {

constexpr double kPi = std::numbers::pi;

// Poisson sampler on top of the portable uniform stream. Knuth
// multiplication below mean 10, transformed rejection (PTRS) above; both
// draw nothing but uniforms, so a fixed (seed, stream) reproduces counts.
std::int64_t poisson(SplitRng& rng, double mean) {
  if (mean <= 0.0) return 0;
  if (mean < 10.0) {
    const double limit = std::exp(-mean);
    std::int64_t k = 0;
    double prod = rng.uniform();
    while (prod > limit) {
      ++k;
      prod *= rng.uniform();
    }
    return k;
  }
  const double slam = std::sqrt(mean);
  const double loglam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    const auto k = static_cast<std::int64_t>(
        std::floor((2.0 * a / us + b) * u + mean + 0.43));
    if (us >= 0.07 && v <= vr) return k;
    if (k < 0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
        -mean + k * loglam - std::lgamma(k + 1.0)) {
      return k;
    }
  }
}

}  // namespace

ComplexMatrix analyzer_unitary(double theta, double delta) {
  const cplx e = std::polar(1.0, delta);
  return ComplexMatrix(2, {std::cos(theta), e * std::sin(theta),
                           -std::sin(theta), e * std::cos(theta)});
}

double coincidence_probability(const TwoQubitState& rho,
                               const MeasurementSetting& s) {
  const ComplexMatrix u = kron(analyzer_unitary(s.theta_s, s.delta_s),
                               analyzer_unitary(s.theta_i, s.delta_i));
  // <HH| U rho U^dag |HH> = row 1 of U sandwiched around rho.
  cplx m{};
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k)
      m += u(0, j) * rho.matrix()(j, k) * std::conj(u(0, k));
  return m.real();
}

const std::array<MeasurementSetting, 16>& standard_settings() {
  static const std::array<MeasurementSetting, 16> settings = {{
      {0, 0, 0, 0},
      {0, kPi / 2, 0, 0},
      {kPi / 2, 0, 0, 0},
      {kPi / 2, kPi / 2, 0, 0},
      {0, kPi / 4, 0, 0},
      {0, kPi / 4, 0, kPi / 2},
      {kPi / 2, kPi / 4, 0, 0},
      {kPi / 2, kPi / 4, 0, kPi / 2},
      {kPi / 4, 0, 0, 0},
      {kPi / 4, 0, kPi / 2, 0},
      {kPi / 4, kPi / 2, 0, 0},
      {kPi / 4, kPi / 2, kPi / 2, 0},
      {kPi / 4, kPi / 4, 0, 0},
      {kPi / 4, kPi / 4, kPi / 2, 0},
      {kPi / 4, kPi / 4, 0, kPi / 2},
      {kPi / 4, kPi / 4, kPi / 2, kPi / 2},
  }};
  return settings;
}

CoincidenceSet simulate_measurements(const TwoQubitState& rho) {
  CoincidenceSet out;
  const auto& settings = standard_settings();
  for (int i = 0; i < 16; ++i) {
    out.m[i] = coincidence_probability(rho, settings[i]);
  }
  return out;
}

CoincidenceSet simulate_measurements(const TwoQubitState& rho,
                                     std::int64_t shots, RngSeed seed) {
  if (shots < 1) throw std::invalid_argument("simulate_measurements: shots must be >= 1");
  CoincidenceSet exact = simulate_measurements(rho);
  CoincidenceSet out;
  out.shots = shots;
  for (int i = 0; i < 16; ++i) {
    SplitRng rng(seed, static_cast<std::uint64_t>(i));
    const double mean = std::max(0.0, exact.m[i]) * static_cast<double>(shots);
    out.m[i] = static_cast<double>(poisson(rng, mean)) / static_cast<double>(shots);
  }
  return out;
}

StokesVector invert_stokes(const CoincidenceSet& mset) {
  const auto& m = mset.m;
  // 1-based aliases matching the measurement index.
  const double m1 = m[0], m2 = m[1], m3 = m[2], m4 = m[3], m5 = m[4],
               m6 = m[5], m7 = m[6], m8 = m[7], m9 = m[8], m10 = m[9],
               m11 = m[10], m12 = m[11], m13 = m[12], m14 = m[13],
               m15 = m[14], m16 = m[15];
  const double mid_minus_corner =
      (m5 + m6 + m7 + m8 + m9 + m10 + m11 + m12) - (m1 + m2 + m3 + m4);

  StokesVector raw;
  raw.r[0] = -0.5 * (m1 + m2 - 2.0 * m5);
  raw.r[1] = -0.5 * (m1 + m3 - 2.0 * m9);
  raw.r[2] = 0.5 * (m12 - m11 + m10 - m9 + m8 - m7 + m6 - m5 + 2.0 * (m13 - m16));
  raw.r[3] = 0.5 * (2.0 * (m13 + m16) - mid_minus_corner);
  raw.r[4] = -0.5 * (m2 + m4 - 2.0 * m11);
  raw.r[5] = -0.5 * (m3 + m4 - 2.0 * m7);
  raw.r[6] = 0.5 * (m1 + m2 - 2.0 * m6);
  raw.r[7] = 0.5 * (m1 + m3 - 2.0 * m10);
  raw.r[8] = -0.5 * (2.0 * (m14 + m15) - mid_minus_corner);
  raw.r[9] = -0.5 * (-m12 + m11 - m10 + m9 + m8 - m7 + m6 - m5 + 2.0 * (m14 - m15));
  raw.r[10] = 0.5 * (m2 + m4 - 2.0 * m12);
  raw.r[11] = 0.5 * (m3 + m4 - 2.0 * m8);
  raw.r[12] = 0.5 * (m1 - m2);
  raw.r[13] = (m1 + m2 - 2.0 * m3) / (2.0 * std::sqrt(3.0));
  raw.r[14] = (m1 + m2 + m3 - 3.0 * m4) / (2.0 * std::sqrt(6.0));

  for (double& v : raw.r) v *= kStokesCalibration;
  return raw;
}

double reconstruct_p2x2(const CoincidenceSet& m) {
  return p2x2_from_stokes(invert_stokes(m));
}

TomographyReport run_tomography(const TwoQubitState& rho,
                                std::optional<std::int64_t> shots, RngSeed seed) {
  const CoincidenceSet m = shots ? simulate_measurements(rho, *shots, seed)
                                 : simulate_measurements(rho);
  const StokesVector r = invert_stokes(m);
  const double p = p2x2_from_stokes(r);
  return TomographyReport{standard_settings(), m, r, p, p <= 1.0 + 1e-10};
}

}  // namespace qcoh
