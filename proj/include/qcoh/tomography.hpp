#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "qcoh/coherence.hpp"
#include "qcoh/states.hpp"

namespace qcoh {

/// Analyzer settings for one arm pair: rotation angles and retardation
/// phases, all in radians. The standard set uses only 0, pi/4, pi/2.
struct MeasurementSetting {
  double theta_s;
  double theta_i;
  double delta_s;
  double delta_i;
};

/// The 16 coincidence probabilities M1..M16 in standard-settings order.
/// Shot-based estimates carry their count and may exceed 1 slightly.
struct CoincidenceSet {
  std::array<double, 16> m{};
  std::optional<std::int64_t> shots;
};

/// Single global factor applied to the raw measurement combinations: each
/// combination evaluates to (sqrt(6)/4) r_j uniformly across the 15
/// channels, so multiplying by 4/sqrt(6) recovers the decomposition
/// convention r_j = sqrt(2/3) Tr(rho Lambda_j) exactly.
inline const double kStokesCalibration = 4.0 / std::sqrt(6.0);

/// Rotation-then-retarder analyzer:
/// [[cos t, e^{i d} sin t], [-sin t, e^{i d} cos t]].
ComplexMatrix analyzer_unitary(double theta, double delta);

/// <HH| U rho U^dag |HH> with U the signal/idler analyzer product.
double coincidence_probability(const TwoQubitState& rho,
                               const MeasurementSetting& s);

/// The 16 standard settings in M1..M16 order.
const std::array<MeasurementSetting, 16>& standard_settings();

/// Exact coincidence probabilities at the standard settings.
CoincidenceSet simulate_measurements(const TwoQubitState& rho);

/// Shot-noise mode: M_i = C_i / N with C_i Poisson of mean N * M_i, each
/// setting drawing from its own substream of the seed.
CoincidenceSet simulate_measurements(const TwoQubitState& rho,
                                     std::int64_t shots, RngSeed seed);

/// Linear inversion of the 16 probabilities into the 15 Stokes components,
/// calibrated by kStokesCalibration. Noisy input can land outside the unit
/// ball; it is returned as-is.
StokesVector invert_stokes(const CoincidenceSet& m);

/// p2x2 from measurements: norm of the inverted Stokes vector.
double reconstruct_p2x2(const CoincidenceSet& m);

struct TomographyReport {
  std::array<MeasurementSetting, 16> settings;
  CoincidenceSet coincidences;
  StokesVector stokes;
  double p2x2;
  bool physical;  // |r| <= 1 within 1e-10
};

TomographyReport run_tomography(const TwoQubitState& rho,
                                std::optional<std::int64_t> shots = {},
                                RngSeed seed = {0});

}  // namespace qcoh
