#pragma once

#include "qcoh/correlations.hpp"
#include "qcoh/states.hpp"

namespace qcoh {

/// Eigenvalue pair of the pump polarization matrix, fixed by its degree of
/// polarization: eps1 = (1+P)/2 >= eps2 = (1-P)/2, eps1 + eps2 = 1.
struct PumpSpectrum {
  double eps1;
  double eps2;
  double p2_pump;
};

PumpSpectrum pump_spectrum(double p2_pump);

/// Diagonal pump state diag(eps1, eps2).
SingleQubitState pump_state(const PumpSpectrum& s);

/// Ceiling on the intrinsic degree of coherence reachable from a pump of
/// degree of polarization p: sqrt((1 + 2 p^2) / 3).
double p2x2_bound(double p2_pump);

/// rho_si = V rho_pump V^dag with V a random 4x2 isometry (orthonormalized
/// complex Gaussian columns, deterministic per seed). The output spectrum is
/// the pump spectrum padded with zeros, so the coherence ceiling is met with
/// equality.
TwoQubitState unitary_generation(const SingleQubitState& pump, RngSeed seed);

/// (1-q) rho + q I/4, q in [0, 1]. Strictly lowers purity unless the input
/// is already maximally mixed or q = 0.
TwoQubitState depolarize(const TwoQubitState& rho, double q);

/// Purity comparison Tr(rho_si^2) <= Tr(rho_pump^2) - the consequence of
/// spectral majorization that the coherence-transfer bound rests on.
BoundReport majorization_check(const SingleQubitState& pump,
                               const TwoQubitState& si);

/// The two partial-sum dominance conditions eps1 >= l1 and
/// eps1 + eps2 >= l1 + l2 (spectra sorted descending), checked as stricter
/// companions of the purity comparison.
std::array<BoundReport, 2> spectrum_dominance(const SingleQubitState& pump,
                                              const TwoQubitState& si);

enum class ChannelKind { Unitary, Depolarizing };

/// Summary of one generation experiment; serialized by the CLI.
struct PdcReport {
  double p2_pump;
  double bound;
  double p2x2_si;
  double slack;  // bound - p2x2_si
  bool majorization_ok;
};

/// Builds the pump from its degree of polarization, runs the generation
/// channel (depolarization applied after an isometric generation step), and
/// audits the bound. q is ignored for the unitary channel.
PdcReport run_pdc(double p2_pump, ChannelKind channel, double q, RngSeed seed);

}  // namespace qcoh
