#include "qcoh/pdc.hpp"

#include <cmath>
#include <stdexcept>

#include "qcoh/coherence.hpp"

namespace qcoh {

namespace {

using Col4 = std::array<cplx, 4>;

cplx inner(const Col4& a, const Col4& b) {
  cplx s{};
  for (int i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const Col4& a) { return std::sqrt(inner(a, a).real()); }

}  // namespace

PumpSpectrum pump_spectrum(double p2_pump) {
  if (!(p2_pump >= 0.0 && p2_pump <= 1.0)) {
    throw std::invalid_argument("pump_spectrum: p2_pump must lie in [0, 1]");
  }
  return {(1.0 + p2_pump) / 2.0, (1.0 - p2_pump) / 2.0, p2_pump};
}

SingleQubitState pump_state(const PumpSpectrum& s) {
  return SingleQubitState::validate(ComplexMatrix(2, {s.eps1, 0.0, 0.0, s.eps2}));
}

double p2x2_bound(double p2_pump) {
  if (!(p2_pump >= 0.0 && p2_pump <= 1.0)) {
    throw std::invalid_argument("p2x2_bound: p2_pump must lie in [0, 1]");
  }
  return std::sqrt((1.0 + 2.0 * p2_pump * p2_pump) / 3.0);
}

TwoQubitState unitary_generation(const SingleQubitState& pump, RngSeed seed) {
  SplitRng rng(seed);
  std::array<Col4, 2> v;
  // Orthonormalize two Gaussian 4-vectors into the isometry columns. A
  // redraw on near-degeneracy keeps the loop total; two projection passes
  // push the residual overlap down to rounding, which the downstream
  // equality checks at 1e-12 rely on.
  for (;;) {
    for (auto& col : v) {
      for (auto& entry : col) entry = rng.complex_normal();
    }
    const double n0 = norm(v[0]);
    if (n0 < 1e-6) continue;
    for (auto& entry : v[0]) entry /= n0;
    for (int pass = 0; pass < 2; ++pass) {
      const cplx overlap = inner(v[0], v[1]);
      for (int i = 0; i < 4; ++i) v[1][i] -= overlap * v[0][i];
    }
    const double n1 = norm(v[1]);
    if (n1 < 1e-6) continue;
    for (auto& entry : v[1]) entry /= n1;
    break;
  }

  const ComplexMatrix& p = pump.matrix();
  ComplexMatrix out(4);
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      cplx s{};
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          s += v[a][j] * p(a, b) * std::conj(v[b][k]);
        }
      }
      out(j, k) = s;
    }
  }
  out = (out + out.adjoint()) * cplx(0.5);
  return TwoQubitState::validate(out);
}

TwoQubitState depolarize(const TwoQubitState& rho, double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("depolarize: q must lie in [0, 1]");
  }
  const ComplexMatrix mixed =
      rho.matrix() * cplx(1.0 - q) + ComplexMatrix::identity(4) * cplx(q / 4.0);
  return TwoQubitState::validate(mixed);
}

BoundReport majorization_check(const SingleQubitState& pump,
                               const TwoQubitState& si) {
  return make_bound_report("purity-majorization", purity(si.matrix()),
                           purity(pump.matrix()));
}

std::array<BoundReport, 2> spectrum_dominance(const SingleQubitState& pump,
                                              const TwoQubitState& si) {
  const auto eps = hermitian_eigenvalues(pump.matrix());
  const auto lam = hermitian_eigenvalues(si.matrix());
  return {make_bound_report("spectrum-dominance-1", lam[0], eps[0]),
          make_bound_report("spectrum-dominance-2", lam[0] + lam[1],
                            eps[0] + eps[1])};
}

PdcReport run_pdc(double p2_pump, ChannelKind channel, double q, RngSeed seed) {
  const PumpSpectrum spectrum = pump_spectrum(p2_pump);
  const SingleQubitState pump = pump_state(spectrum);
  TwoQubitState si = unitary_generation(pump, seed);
  if (channel == ChannelKind::Depolarizing) si = depolarize(si, q);

  const double bound = p2x2_bound(p2_pump);
  const double achieved = p2x2(si);
  const auto dom = spectrum_dominance(pump, si);
  const bool majorized = majorization_check(pump, si).satisfied &&
                         dom[0].satisfied && dom[1].satisfied;
  return {p2_pump, bound, achieved, bound - achieved, majorized};
}

}  // namespace qcoh
