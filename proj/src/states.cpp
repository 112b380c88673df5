#include "qcoh/states.hpp"

#include <cmath>
#include <numbers>

namespace qcoh {

namespace {

void check_density(const ComplexMatrix& m) {
  const double herm = m.hermiticity_violation();
  if (herm > kHermitianTol) throw ValidationError("hermitian", herm);
  const double trace_err = std::abs(m.trace() - cplx{1.0, 0.0});
  if (trace_err > kTraceTol) throw ValidationError("unit-trace", trace_err);
  const std::vector<double> lam = hermitian_eigenvalues(m);
  if (lam.back() < kEigenvalueFloor) {
    throw ValidationError("positive-semidefinite", lam.back());
  }
}

}  // namespace

SingleQubitState SingleQubitState::validate(const ComplexMatrix& m) {
  if (m.dim() != 2) throw std::invalid_argument("SingleQubitState: need 2x2");
  check_density(m);
  return SingleQubitState(m);
}

TwoQubitState TwoQubitState::validate(const ComplexMatrix& m) {
  if (m.dim() != 4) throw std::invalid_argument("TwoQubitState: need 4x4");
  check_density(m);
  return TwoQubitState(m);
}

void validate_x_params(const XStateParams& p) {
  const double pops[4] = {p.p11, p.p22, p.p33, p.p44};
  for (double v : pops) {
    if (v < 0.0) throw ValidationError("population-nonnegative", v);
  }
  const double sum_err = std::abs(p.p11 + p.p22 + p.p33 + p.p44 - 1.0);
  if (sum_err > kTraceTol) throw ValidationError("populations-sum-to-one", sum_err);
  // Positivity of each 2x2 block: |c| <= sqrt(p_a p_b), small grace for
  // round-off on the boundary.
  const double outer = std::abs(p.c14) - std::sqrt(p.p11 * p.p44);
  if (outer > 1e-12) throw ValidationError("outer-block-positivity", outer);
  const double inner = std::abs(p.c23) - std::sqrt(p.p22 * p.p33);
  if (inner > 1e-12) throw ValidationError("inner-block-positivity", inner);
}

TwoQubitState bell_state(BellKind kind) {
  ComplexMatrix m(4);
  const double h = 0.5;
  switch (kind) {
    case BellKind::PhiPlus:
    case BellKind::PhiMinus: {
      const double s = (kind == BellKind::PhiPlus) ? h : -h;
      m(0, 0) = h; m(3, 3) = h; m(0, 3) = s; m(3, 0) = s;
      break;
    }
    case BellKind::PsiPlus:
    case BellKind::PsiMinus: {
      const double s = (kind == BellKind::PsiPlus) ? h : -h;
      m(1, 1) = h; m(2, 2) = h; m(1, 2) = s; m(2, 1) = s;
      break;
    }
  }
  return TwoQubitState::validate(m);
}

TwoQubitState werner(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("werner: p must lie in [0,1]");
  }
  const ComplexMatrix psi = bell_state(BellKind::PsiMinus).matrix();
  ComplexMatrix m = psi * cplx{p, 0.0} +
                    ComplexMatrix::identity(4) * cplx{(1.0 - p) / 4.0, 0.0};
  return TwoQubitState::validate(m);
}

TwoQubitState x_state(const XStateParams& p) {
  validate_x_params(p);
  ComplexMatrix m(4);
  m(0, 0) = p.p11; m(1, 1) = p.p22; m(2, 2) = p.p33; m(3, 3) = p.p44;
  m(0, 3) = p.c14; m(3, 0) = std::conj(p.c14);
  m(1, 2) = p.c23; m(2, 1) = std::conj(p.c23);
  return TwoQubitState::validate(m);
}

XStateParams random_x_state(SplitRng& rng) {
  // Four iid Exp(1) variates normalized -> flat Dirichlet on the simplex.
  double e[4];
  double sum = 0.0;
  for (double& v : e) {
    v = -std::log(1.0 - rng.uniform());
    sum += v;
  }
  XStateParams p{};
  p.p11 = e[0] / sum; p.p22 = e[1] / sum; p.p33 = e[2] / sum; p.p44 = e[3] / sum;

  const double m14 = rng.uniform() * std::sqrt(p.p11 * p.p44);
  const double ph14 = rng.uniform(0.0, 2.0 * std::numbers::pi);
  p.c14 = std::polar(m14, ph14);
  const double m23 = rng.uniform() * std::sqrt(p.p22 * p.p33);
  const double ph23 = rng.uniform(0.0, 2.0 * std::numbers::pi);
  p.c23 = std::polar(m23, ph23);
  return p;
}

TwoQubitState random_mixed(SplitRng& rng, int rank) {
  if (rank < 1 || rank > 4) {
    throw std::invalid_argument("random_mixed: rank must be 1..4");
  }
  cplx g[4][4];
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < rank; ++k) g[i][k] = rng.complex_normal();

  ComplexMatrix m(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s{};
      for (int k = 0; k < rank; ++k) s += g[i][k] * std::conj(g[j][k]);
      m(i, j) = s;
    }
  const double tr = m.trace().real();
  m = m * cplx{1.0 / tr, 0.0};
  // Exact symmetrization keeps the validator happy on boundary ranks.
  m = (m + m.adjoint()) * cplx{0.5, 0.0};
  return TwoQubitState::validate(m);
}

SingleQubitState reduced_state(const TwoQubitState& rho, Subsystem keep) {
  return SingleQubitState::validate(partial_trace(rho.matrix(), keep));
}

bool is_x_form(const TwoQubitState& rho, double tol) {
  const ComplexMatrix& m = rho.matrix();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool on_x = (i == j) || (i + j == 3);
      if (!on_x && std::abs(m(i, j)) > tol) return false;
    }
  return true;
}

XStateParams x_params_of(const TwoQubitState& rho) {
  if (!is_x_form(rho)) {
    throw std::invalid_argument("x_params_of: state is not X-form");
  }
  const ComplexMatrix& m = rho.matrix();
  return XStateParams{m(0, 0).real(), m(1, 1).real(), m(2, 2).real(),
                      m(3, 3).real(), m(0, 3), m(1, 2)};
}

}  // namespace qcoh
