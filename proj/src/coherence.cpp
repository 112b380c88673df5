#include "qcoh/coherence.hpp"

#include <cmath>

namespace qcoh {

namespace {

// Tiny negative radicands at the pure/maximally-mixed boundaries are
// round-off; clamp them before the square root.
double sqrt_clamped(double x) {
  if (x < 0.0) {
    if (x < -1e-12) throw ValidationError("nonnegative-radicand", x);
    x = 0.0;
  }
  return std::sqrt(x);
}

// Degrees of coherence of validated states live in [0, 1]; purity round-off
// can push the computed value a hair above 1, which would break strict
// domain checks downstream (for example the Bell ceiling).
double unit_capped(double v) { return v > 1.0 ? 1.0 : v; }

GellMannBasis build_gellmann() {
  constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  GellMannBasis basis{ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4),
                      ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4),
                      ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4),
                      ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4),
                      ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4)};
  for (int k = 0; k < 6; ++k) {
    const int j = pairs[k][0];
    const int l = pairs[k][1];
    basis[k](j, l) = 1.0;
    basis[k](l, j) = 1.0;
    basis[6 + k](j, l) = cplx{0.0, -1.0};
    basis[6 + k](l, j) = cplx{0.0, 1.0};
  }
  basis[12](0, 0) = 1.0;
  basis[12](1, 1) = -1.0;
  const double s3 = 1.0 / std::sqrt(3.0);
  basis[13](0, 0) = s3;
  basis[13](1, 1) = s3;
  basis[13](2, 2) = -2.0 * s3;
  const double s6 = 1.0 / std::sqrt(6.0);
  basis[14](0, 0) = s6;
  basis[14](1, 1) = s6;
  basis[14](2, 2) = s6;
  basis[14](3, 3) = -3.0 * s6;
  return basis;
}

}  // namespace

double StokesVector::norm() const {
  double s = 0.0;
  for (double v : r) s += v * v;
  return std::sqrt(s);
}

const GellMannBasis& gellmann_basis() {
  static const GellMannBasis basis = build_gellmann();
  return basis;
}

double p2(const SingleQubitState& rho) {
  return unit_capped(sqrt_clamped(2.0 * purity(rho.matrix()) - 1.0));
}

double p2x2(const TwoQubitState& rho) {
  return unit_capped(sqrt_clamped((4.0 * purity(rho.matrix()) - 1.0) / 3.0));
}

double p2x2_x(const XStateParams& p) {
  const double s = p.p11 * p.p11 + p.p22 * p.p22 + p.p33 * p.p33 + p.p44 * p.p44 +
                   2.0 * (std::norm(p.c14) + std::norm(p.c23));
  return unit_capped(std::sqrt(4.0 / 3.0) * sqrt_clamped(s - 0.25));
}

StokesVector stokes_decompose(const TwoQubitState& rho) {
  const GellMannBasis& basis = gellmann_basis();
  const double scale = std::sqrt(2.0 / 3.0);
  StokesVector out;
  for (int j = 0; j < 15; ++j) {
    // Tr(rho L_j) is real for Hermitian factors.
    cplx t{};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) t += rho.matrix()(i, k) * basis[j](k, i);
    out.r[j] = scale * t.real();
  }
  return out;
}

double p2x2_from_stokes(const StokesVector& r) { return r.norm(); }

}  // namespace qcoh
