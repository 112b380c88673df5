#pragma once

#include <array>

#include "qcoh/states.hpp"

namespace qcoh {

/// The 15 real expansion coefficients of a two-qubit state over the SU(4)
/// generator basis: rho = (1/4)(I + sqrt(6) * sum_j r_j Lambda_j), hence
/// r_j = sqrt(2/3) * Tr(rho Lambda_j). Serialized as a flat 15-element array
/// in basis order.
struct StokesVector {
  std::array<double, 15> r{};
  double norm() const;
};

using GellMannBasis = std::array<ComplexMatrix, 15>;

/// The 15 Hermitian traceless SU(4) generators, normalized to
/// Tr(L_j L_k) = 2 delta_jk, in frozen order:
///   1-6   symmetric off-diagonal, pair order (1,2),(1,3),(1,4),(2,3),(2,4),(3,4)
///   7-12  antisymmetric, same pair order, entry (j,k) = -i for j < k
///   13-15 diag(1,-1,0,0), diag(1,1,-2,0)/sqrt(3), diag(1,1,1,-3)/sqrt(6)
/// This order is the one the 16-setting coincidence inversion resolves to
/// channel by channel (see tomography).
const GellMannBasis& gellmann_basis();

/// Degree of polarization of a single qubit: sqrt(2 Tr(rho^2) - 1).
double p2(const SingleQubitState& rho);

/// Intrinsic degree of coherence of a two-qubit state:
/// sqrt((4 Tr(rho^2) - 1) / 3). 1 for pure states, 0 for I/4.
double p2x2(const TwoQubitState& rho);

/// Same quantity straight from X-state parameters:
/// sqrt(4/3) * sqrt(sum p_ii^2 + 2(|c14|^2 + |c23|^2) - 1/4).
double p2x2_x(const XStateParams& p);

StokesVector stokes_decompose(const TwoQubitState& rho);

/// sqrt(sum_j r_j^2); equals p2x2 of the decomposed state.
double p2x2_from_stokes(const StokesVector& r);

}  // namespace qcoh
