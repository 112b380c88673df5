#pragma once

#include "qcoh/linalg.hpp"
#include "qcoh/rng.hpp"

namespace qcoh {

/// 2x2 density matrix: Hermitian, unit trace, positive semidefinite.
/// Instances can only be obtained through validate() or the constructors in
/// this header, so holding one is proof of validity.
class SingleQubitState {
 public:
  static SingleQubitState validate(const ComplexMatrix& m);
  const ComplexMatrix& matrix() const { return m_; }

 private:
  explicit SingleQubitState(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// 4x4 density matrix with the same guarantees at dimension 4. Basis order
/// is |HH>, |HV>, |VH>, |VV> (signal qubit first).
class TwoQubitState {
 public:
  static TwoQubitState validate(const ComplexMatrix& m);
  const ComplexMatrix& matrix() const { return m_; }

 private:
  explicit TwoQubitState(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// The seven independent parameters of an X-form density matrix: four real
/// populations and the two antidiagonal coherences.
struct XStateParams {
  double p11, p22, p33, p44;
  cplx c14, c23;
};

/// Throws ValidationError unless populations are nonnegative, sum to one
/// within kTraceTol, and each coherence fits its 2x2 positivity bound.
void validate_x_params(const XStateParams& p);

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

TwoQubitState bell_state(BellKind kind);

/// p * |Psi-><Psi-| + (1-p) * I/4, p in [0,1].
TwoQubitState werner(double p);

/// Density matrix with the X sparsity pattern; conjugates fill the lower
/// triangle.
TwoQubitState x_state(const XStateParams& p);

/// Random X-state parameters: populations flat-Dirichlet on the simplex,
/// each coherence magnitude uniform on [0, block bound) with an independent
/// uniform phase. The measure covers the whole X body including its
/// rank-deficient boundary.
XStateParams random_x_state(SplitRng& rng);

/// Ginibre construction: rho = G G^dag / Tr(G G^dag) with G a 4 x rank
/// matrix of standard complex Gaussians. rank=1 gives Haar-random pure
/// states.
TwoQubitState random_mixed(SplitRng& rng, int rank);

/// Reduced state of one subsystem.
SingleQubitState reduced_state(const TwoQubitState& rho, Subsystem keep);

/// True when every entry off the diagonal and antidiagonal is below tol.
bool is_x_form(const TwoQubitState& rho, double tol = 1e-12);

/// Reads the X parameters back out of an X-form state.
XStateParams x_params_of(const TwoQubitState& rho);

}  // namespace qcoh
