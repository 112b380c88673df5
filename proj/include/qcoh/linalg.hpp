#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcoh {

using cplx = std::complex<double>;

// Absolute tolerances used throughout the density-matrix layer.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-10;

/// Thrown when a matrix breaks a stated contract (hermiticity, trace,
/// positivity, shape). Carries the violated invariant and the offending
/// magnitude so callers can report both.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& invariant, double magnitude);

  const std::string& invariant() const { return invariant_; }
  double magnitude() const { return magnitude_; }

 private:
  std::string invariant_;
  double magnitude_;
};

/// Dense row-major complex matrix restricted to the 2x2 and 4x4 shapes used
/// by single-qubit and two-qubit states. Values are immutable in practice:
/// all operations return new matrices.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim);  // zero matrix
  ComplexMatrix(int dim, std::initializer_list<cplx> row_major);

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  cplx& operator()(int i, int j) { return a_[i * dim_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[i * dim_ + j]; }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;  // matrix product
  ComplexMatrix operator*(cplx s) const;
  friend ComplexMatrix operator*(cplx s, const ComplexMatrix& m) { return m * s; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;

  cplx trace() const;
  double frobenius_norm() const;

  /// max_ij |a(i,j) - conj(a(j,i))|
  double hermiticity_violation() const;
  bool is_hermitian(double tol = kHermitianTol) const {
    return hermiticity_violation() <= tol;
  }

 private:
  int dim_;
  std::array<cplx, 16> a_{};  // row-major, unused tail stays zero for dim 2
};

enum class Subsystem { A, B };

/// Kronecker product of two 2x2 matrices; block (i,j) of the result is
/// a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of a 4x4 matrix over the complementary subsystem.
/// Index convention: row 4*?; basis order |00>,|01>,|10>,|11> with the first
/// slot belonging to subsystem A (signal) and the second to B (idler).
ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem keep);

/// Tr(rho^2) for a Hermitian matrix; real part of the product trace.
double purity(const ComplexMatrix& rho);

struct EigenSystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // columns are the matching eigenvectors
};

/// Eigenvalues of a Hermitian 2x2/4x4 matrix, sorted descending.
/// Cyclic complex Jacobi rotations, iterated until the off-diagonal
/// Frobenius mass drops below 1e-14. Throws ValidationError when the input
/// is not Hermitian within kHermitianTol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);
EigenSystem hermitian_eigensystem(const ComplexMatrix& h);

/// Square root of a positive semidefinite Hermitian matrix via its spectral
/// decomposition. Eigenvalues in [kEigenvalueFloor, 0) are clamped to zero;
/// anything lower throws.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

}  // namespace qcoh
