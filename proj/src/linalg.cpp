#include "qcoh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qcoh {

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument("ComplexMatrix: dim must be 2 or 4, got " +
                                std::to_string(dim));
  }
}

}  // namespace

ValidationError::ValidationError(const std::string& invariant, double magnitude)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "invariant '" << invariant << "' violated, magnitude " << magnitude;
        return os.str();
      }()),
      invariant_(invariant),
      magnitude_(magnitude) {}

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<cplx> row_major)
    : dim_(dim) {
  check_dim(dim);
  if (static_cast<int>(row_major.size()) != dim * dim) {
    throw std::invalid_argument("ComplexMatrix: initializer has " +
                                std::to_string(row_major.size()) +
                                " entries, expected " + std::to_string(dim * dim));
  }
  std::copy(row_major.begin(), row_major.end(), a_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix add: dimension mismatch");
  ComplexMatrix r(dim_);
  for (int k = 0; k < dim_ * dim_; ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix sub: dimension mismatch");
  ComplexMatrix r(dim_);
  for (int k = 0; k < dim_ * dim_; ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("matrix mul: dimension mismatch");
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < dim_; ++j) r(i, j) += aik * o(k, j);
    }
  }
  return r;
}

ComplexMatrix ComplexMatrix::operator*(cplx s) const {
  ComplexMatrix r(dim_);
  for (int k = 0; k < dim_ * dim_; ++k) r.a_[k] = a_[k] * s;
  return r;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

cplx ComplexMatrix::trace() const {
  cplx t{};
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (int k = 0; k < dim_ * dim_; ++k) s += std::norm(a_[k]);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_violation() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw std::invalid_argument("kron: both factors must be 2x2");
  }
  ComplexMatrix r(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem keep) {
  if (m.dim() != 4) throw std::invalid_argument("partial_trace: input must be 4x4");
  ComplexMatrix r(2);
  if (keep == Subsystem::A) {
    // rho_A[a][a'] = sum_b rho[2a+b][2a'+b]
    for (int a = 0; a < 2; ++a)
      for (int ap = 0; ap < 2; ++ap)
        for (int b = 0; b < 2; ++b) r(a, ap) += m(2 * a + b, 2 * ap + b);
  } else {
    // rho_B[b][b'] = sum_a rho[2a+b][2a+b']
    for (int b = 0; b < 2; ++b)
      for (int bp = 0; bp < 2; ++bp)
        for (int a = 0; a < 2; ++a) r(b, bp) += m(2 * a + b, 2 * a + bp);
  }
  return r;
}

double purity(const ComplexMatrix& rho) {
  cplx t{};
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j) t += rho(i, j) * rho(j, i);
  return t.real();
}

namespace {

double offdiagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& h) {
  const double viol = h.hermiticity_violation();
  if (viol > kHermitianTol) throw ValidationError("hermitian", viol);

  const int n = h.dim();
  // Work on the exactly-Hermitian average so the diagonal stays real.
  ComplexMatrix a = (h + h.adjoint()) * cplx{0.5, 0.0};
  ComplexMatrix v = ComplexMatrix::identity(n);

  constexpr double kOffTol = 1e-14;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && offdiagonal_mass(a) >= kOffTol; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq_abs = std::abs(a(p, q));
        if (apq_abs == 0.0) continue;
        const cplx phase = a(p, q) / apq_abs;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * apq_abs, app - aqq);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // Unitary plane rotation R: R(p,p)=c, R(p,q)=-phase*s,
        // R(q,p)=conj(phase)*s, R(q,q)=c. Apply A <- R^dag A R, V <- V R.
        for (int i = 0; i < n; ++i) {
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          a(i, p) = aip * c + aiq * std::conj(phase) * s;
          a(i, q) = -aip * phase * s + aiq * c;
          const cplx vip = v(i, p);
          const cplx viq = v(i, q);
          v(i, p) = vip * c + viq * std::conj(phase) * s;
          v(i, q) = -vip * phase * s + viq * c;
        }
        for (int j = 0; j < n; ++j) {
          const cplx apj = a(p, j);
          const cplx aqj = a(q, j);
          a(p, j) = apj * c + aqj * phase * s;
          a(q, j) = -apj * std::conj(phase) * s + aqj * c;
        }
        a(p, q) = std::conj(a(q, p));  // clean round-off on the zeroed pair
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem es{std::vector<double>(n), ComplexMatrix(n)};
  for (int k = 0; k < n; ++k) {
    es.values[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[k]);
  }
  return es;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eigensystem(h).values;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  EigenSystem es = hermitian_eigensystem(h);
  const int n = h.dim();
  ComplexMatrix r(n);
  for (int k = 0; k < n; ++k) {
    double lam = es.values[k];
    if (lam < 0.0) {
      if (lam < kEigenvalueFloor) throw ValidationError("positive-semidefinite", lam);
      lam = 0.0;
    }
    const double root = std::sqrt(lam);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r(i, j) += root * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  return r;
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m(2, {0, 1, 1, 0});
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m(2, {0, cplx{0, -1}, cplx{0, 1}, 0});
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m(2, {1, 0, 0, -1});
  return m;
}

}  // namespace qcoh
