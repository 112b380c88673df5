#include "qcoh/correlations.hpp"

#include <algorithm>
#include <cmath>

namespace qcoh {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Binary entropy with the 0 log 0 = 0 convention.
double binary_entropy(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return -xlog2x(x) - xlog2x(1.0 - x);
}

// Eigenvalues of a real symmetric 3x3 matrix via cyclic Jacobi, descending.
std::array<double, 3> sym3_eigenvalues(std::array<std::array<double, 3>, 3> a) {
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
    if (off < 1e-15) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = 0.5 * std::atan2(2.0 * a[p][q], a[p][p] - a[q][q]);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        for (int i = 0; i < 3; ++i) {
          const double aip = a[i][p];
          const double aiq = a[i][q];
          a[i][p] = c * aip + s * aiq;
          a[i][q] = -s * aip + c * aiq;
        }
        for (int j = 0; j < 3; ++j) {
          const double apj = a[p][j];
          const double aqj = a[q][j];
          a[p][j] = c * apj + s * aqj;
          a[q][j] = -s * apj + c * aqj;
        }
      }
    }
  }
  std::array<double, 3> lam{a[0][0], a[1][1], a[2][2]};
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return lam;
}

const ComplexMatrix& pauli(int i) {
  switch (i) {
    case 0: return pauli_x();
    case 1: return pauli_y();
    default: return pauli_z();
  }
}

}  // namespace

BoundReport make_bound_report(std::string name, double quantity, double bound,
                              double tol) {
  const double slack = bound - quantity;
  return BoundReport{std::move(name), quantity, bound, slack, slack >= -tol};
}

double concurrence(const TwoQubitState& rho) {
  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  const ComplexMatrix root = psd_sqrt(rho.matrix());
  const ComplexMatrix flipped = yy * rho.matrix().conjugate() * yy;
  const ComplexMatrix r = root * flipped * root;
  std::vector<double> lam = hermitian_eigenvalues(r);  // descending
  // The product is rank deficient whenever rho is; eigenvalues below the
  // solver's resolution are exact zeros, and square-rooting their round-off
  // would inflate it to 1e-8 scale in the alternating sum.
  const double floor = std::max(lam[0], 0.0) * 1e-12 + 1e-14;
  for (double& v : lam) v = v > floor ? std::sqrt(v) : 0.0;
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double x_state_discord(const XStateParams& p) {
  validate_x_params(p);
  // Block eigenvalues in closed form.
  const double mo = (p.p11 + p.p44) / 2.0;
  const double ro = std::sqrt((p.p11 - p.p44) * (p.p11 - p.p44) / 4.0 + std::norm(p.c14));
  const double mi = (p.p22 + p.p33) / 2.0;
  const double ri = std::sqrt((p.p22 - p.p33) * (p.p22 - p.p33) / 4.0 + std::norm(p.c23));
  const double lam[4] = {mo + ro, std::max(0.0, mo - ro), mi + ri,
                         std::max(0.0, mi - ri)};
  double sum_llog = 0.0;
  for (double v : lam) sum_llog += xlog2x(v);

  const double tau =
      0.5 * (1.0 + std::sqrt(std::pow(1.0 - 2.0 * (p.p33 + p.p44), 2) +
                             4.0 * std::pow(std::abs(p.c14) + std::abs(p.c23), 2)));
  const double q1 = sum_llog + binary_entropy(p.p11 + p.p33) + binary_entropy(tau);
  const double q2 = sum_llog - (xlog2x(p.p11) + xlog2x(p.p22) + xlog2x(p.p33) +
                                xlog2x(p.p44));
  return std::max(0.0, std::min(q1, q2));
}

std::array<double, 3> bloch_vector(const TwoQubitState& rho, Subsystem which) {
  const ComplexMatrix local = partial_trace(rho.matrix(), which);
  std::array<double, 3> x{};
  for (int i = 0; i < 3; ++i) {
    cplx t{};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) t += local(a, b) * pauli(i)(b, a);
    x[i] = t.real();
  }
  return x;
}

std::array<std::array<double, 3>, 3> correlation_matrix(const TwoQubitState& rho) {
  std::array<std::array<double, 3>, 3> t{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const ComplexMatrix obs = kron(pauli(i), pauli(j));
      cplx tr{};
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) tr += rho.matrix()(a, b) * obs(b, a);
      t[i][j] = tr.real();
    }
  }
  return t;
}

double chsh_max(const TwoQubitState& rho) {
  const auto t = correlation_matrix(rho);
  std::array<std::array<double, 3>, 3> tt{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) tt[i][j] += t[k][i] * t[k][j];
  const auto lam = sym3_eigenvalues(tt);
  return 2.0 * std::sqrt(std::max(0.0, lam[0] + lam[1]));
}

double geometric_discord(const TwoQubitState& rho) {
  const auto x = bloch_vector(rho, Subsystem::A);
  const auto t = correlation_matrix(rho);
  double x2 = 0.0;
  for (double v : x) x2 += v * v;
  double t2 = 0.0;
  std::array<std::array<double, 3>, 3> k{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t2 += t[i][j] * t[i][j];
      k[i][j] = x[i] * x[j];
      for (int m = 0; m < 3; ++m) k[i][j] += t[i][m] * t[j][m];
    }
  }
  const double kmax = sym3_eigenvalues(k)[0];
  return std::max(0.0, 0.25 * (x2 + t2 - kmax));
}

double bell_bound(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("bell_bound: p must lie in [0,1]");
  }
  const double knee = 1.0 / std::sqrt(3.0);
  return p >= knee ? std::sqrt(6.0 * p * p + 2.0) : 2.0 * std::sqrt(3.0) * p;
}

double discord_bound(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("discord_bound: p must lie in [0,1]");
  }
  return std::sqrt(1.5) * p;
}

ConcurrenceBounds concurrence_bounds(const TwoQubitState& rho) {
  const double p22 = p2x2(rho);
  const double pa = p2(reduced_state(rho, Subsystem::A));
  const double pb = p2(reduced_state(rho, Subsystem::B));
  const double upper = std::sqrt(std::max(
      0.0, 1.0 - std::pow(std::max(pa, pb), 2)));
  const double lower =
      std::sqrt(std::max(0.0, 1.5 * p22 * p22 - 0.5 - pa * pa));
  return ConcurrenceBounds{lower, upper};
}

bool entanglement_criterion(const TwoQubitState& rho) {
  const double p22 = p2x2(rho);
  const double pa = p2(reduced_state(rho, Subsystem::A));
  return 3.0 * p22 * p22 - 1.0 - 2.0 * pa * pa > 1e-12;
}

double participation_ratio(const TwoQubitState& rho) {
  return 1.0 / purity(rho.matrix());
}

void scatter_sample(std::uint64_t n, RngSeed seed,
                    const std::function<void(const ScatterRecord&)>& sink) {
  for (std::uint64_t k = 0; k < n; ++k) {
    SplitRng rng(seed, k);
    const XStateParams p = random_x_state(rng);
    sink(ScatterRecord{k, p2x2_x(p), x_state_discord(p)});
  }
}

std::vector<ScatterRecord> scatter_sample(std::uint64_t n, RngSeed seed) {
  std::vector<ScatterRecord> out;
  out.reserve(n);
  scatter_sample(n, seed, [&](const ScatterRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace qcoh
