#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcoh/coherence.hpp"
#include "qcoh/states.hpp"

namespace qcoh {

// Default slack tolerance for inequality checks; discord-based checks get a
// looser one because entropy terms lose precision near simplex boundaries.
inline constexpr double kBoundTol = 1e-10;
inline constexpr double kDiscordBoundTol = 1e-9;

/// Uniform carrier for "quantity <= bound" checks.
struct BoundReport {
  std::string name;
  double quantity;
  double bound;
  double slack;  // bound - quantity
  bool satisfied;
};

BoundReport make_bound_report(std::string name, double quantity, double bound,
                              double tol = kBoundTol);

struct ScatterRecord {
  std::uint64_t index;
  double p2x2;
  double discord;
};

/// Wootters concurrence. Evaluated through the Hermitian route:
/// eigenvalues of sqrt(rho) (sy x sy) rho* (sy x sy) sqrt(rho), square
/// roots descending, C = max(0, l1 - l2 - l3 - l4).
double concurrence(const TwoQubitState& rho);

/// Closed-form quantum discord of an X-state, D = min(Q1, Q2):
///   Q1 = sum_i l_i log2 l_i + H(p11 + p33) + H(tau)
///   Q2 = sum_i l_i log2 l_i - sum_i p_ii log2 p_ii
/// with tau = (1 + sqrt((1 - 2(p33 + p44))^2 + 4(|c14| + |c23|)^2)) / 2,
/// l_i the block eigenvalues in closed form, 0 log 0 = 0, and the result
/// clamped at zero. Q2 is the conditional-entropy branch of the measured
/// subsystem; writing it with the minus sign is what makes the Bell, the
/// one-third and the maximally-mixed anchors come out right.
double x_state_discord(const XStateParams& p);

/// Maximum CHSH value over all measurement settings:
/// 2 sqrt(t1 + t2) with t1 >= t2 the two largest eigenvalues of T^T T,
/// T_ij = Tr(rho si x sj).
double chsh_max(const TwoQubitState& rho);

/// Geometric discord (squared Frobenius distance to the nearest
/// classical-quantum state), closed form for measurements on subsystem A:
/// (|x|^2 + |T|_F^2 - kmax) / 4 with x the local Bloch vector of A and kmax
/// the top eigenvalue of x x^T + T T^T.
double geometric_discord(const TwoQubitState& rho);

/// Upper bound on chsh_max as a function of the intrinsic degree of
/// coherence: sqrt(6 p^2 + 2) above p = 1/sqrt(3), else 2 sqrt(3) p.
double bell_bound(double p);

/// Upper bound on discord: sqrt(3/2) * p.
double discord_bound(double p);

struct ConcurrenceBounds {
  double lower;
  double upper;
};

/// lower = sqrt(max(0, (3/2) P22^2 - 1/2 - (P2A)^2)),
/// upper = min over subsystems of sqrt(1 - P2^2).
ConcurrenceBounds concurrence_bounds(const TwoQubitState& rho);

/// True iff 3 P22^2 - 1 > 2 (P2A)^2 strictly (slack above 1e-12); a true
/// verdict certifies entanglement.
bool entanglement_criterion(const TwoQubitState& rho);

/// Local Bloch vector of one subsystem, x_i = Tr(rho (si x I)) or
/// Tr(rho (I x si)).
std::array<double, 3> bloch_vector(const TwoQubitState& rho, Subsystem which);

/// Correlation matrix T_ij = Tr(rho si x sj).
std::array<std::array<double, 3>, 3> correlation_matrix(const TwoQubitState& rho);

/// Participation ratio R = 1 / Tr(rho^2), diagnostic companion of p2x2.
double participation_ratio(const TwoQubitState& rho);

/// n random X-states with their p2x2 and discord. Record k is a pure
/// function of (seed, k), so any partition of the index range produces the
/// same stream.
void scatter_sample(std::uint64_t n, RngSeed seed,
                    const std::function<void(const ScatterRecord&)>& sink);
std::vector<ScatterRecord> scatter_sample(std::uint64_t n, RngSeed seed);

}  // namespace qcoh
