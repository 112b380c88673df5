#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcoh/coherence.hpp"
#include "qcoh/correlations.hpp"
#include "qcoh/pdc.hpp"
#include "qcoh/states.hpp"

namespace qcoh {

/// Aggregate report over every quantity the library derives from one state.
/// discord is present only when the matrix has exact X sparsity.
struct AnalysisReport {
  double p2x2;
  double p2_a;
  double p2_b;
  double concurrence;
  double chsh_max;
  double geometric_discord;
  std::optional<double> discord;
  std::vector<BoundReport> bounds;
  StokesVector stokes;
};

AnalysisReport analyze(const TwoQubitState& rho);

/// Every inequality the library knows how to audit on one state: Bell value
/// against the coherence ceiling, root geometric discord against its
/// ceiling, discord against its ceiling (X-form states only), and the
/// concurrence sandwich.
std::vector<BoundReport> bound_audit(const TwoQubitState& rho);

// Command implementations. Each returns a process exit code and writes its
// report to `out`; diagnostics go to stderr inside run().
int cmd_analyze(const std::string& input, const std::string& format,
                std::ostream& out);
int cmd_scatter(std::uint64_t n, RngSeed seed, const std::string& csv_path,
                std::ostream& out);
int cmd_tomo(const std::string& input, std::optional<std::int64_t> shots,
             RngSeed seed, std::ostream& out);
int cmd_pdc(double p2_pump, RngSeed seed, ChannelKind channel, double q,
            std::ostream& out);
int cmd_bounds(const std::string& input, std::ostream& out);

/// Argument parsing and error-to-exit-code mapping:
/// 0 success / all bounds hold, 2 validation or domain error (including
/// argument and state-file parse errors), 3 I/O error.
int run(int argc, const char* const* argv);

}  // namespace qcoh
