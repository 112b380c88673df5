#include "qcoh/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "CLI11.hpp"
#include "qcoh/json_io.hpp"
#include "qcoh/tomography.hpp"

namespace qcoh {

namespace {

using nlohmann::ordered_json;

ordered_json analysis_to_json(const AnalysisReport& r) {
  ordered_json j{{"p2x2", r.p2x2},
                 {"p2_a", r.p2_a},
                 {"p2_b", r.p2_b},
                 {"concurrence", r.concurrence},
                 {"chsh_max", r.chsh_max},
                 {"geometric_discord", r.geometric_discord}};
  if (r.discord) j["discord"] = *r.discord;
  ordered_json bounds = ordered_json::array();
  for (const BoundReport& b : r.bounds) bounds.push_back(to_json(b));
  j["bounds"] = std::move(bounds);
  j["stokes"] = to_json(r.stokes);
  return j;
}

void print_pretty(const AnalysisReport& r, std::ostream& out) {
  out << std::setprecision(12);
  auto line = [&](const char* label, double v) {
    out << std::left << std::setw(20) << label << v << '\n';
  };
  line("p2x2", r.p2x2);
  line("p2_a", r.p2_a);
  line("p2_b", r.p2_b);
  line("concurrence", r.concurrence);
  line("chsh_max", r.chsh_max);
  line("geometric_discord", r.geometric_discord);
  if (r.discord) line("discord", *r.discord);
  out << "bounds:\n";
  for (const BoundReport& b : r.bounds) {
    out << "  " << std::left << std::setw(38) << b.name
        << " quantity=" << b.quantity << " bound=" << b.bound
        << " slack=" << b.slack << (b.satisfied ? "  ok" : "  VIOLATED") << '\n';
  }
  out << "stokes:";
  for (double v : r.stokes.r) out << ' ' << v;
  out << '\n';
}

}  // namespace

AnalysisReport analyze(const TwoQubitState& rho) {
  AnalysisReport rep{};
  rep.p2x2 = p2x2(rho);
  rep.p2_a = p2(reduced_state(rho, Subsystem::A));
  rep.p2_b = p2(reduced_state(rho, Subsystem::B));
  rep.concurrence = concurrence(rho);
  rep.chsh_max = chsh_max(rho);
  rep.geometric_discord = geometric_discord(rho);
  if (is_x_form(rho)) rep.discord = x_state_discord(x_params_of(rho));
  rep.bounds = bound_audit(rho);
  rep.stokes = stokes_decompose(rho);
  return rep;
}

std::vector<BoundReport> bound_audit(const TwoQubitState& rho) {
  const double p = p2x2(rho);
  std::vector<BoundReport> reports;
  reports.push_back(
      make_bound_report("bell-vs-coherence", chsh_max(rho), bell_bound(p)));
  reports.push_back(make_bound_report("root-geometric-discord-vs-coherence",
                                      std::sqrt(geometric_discord(rho)),
                                      std::sqrt(0.75) * p));
  if (is_x_form(rho)) {
    reports.push_back(make_bound_report("discord-vs-coherence",
                                        x_state_discord(x_params_of(rho)),
                                        discord_bound(p), kDiscordBoundTol));
  }
  const ConcurrenceBounds cb = concurrence_bounds(rho);
  const double c = concurrence(rho);
  reports.push_back(make_bound_report("concurrence-upper", c, cb.upper));
  reports.push_back(make_bound_report("concurrence-lower", cb.lower, c));
  return reports;
}

int cmd_analyze(const std::string& input, const std::string& format,
                std::ostream& out) {
  const TwoQubitState rho = read_two_qubit_file(input);
  const AnalysisReport rep = analyze(rho);
  if (format == "pretty") {
    print_pretty(rep, out);
  } else {
    out << analysis_to_json(rep).dump(2) << '\n';
  }
  return 0;
}

int cmd_scatter(std::uint64_t n, RngSeed seed, const std::string& csv_path,
                std::ostream& out) {
  if (n < 1) throw std::invalid_argument("scatter: n must be >= 1");
  std::ofstream csv(csv_path);
  if (!csv) throw IoError("cannot open for writing: " + csv_path);
  csv << "index,p2x2,discord\n" << std::setprecision(12);
  double max_gap = -std::numeric_limits<double>::infinity();
  std::uint64_t violations = 0;
  scatter_sample(n, seed, [&](const ScatterRecord& rec) {
    csv << rec.index << ',' << rec.p2x2 << ',' << rec.discord << '\n';
    max_gap = std::max(max_gap, rec.discord - rec.p2x2);
    if (rec.discord > rec.p2x2 + kDiscordBoundTol) ++violations;
  });
  if (!csv) throw IoError("write failed: " + csv_path);
  csv.close();
  const ordered_json summary{{"n", n},
                             {"seed", seed.value},
                             {"out", csv_path},
                             {"max_discord_minus_p2x2", max_gap},
                             {"violations", violations}};
  out << summary.dump(2) << '\n';
  return 0;
}

int cmd_tomo(const std::string& input, std::optional<std::int64_t> shots,
             RngSeed seed, std::ostream& out) {
  const TwoQubitState rho = read_two_qubit_file(input);
  const TomographyReport rep = run_tomography(rho, shots, seed);
  out << to_json(rep).dump(2) << '\n';
  return 0;
}

int cmd_pdc(double p2_pump, RngSeed seed, ChannelKind channel, double q,
            std::ostream& out) {
  const PdcReport rep = run_pdc(p2_pump, channel, q, seed);
  out << to_json(rep).dump(2) << '\n';
  return 0;
}

int cmd_bounds(const std::string& input, std::ostream& out) {
  const TwoQubitState rho = read_two_qubit_file(input);
  const std::vector<BoundReport> bounds = bound_audit(rho);
  const bool all_ok = std::all_of(bounds.begin(), bounds.end(),
                                  [](const BoundReport& b) { return b.satisfied; });
  ordered_json arr = ordered_json::array();
  for (const BoundReport& b : bounds) arr.push_back(to_json(b));
  const ordered_json j{{"bounds", std::move(arr)},
                       {"entanglement_certified", entanglement_criterion(rho)},
                       {"all_satisfied", all_ok}};
  out << j.dump(2) << '\n';
  return all_ok ? 0 : 1;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Two-qubit intrinsic degree of coherence toolkit"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::string format = "json";
  std::string channel = "unitary";
  std::uint64_t n = 100000;
  std::uint64_t seed = 0;
  std::int64_t shots = 0;
  double q = 0.0;
  double p2_pump = 0.0;

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Full coherence/correlation report for a state file");
  analyze_cmd->add_option("--input", input, "JSON state file (dim 4)")->required();
  analyze_cmd->add_option("--format", format, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  CLI::App* scatter_cmd = app.add_subcommand(
      "scatter", "Random X-state ensemble: CSV of (index, p2x2, discord)");
  scatter_cmd->add_option("--n", n, "number of samples");
  scatter_cmd->add_option("--seed", seed, "ensemble seed");
  scatter_cmd->add_option("--out", out_path, "CSV output path")->required();

  CLI::App* tomo_cmd = app.add_subcommand(
      "tomo", "Simulate the 16-setting coincidence measurement and invert it");
  tomo_cmd->add_option("--input", input, "JSON state file (dim 4)")->required();
  tomo_cmd->add_option("--shots", shots, "coincidence shots per setting (omit for exact)");
  tomo_cmd->add_option("--seed", seed, "shot-noise seed");

  CLI::App* pdc_cmd = app.add_subcommand(
      "pdc", "Coherence transfer from a pump of given degree of polarization");
  pdc_cmd->add_option("p2_pump", p2_pump, "pump degree of polarization in [0,1]")
      ->required();
  pdc_cmd->add_option("--channel", channel, "generation channel")
      ->check(CLI::IsMember({"unitary", "depolarizing"}));
  pdc_cmd->add_option("--q", q, "depolarization weight in [0,1]");
  pdc_cmd->add_option("--seed", seed, "isometry seed");

  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "Audit every inequality on a state file");
  bounds_cmd->add_option("--input", input, "JSON state file (dim 4)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(input, format, std::cout);
    if (scatter_cmd->parsed()) return cmd_scatter(n, RngSeed{seed}, out_path, std::cout);
    if (tomo_cmd->parsed()) {
      std::optional<std::int64_t> shots_opt;
      if (tomo_cmd->count("--shots") > 0) shots_opt = shots;
      return cmd_tomo(input, shots_opt, RngSeed{seed}, std::cout);
    }
    if (pdc_cmd->parsed()) {
      const ChannelKind kind = channel == "depolarizing" ? ChannelKind::Depolarizing
                                                         : ChannelKind::Unitary;
      return cmd_pdc(p2_pump, RngSeed{seed}, kind, q, std::cout);
    }
    if (bounds_cmd->parsed()) return cmd_bounds(input, std::cout);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace qcoh
