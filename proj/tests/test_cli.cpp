#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qcoh/cli.hpp"
#include "qcoh/json_io.hpp"
#include "test_support.hpp"

using namespace qcoh;

namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  return fs::temp_directory_path() / ("qcoh_cli_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

// Runs the installed binary and maps the shell status back to an exit code.
int run_binary(const std::string& args) {
  const std::string cmd =
      std::string(QCOH_CLI_PATH) + " " + args + " > /dev/null 2> /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

int run_in_process(std::vector<std::string> args) {
  std::vector<const char*> argv{"qcoh"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

struct Fixture {
  fs::path bell = scratch("bell.json");
  fs::path mixed = scratch("mixed.json");
  fs::path product = scratch("product.json");
  fs::path corrupt = scratch("corrupt.json");
  fs::path nonpsd = scratch("nonpsd.json");

  Fixture() {
    write_state_file(bell.string(), bell_state(BellKind::PhiPlus).matrix());
    write_state_file(mixed.string(), ComplexMatrix::identity(4) * cplx(0.25));
    // |0> x |+>: dense in the computational basis, zero entanglement.
    ComplexMatrix plus(2, {0.5, 0.5, 0.5, 0.5});
    ComplexMatrix zero(2);
    zero(0, 0) = 1.0;
    write_state_file(product.string(), kron(zero, plus));
    std::ofstream(corrupt) << "{ not json";
    std::ofstream(nonpsd)
        << R"({"dim": 4, "re": [[1.2,0,0,0],[0,-0.2,0,0],[0,0,0,0],[0,0,0,0]], )"
        << R"("im": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})";
  }
  ~Fixture() {
    for (const fs::path& p : {bell, mixed, product, corrupt, nonpsd}) {
      std::error_code ec;
      fs::remove(p, ec);
    }
  }
};

}  // namespace

TEST_CASE("analysis report for a maximally entangled state") {
  const AnalysisReport rep = analyze(bell_state(BellKind::PhiPlus));
  CHECK(rep.p2x2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.p2_a == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rep.p2_b == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rep.concurrence == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rep.chsh_max == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-11));
  CHECK(rep.geometric_discord == doctest::Approx(0.5).epsilon(1e-11));
  REQUIRE(rep.discord.has_value());
  CHECK(*rep.discord == doctest::Approx(1.0).epsilon(1e-11));
  REQUIRE(rep.bounds.size() == 5);
  for (const BoundReport& b : rep.bounds) CHECK(b.satisfied);
  double norm = 0.0;
  for (double v : rep.stokes.r) norm += v * v;
  CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("analysis report for a dense product state omits discord") {
  ComplexMatrix plus(2, {0.5, 0.5, 0.5, 0.5});
  ComplexMatrix zero(2);
  zero(0, 0) = 1.0;
  const TwoQubitState rho = TwoQubitState::validate(kron(zero, plus));
  const AnalysisReport rep = analyze(rho);
  CHECK_FALSE(rep.discord.has_value());
  REQUIRE(rep.bounds.size() == 4);
  CHECK(rep.p2x2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.chsh_max == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(rep.concurrence == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(rep.geometric_discord == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("bound audit names arrive in a fixed order") {
  const auto x_bounds = bound_audit(werner(0.5));
  REQUIRE(x_bounds.size() == 5);
  CHECK(x_bounds[0].name == "bell-vs-coherence");
  CHECK(x_bounds[1].name == "root-geometric-discord-vs-coherence");
  CHECK(x_bounds[2].name == "discord-vs-coherence");
  CHECK(x_bounds[3].name == "concurrence-upper");
  CHECK(x_bounds[4].name == "concurrence-lower");
  for (const auto& b : x_bounds) CHECK(b.satisfied);
}

TEST_CASE("analyze command emits parseable json") {
  Fixture fx;
  std::ostringstream out;
  CHECK(cmd_analyze(fx.mixed.string(), "json", out) == 0);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["p2x2"] == 0.0);
  CHECK(j["chsh_max"] == 0.0);
  CHECK(j["concurrence"] == 0.0);
  CHECK(j["geometric_discord"] == 0.0);
  CHECK(j["discord"] == 0.0);  // diagonal states carry the X sparsity
  CHECK(j["bounds"].size() == 5);
  CHECK(j["stokes"].size() == 15);
}

TEST_CASE("analyze command pretty format") {
  Fixture fx;
  std::ostringstream out;
  CHECK(cmd_analyze(fx.bell.string(), "pretty", out) == 0);
  const std::string text = out.str();
  CHECK(text.find("p2x2") != std::string::npos);
  CHECK(text.find("chsh_max") != std::string::npos);
  CHECK(text.find("bounds:") != std::string::npos);
  CHECK(text.find("stokes:") != std::string::npos);
  CHECK(text.find("  ok") != std::string::npos);
  CHECK(text.find("VIOLATED") == std::string::npos);
}

TEST_CASE("scatter command writes csv and a clean summary") {
  const fs::path csv = scratch("scatter.csv");
  std::ostringstream out;
  CHECK(cmd_scatter(400, RngSeed{42}, csv.string(), out) == 0);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["n"] == 400);
  CHECK(j["seed"] == 42);
  CHECK(j["violations"] == 0);
  CHECK(j["max_discord_minus_p2x2"].get<double>() < 0.0);

  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "index,p2x2,discord");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) rows += !line.empty();
  CHECK(rows == 400);
  fs::remove(csv);
}

TEST_CASE("tomo command reports exact and shot modes") {
  Fixture fx;
  std::ostringstream exact;
  CHECK(cmd_tomo(fx.bell.string(), {}, RngSeed{0}, exact) == 0);
  const auto je = nlohmann::json::parse(exact.str());
  CHECK(je["shots"].is_null());
  CHECK(je["p2x2"].get<double>() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(je["physical"] == true);

  std::ostringstream shot;
  CHECK(cmd_tomo(fx.bell.string(), 20000, RngSeed{5}, shot) == 0);
  const auto js = nlohmann::json::parse(shot.str());
  CHECK(js["shots"] == 20000);
  CHECK(js["p2x2"].get<double>() == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("pdc command emits the experiment record") {
  std::ostringstream out;
  CHECK(cmd_pdc(0.7, RngSeed{3}, ChannelKind::Unitary, 0.0, out) == 0);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["p2_pump"] == 0.7);
  CHECK(j["majorization_ok"] == true);
  CHECK(std::abs(j["slack"].get<double>()) < 1e-12);
}

TEST_CASE("bounds command certifies entanglement of a bell state") {
  Fixture fx;
  std::ostringstream out;
  CHECK(cmd_bounds(fx.bell.string(), out) == 0);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["entanglement_certified"] == true);
  CHECK(j["all_satisfied"] == true);
  CHECK(j["bounds"].size() == 5);

  std::ostringstream out2;
  CHECK(cmd_bounds(fx.product.string(), out2) == 0);
  CHECK(nlohmann::json::parse(out2.str())["entanglement_certified"] == false);
}

TEST_CASE("argument parsing maps to exit codes in process") {
  Fixture fx;
  CHECK(run_in_process({"analyze", "--input", fx.bell.string()}) == 0);
  CHECK(run_in_process({"analyze"}) == 2);               // missing --input
  CHECK(run_in_process({"frobnicate"}) == 2);            // unknown subcommand
  CHECK(run_in_process({"--help"}) == 0);
  CHECK(run_in_process({"analyze", "--input", fx.bell.string(), "--format",
                        "yaml"}) == 2);                  // not in the choice set
  CHECK(run_in_process({"pdc", "1.5"}) == 2);            // domain error
  CHECK(run_in_process({"analyze", "--input", "/nonexistent/x.json"}) == 3);
  CHECK(run_in_process({"analyze", "--input", fx.corrupt.string()}) == 2);
  CHECK(run_in_process({"analyze", "--input", fx.nonpsd.string()}) == 2);
}

TEST_CASE("installed binary round trip") {
  Fixture fx;
  CHECK(run_binary("analyze --input " + fx.bell.string()) == 0);
  CHECK(run_binary("analyze --input " + fx.bell.string() + " --format pretty") == 0);
  CHECK(run_binary("bounds --input " + fx.bell.string()) == 0);
  CHECK(run_binary("tomo --input " + fx.mixed.string()) == 0);
  CHECK(run_binary("tomo --input " + fx.mixed.string() + " --shots 1000 --seed 7") == 0);
  CHECK(run_binary("pdc 0.8 --channel depolarizing --q 0.2") == 0);
  CHECK(run_binary("analyze --input /nonexistent/x.json") == 3);
  CHECK(run_binary("analyze --input " + fx.corrupt.string()) == 2);
  CHECK(run_binary("analyze --input " + fx.nonpsd.string()) == 2);
  CHECK(run_binary("pdc 1.5") == 2);
  CHECK(run_binary("") == 2);  // a subcommand is required
}

TEST_CASE("installed binary scatter runs are byte identical") {
  const fs::path a = scratch("det_a.csv");
  const fs::path b = scratch("det_b.csv");
  CHECK(run_binary("scatter --n 500 --seed 9 --out " + a.string()) == 0);
  CHECK(run_binary("scatter --n 500 --seed 9 --out " + b.string()) == 0);
  const std::string ca = slurp(a), cb = slurp(b);
  CHECK(ca == cb);
  CHECK(!ca.empty());
  fs::remove(a);
  fs::remove(b);
}
