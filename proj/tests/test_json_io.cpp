#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <variant>

#include "qcoh/json_io.hpp"
#include "qcoh/pdc.hpp"
#include "qcoh/tomography.hpp"
#include "test_support.hpp"

using namespace qcoh;

namespace {

namespace fs = std::filesystem;

// Unique scratch file per test body, removed on scope exit.
struct ScratchFile {
  fs::path path;
  explicit ScratchFile(const std::string& stem)
      : path(fs::temp_directory_path() / ("qcoh_test_" + stem + ".json")) {}
  ~ScratchFile() {
    std::error_code ec;
    fs::remove(path, ec);
  }
  void put(const std::string& text) const {
    std::ofstream out(path);
    out << text;
  }
  std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("two qubit state files round trip") {
  ScratchFile f("roundtrip4");
  SplitRng rng(RngSeed{600});
  const TwoQubitState rho = random_mixed(rng, 3);
  write_state_file(f.str(), rho.matrix());
  const TwoQubitState back = read_two_qubit_file(f.str());
  CHECK(support::max_abs_diff(back.matrix(), rho.matrix()) < 1e-15);

  // And through the variant reader.
  const StateFile any = read_state_file(f.str());
  REQUIRE(std::holds_alternative<TwoQubitState>(any));
  CHECK(support::max_abs_diff(std::get<TwoQubitState>(any).matrix(),
                              rho.matrix()) < 1e-15);
}

TEST_CASE("single qubit state files round trip") {
  ScratchFile f("roundtrip2");
  ComplexMatrix m(2, {0.75, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.25});
  write_state_file(f.str(), m);
  const StateFile any = read_state_file(f.str());
  REQUIRE(std::holds_alternative<SingleQubitState>(any));
  CHECK(support::max_abs_diff(std::get<SingleQubitState>(any).matrix(), m) <
        1e-15);
  // A dim-2 file is not a two-qubit state.
  CHECK_THROWS_AS(read_two_qubit_file(f.str()), ParseError);
}

TEST_CASE("flat row major payloads are accepted") {
  ScratchFile f("flat");
  f.put(R"({"dim": 2, "re": [0.5, 0, 0, 0.5], "im": [0, 0, 0, 0]})");
  const StateFile any = read_state_file(f.str());
  REQUIRE(std::holds_alternative<SingleQubitState>(any));
  CHECK(std::get<SingleQubitState>(any).matrix()(1, 1).real() ==
        doctest::Approx(0.5));

  ScratchFile g("flat4");
  std::string re = "[0.25,0,0,0, 0,0.25,0,0, 0,0,0.25,0, 0,0,0,0.25]";
  std::string im = "[0,0,0,0, 0,0,0,0, 0,0,0,0, 0,0,0,0]";
  g.put(std::string(R"({"dim": 4, "re": )") + re + R"(, "im": )" + im + "}");
  CHECK(std::holds_alternative<TwoQubitState>(read_state_file(g.str())));
}

TEST_CASE("writer emits the nested rows form") {
  ScratchFile f("nested");
  write_state_file(f.str(), ComplexMatrix::identity(2) * cplx(0.5));
  const auto j = nlohmann::json::parse(slurp(f.path));
  CHECK(j["dim"] == 2);
  REQUIRE(j["re"].is_array());
  REQUIRE(j["re"].size() == 2);
  CHECK(j["re"][0].is_array());
  CHECK(j["re"][0][0] == 0.5);
  CHECK(j["im"][1][0] == 0.0);
}

TEST_CASE("schema violations raise parse errors") {
  auto expect_parse_error = [](const std::string& stem, const std::string& text) {
    ScratchFile f(stem);
    f.put(text);
    CHECK_THROWS_AS(read_state_file(f.str()), ParseError);
  };
  expect_parse_error("garbage", "this is not json");
  expect_parse_error("toplevel", "[1, 2, 3]");
  expect_parse_error("nodim", R"({"re": [[1,0],[0,0]], "im": [[0,0],[0,0]]})");
  expect_parse_error("fracdim", R"({"dim": 2.5, "re": [], "im": []})");
  expect_parse_error("baddim", R"({"dim": 3, "re": [], "im": []})");
  expect_parse_error("nore", R"({"dim": 2, "im": [[0,0],[0,0]]})");
  expect_parse_error("noim", R"({"dim": 2, "re": [[1,0],[0,0]]})");
  expect_parse_error("shortrow", R"({"dim": 2, "re": [[1],[0,0]], "im": [[0,0],[0,0]]})");
  expect_parse_error("badlen", R"({"dim": 2, "re": [1,0,0], "im": [0,0,0,0]})");
  expect_parse_error("strings", R"({"dim": 2, "re": [["a",0],[0,0]], "im": [[0,0],[0,0]]})");
  expect_parse_error("renotarray", R"({"dim": 2, "re": 7, "im": [[0,0],[0,0]]})");
}

TEST_CASE("missing files raise io errors") {
  CHECK_THROWS_AS(read_state_file("/nonexistent/qcoh/state.json"), IoError);
}

TEST_CASE("well formed but unphysical content fails validation") {
  ScratchFile f("nonpsd");
  // Hermitian, unit trace, but with a negative eigenvalue.
  f.put(R"({"dim": 2, "re": [[1.2, 0], [0, -0.2]], "im": [[0, 0], [0, 0]]})");
  CHECK_THROWS_AS(read_state_file(f.str()), ValidationError);

  ScratchFile g("nonherm");
  g.put(R"({"dim": 2, "re": [[0.5, 0.3], [0.0, 0.5]], "im": [[0, 0], [0, 0]]})");
  CHECK_THROWS_AS(read_state_file(g.str()), ValidationError);
}

TEST_CASE("state serialization preserves every entry") {
  const TwoQubitState rho = bell_state(BellKind::PsiMinus);
  const auto j = state_to_json(rho.matrix());
  CHECK(j["dim"] == 4);
  CHECK(j["re"][1][1] == 0.5);
  CHECK(j["re"][1][2] == -0.5);
  CHECK(j["im"][1][2] == 0.0);
}

TEST_CASE("bound report serialization") {
  const auto j = to_json(make_bound_report("demo", 1.5, 2.0));
  CHECK(j["name"] == "demo");
  CHECK(j["quantity"] == 1.5);
  CHECK(j["bound"] == 2.0);
  CHECK(j["slack"] == 0.5);
  CHECK(j["satisfied"] == true);
}

TEST_CASE("tomography report serialization") {
  const auto exact = to_json(run_tomography(werner(0.8)));
  REQUIRE(exact["settings"].size() == 16);
  CHECK(exact["settings"][0].size() == 4);
  REQUIRE(exact["m"].size() == 16);
  REQUIRE(exact["stokes"].size() == 15);
  CHECK(exact["p2x2"].get<double>() == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(exact["physical"] == true);
  CHECK(exact["shots"].is_null());

  const auto shot = to_json(run_tomography(werner(0.8), 2000, RngSeed{3}));
  CHECK(shot["shots"] == 2000);
}

TEST_CASE("generation experiment serialization") {
  const auto j = to_json(run_pdc(0.6, ChannelKind::Unitary, 0.0, RngSeed{4}));
  CHECK(j["p2_pump"] == 0.6);
  CHECK(j["bound"].get<double>() ==
        doctest::Approx(p2x2_bound(0.6)).epsilon(1e-14));
  CHECK(j["p2x2_si"].is_number());
  CHECK(j["slack"].is_number());
  CHECK(j["majorization_ok"] == true);
}
