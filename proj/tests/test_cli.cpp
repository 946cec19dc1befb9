#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "qfed/fixtures.hpp"
#include "qfed/sweep.hpp"

using namespace qfed;

namespace {

const char* kMinimalVacuum = R"({
  "layers": [{}],
  "frequency": {"energy_eV": 0.119},
  "positions": {"list_um": [0.0]},
  "quantity": "ldos"
})";

std::string cavity_config() {
  return R"({
  "layers": [
    {},
    {"thickness_um": 1.0, "epsilon_re": 10.0},
    {"thickness_um": 4.5},
    {"thickness_um": 1.0, "epsilon_re": 1.1, "epsilon_im": 0.1,
     "temperature_K": 300.0},
    {"thickness_um": 4.5},
    {"thickness_um": 1.0, "epsilon_re": 10.0},
    {}
  ],
  "frequency": {"energy_eV": 0.119},
  "positions": {"min_um": -2.0, "max_um": 14.0, "count": 9},
  "quantity": "photon-number"
})";
}

}  // namespace

TEST_CASE("minimal homogeneous config parses") {
  RunConfig cfg = parse_config(kMinimalVacuum);
  CHECK(cfg.layers.size() == 1);
  Stack s = cfg.make_stack();
  CHECK(s.num_interfaces() == 0);
  CHECK(cfg.numerics.delta == 1e-9);
  CHECK(cfg.numerics.quad_tol == 1e-8);
  CHECK(cfg.numerics.ldos_units == LdosUnits::reduced);
}

TEST_CASE("config round-trips through serialization") {
  RunConfig a = parse_config(cavity_config());
  std::string text = serialize_config(a);
  RunConfig b = parse_config(text);
  CHECK(serialize_config(b) == text);
  CHECK(b.layers.size() == 7);
  CHECK(b.layers[3].epsilon_im == 0.1);
  CHECK(b.frequency.min_ev == 0.119);
}

TEST_CASE("config rejections name the offending field") {
  SUBCASE("unknown key") {
    const char* text = R"({
      "layers": [{}],
      "frequency": {"energy_eV": 0.1},
      "positions": {"list_um": []},
      "quantity": "ldos",
      "wavelength_nm": 500
    })";
    CHECK_THROWS_WITH_AS(parse_config(text),
                         doctest::Contains("wavelength_nm"), ValidationError);
  }
  SUBCASE("unknown layer key") {
    const char* text = R"({
      "layers": [{"epsilon": 2.0}],
      "frequency": {"energy_eV": 0.1},
      "positions": {"list_um": []},
      "quantity": "ldos"
    })";
    CHECK_THROWS_WITH_AS(parse_config(text),
                         doctest::Contains("layers[0].epsilon"),
                         ValidationError);
  }
  SUBCASE("negative thickness names the layer") {
    const char* text = R"({
      "layers": [{}, {"thickness_um": -1.0}, {}],
      "frequency": {"energy_eV": 0.1},
      "positions": {"list_um": []},
      "quantity": "ldos"
    })";
    CHECK_THROWS_WITH_AS(parse_config(text),
                         doctest::Contains("layers[1].thickness_um"),
                         ValidationError);
  }
  SUBCASE("bad quantity") {
    const char* text = R"({
      "layers": [{}],
      "frequency": {"energy_eV": 0.1},
      "positions": {"list_um": []},
      "quantity": "purcell"
    })";
    CHECK_THROWS_AS(parse_config(text), ValidationError);
  }
  SUBCASE("malformed json") {
    CHECK_THROWS_AS(parse_config("{"), ValidationError);
  }
}

TEST_CASE("csv emission layout") {
  ResultTable t;
  t.columns = {"a", "b,c"};
  t.units = {"eV", "1"};
  t.config_hash = "deadbeef";
  t.add_row({1.5, std::string("x\"y")});
  const std::string csv = emit(t, OutputFormat::csv);
  // header, units row, one data row
  CHECK(csv == "a,\"b,c\"\n#eV,1\n1.50000000000000000e+00,\"x\"\"y\"\n");
}

TEST_CASE("json emission round-trips numbers bit-exactly") {
  ResultTable t;
  t.columns = {"v"};
  t.units = {"1"};
  t.config_hash = "00";
  const double value = 0.1 + 0.2;  // not representable exactly
  t.add_row({value});
  t.add_row({1.2345678901234567e-123});
  const std::string text = emit(t, OutputFormat::json);
  auto parsed = nlohmann::json::parse(text);
  CHECK(parsed["rows"][0][0].get<double>() == value);
  CHECK(parsed["rows"][1][0].get<double>() == 1.2345678901234567e-123);
  CHECK(parsed["meta"]["tool_version"] == kToolVersion);
  CHECK(parsed["columns"][0] == "v");
}

TEST_CASE("row width mismatch is rejected") {
  ResultTable t;
  t.columns = {"a", "b"};
  t.units = {"1", "1"};
  CHECK_THROWS_AS(t.add_row({1.0}), ValidationError);
}

TEST_CASE("photon number sweep at uniform temperature is constant") {
  const char* text = R"({
    "layers": [{"epsilon_re": 2.0, "epsilon_im": 0.3, "temperature_K": 300.0}],
    "frequency": {"energy_eV": 0.119},
    "positions": {"min_um": -1.0, "max_um": 1.0, "count": 5},
    "quantity": "photon-number"
  })";
  RunConfig cfg = parse_config(text);
  ResultTable t = run_sweep(cfg, 2);
  REQUIRE(t.rows.size() == 5);
  const double eta = bose_einstein(omega_from_ev(0.119), 300.0);
  for (const auto& row : t.rows) {
    CHECK(std::get<double>(row[4]) == doctest::Approx(eta).epsilon(1e-8));
  }
}

TEST_CASE("sweep ordering is omega-major and worker-independent") {
  const char* text = R"({
    "layers": [{"epsilon_re": 2.0, "epsilon_im": 0.3, "temperature_K": 250.0}],
    "frequency": {"energy_min_eV": 0.1, "energy_max_eV": 0.2, "count": 3},
    "positions": {"list_um": [-0.5, 0.5]},
    "quantity": "net-emission"
  })";
  RunConfig cfg = parse_config(text);
  ResultTable a = run_sweep(cfg, 1);
  ResultTable b = run_sweep(cfg, 4);
  REQUIRE(a.rows.size() == 6);
  // omega-major ordering
  CHECK(std::get<double>(a.rows[0][0]) == doctest::Approx(0.1));
  CHECK(std::get<double>(a.rows[1][0]) == doctest::Approx(0.1));
  CHECK(std::get<double>(a.rows[2][0]) == doctest::Approx(0.15));
  CHECK(std::get<double>(a.rows[0][1]) == doctest::Approx(-0.5));
  CHECK(std::get<double>(a.rows[1][1]) == doctest::Approx(0.5));
  // deterministic across worker counts
  REQUIRE(b.rows.size() == a.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(std::get<double>(a.rows[i][2]) == std::get<double>(b.rows[i][2]));
  }
  CHECK(emit(a, OutputFormat::csv) == emit(b, OutputFormat::csv));
}

TEST_CASE("empty position grid yields an empty table with headers") {
  const char* text = R"({
    "layers": [{"epsilon_im": 0.1}],
    "frequency": {"energy_eV": 0.119},
    "positions": {"min_um": 0.0, "max_um": 0.0, "count": 0},
    "quantity": "ldos"
  })";
  RunConfig cfg = parse_config(text);
  ResultTable t = run_sweep(cfg, 1);
  CHECK(t.rows.empty());
  CHECK(t.columns.size() == 5);
}

TEST_CASE("ldos sweep honors the unit toggle") {
  const char* base = R"({
    "layers": [{}],
    "frequency": {"energy_eV": 0.119},
    "positions": {"list_um": [0.0]},
    "quantity": "ldos",
    "numerics": {"ldos_units": "%s"}
  })";
  char reduced_text[512], si_text[512];
  std::snprintf(reduced_text, sizeof(reduced_text), base, "reduced");
  std::snprintf(si_text, sizeof(si_text), base, "si");
  ResultTable p = run_sweep(parse_config(reduced_text), 1);
  ResultTable s = run_sweep(parse_config(si_text), 1);
  // vacuum: rho_e = 1/(pi c S), i.e. 0.5 in units of 2/(pi c S)
  CHECK(std::get<double>(p.rows[0][2]) == doctest::Approx(0.5).epsilon(1e-12));
  const PhysicalConstants pc;
  CHECK(std::get<double>(s.rows[0][2]) ==
        doctest::Approx(1.0 / (M_PI * pc.c * pc.S)).epsilon(1e-12));
}

TEST_CASE("nldos kernel sweep needs a field position") {
  const char* text = R"({
    "layers": [{"epsilon_im": 0.1}],
    "frequency": {"energy_eV": 0.119},
    "positions": {"list_um": [0.0]},
    "quantity": "nldos"
  })";
  CHECK_THROWS_WITH_AS(parse_config(text),
                       doctest::Contains("field_position_um"), ValidationError);
}

TEST_CASE("verify quantity emits one row per check") {
  const char* text = R"({
    "layers": [{"epsilon_re": 2.0, "epsilon_im": 0.3, "temperature_K": 300.0}],
    "frequency": {"energy_eV": 0.119},
    "quantity": "verify"
  })";
  RunConfig cfg = parse_config(text);
  ResultTable t = run_sweep(cfg, 2);
  CHECK(t.rows.size() == 6);
  int passes = 0;
  for (const auto& row : t.rows) {
    if (std::get<std::string>(row[4]) == "pass") passes++;
  }
  CHECK(passes == 6);
}

TEST_CASE("solver errors carry the offending grid point") {
  // lossless stack without floor: photon numbers are degenerate
  const char* text = R"({
    "layers": [{}],
    "frequency": {"energy_eV": 0.119},
    "positions": {"list_um": [0.25]},
    "quantity": "photon-number",
    "numerics": {"delta": 0.0}
  })";
  RunConfig cfg = parse_config(text);
  CHECK_THROWS_WITH_AS(run_sweep(cfg, 1), doctest::Contains("0.119"), Error);
}

TEST_CASE("cli binary end to end") {
  const char* exe = std::getenv("QFED_CLI");
  if (!exe) return;  // only run under ctest where the path is exported
  const std::string dir = "cli_test_tmp";
  std::remove((dir + "_cfg.json").c_str());
  {
    std::string cmd = std::string(exe) + " fixtures --out " + dir + "_cfg.json";
    REQUIRE(std::system(cmd.c_str()) == 0);
  }
  {
    std::ifstream in(dir + "_cfg.json");
    REQUIRE(in.good());
    nlohmann::json cfg = nlohmann::json::parse(in);
    CHECK(cfg["layers"].size() == 7);
    CHECK(cfg["layers"][3]["epsilon_im"] == 0.1);
  }
  {
    // shrink the grid so the end-to-end run stays fast
    std::ifstream in(dir + "_cfg.json");
    nlohmann::json cfg = nlohmann::json::parse(in);
    cfg["positions"]["count"] = 5;
    std::ofstream out(dir + "_cfg.json");
    out << cfg.dump();
  }
  {
    std::string cmd = std::string(exe) + " run --config " + dir +
                      "_cfg.json --format json --out " + dir + "_out.json";
    REQUIRE(std::system(cmd.c_str()) == 0);
    std::ifstream in(dir + "_out.json");
    nlohmann::json out = nlohmann::json::parse(in);
    CHECK(out["rows"].size() == 5);
    CHECK(out["columns"][2] == "rho_e");
  }
  {
    std::string cmd = std::string(exe) + " verify --config " + dir +
                      "_cfg.json --format csv --out " + dir + "_verify.csv";
    REQUIRE(std::system(cmd.c_str()) == 0);
  }
  std::remove((dir + "_cfg.json").c_str());
  std::remove((dir + "_out.json").c_str());
  std::remove((dir + "_verify.csv").c_str());
}
