#include "doctest.h"
#include "cli_runner.hpp"

#include "fmlat/reports.hpp"

#include <cstdlib>

using namespace fmlat;

namespace {

template <class F>
void json_round_trips(const std::string& args, F from, int exit_code = 0) {
  auto r = cli::run("--json " + args);
  CAPTURE(args);
  REQUIRE(r.exit_code == exit_code);
  auto j = json::parse(r.out);
  CHECK(j.at("schema") == 1);
  CHECK(to_json(from(j)) == j);
  CHECK(json::parse(j.dump()) == j);
}

}  // namespace

TEST_CASE("verify exits 0 over 1..6") {
  auto r = cli::run("verify --d-range 1..6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0 failed") != std::string::npos);
}

TEST_CASE("verify JSON contains the documented case ids") {
  auto r = cli::run("verify --d-range 1..1 --json");
  REQUIRE(r.exit_code == 0);
  auto j = json::parse(r.out);
  bool found = false;
  for (const auto& c : j.at("cases")) found = found || c.at("id") == "golden_vs_built:FM_Pd:d=1";
  CHECK(found);
}

TEST_CASE("worked examples on the command line") {
  CHECK(cli::run("transform --matrix FM_Pd --d 1 --vector 1,0,0,0").out == "0, -1, 0, 1\n");
  auto sd = cli::run("sd-check --phi 3,1,-7,-2 --dv 6 --dw 0 --theorem k3");
  CHECK(sd.exit_code == 0);
  CHECK(sd.out.find("rk Xi v = 3, rk Phi w = 3") != std::string::npos);
  CHECK(sd.out.find("k3 check:    pass") != std::string::npos);
  auto chi = cli::run("chi --surface '" FMLAT_DATA_DIR "/k3.cfg' --v 1,0,0,-2 --w 1,0,0,0");
  CHECK(chi.exit_code == 0);
  CHECK(chi.out == "0\n");
  auto m = cli::run("matrix FM_Pd --d 3");
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("[  1   6  -1   3 ]") != std::string::npos);
}

TEST_CASE("rationals on the command line") {
  CHECK(cli::run("transform --matrix A_S --vector 1/2,0,0,1/3").out == "-1/2, 0, 4/3, -1/3\n");
  CHECK(cli::run("chi --v 1/2,0,0,0 --w 1,0,0,0").out == "1\n");
}

TEST_CASE("surface from the environment") {
  setenv("FMLAT_SURFACE", "/nonexistent/surface.cfg", 1);
  CHECK(cli::run("chi --v 1,0,0,0 --w 1,0,0,0").exit_code == 2);
  setenv("FMLAT_SURFACE", FMLAT_DATA_DIR "/k3.cfg", 1);
  CHECK(cli::run("chi --v 1,0,0,0 --w 1,0,0,0").out == "2\n");
  unsetenv("FMLAT_SURFACE");
}

TEST_CASE("JSON output round-trips for every report type") {
  json_round_trips("verify --d-range 1..2", verify_from_json);
  json_round_trips("matrix FM_Fd --d 4", matrix_report_from_json);
  json_round_trips("matrix A_TL --divisor 1/2,3 --source golden", matrix_report_from_json);
  json_round_trips("matrix A_S --source grr", matrix_report_from_json);
  json_round_trips("transform --matrix FM_Pd --d 2 --vector 1,1/2,0,-3", transform_report_from_json);
  json_round_trips("chi --v 1,0,0,-2 --w 1,1,4,-2", chi_report_from_json);
  json_round_trips("sd-check --phi 3,1,-7,-2 --dv 6 --dw 0", sd_report_from_json);
  json_round_trips("sd-check --phi 3,1,-7,-2 --v 1,0,0,-2 --w 1,1,4,-2 --theorem k3 --theorem general "
                   "--attest-no-higher-cohomology",
                   sd_report_from_json, 1);
  json_round_trips("search --bound 7", search_report_from_json);
  json_round_trips("search --bound 8 --dv 6 --dw 0", search_report_from_json);
}

TEST_CASE("check failures exit 1") {
  auto r = cli::run("verify --d-range 1..1 --corrupt-golden FM_Pd");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("first difference at (1,1): 0 vs 1") != std::string::npos);
  CHECK(cli::run("sd-check --phi 3,1,-7,-2 --dv 5 --dw 0").exit_code == 1);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(cli::run("").exit_code == 2);
  CHECK(cli::run("frobnicate").exit_code == 2);
  CHECK(cli::run("verify --d-range 0..3").exit_code == 2);
  CHECK(cli::run("verify --d-range 1..65").exit_code == 2);
  CHECK(cli::run("verify --d-range six").exit_code == 2);
  CHECK(cli::run("matrix FM_Qd").exit_code == 2);
  CHECK(cli::run("matrix FM_Pd --d 0").exit_code == 2);
  CHECK(cli::run("transform --matrix FM_Pd --vector 1,0").exit_code == 2);
  CHECK(cli::run("transform --matrix FM_Pd --vector 1,0,x,0").exit_code == 2);
  CHECK(cli::run("chi --surface /nonexistent.cfg --v 1,0,0,0 --w 1,0,0,0").exit_code == 2);
  CHECK(cli::run("sd-check --phi 1,1,0,1 --dv 6 --dw 0").exit_code == 2);
  CHECK(cli::run("sd-check --phi 3,1,-7 --dv 6 --dw 0").exit_code == 2);
  CHECK(cli::run("sd-check --phi 3,1,-7,-2 --dv 6").exit_code == 2);
  CHECK(cli::run("sd-check --phi 3,1,-7,-2 --dv 6 --dw 0 --theorem general").exit_code == 2);
  CHECK(cli::run("sd-check --phi 3,1,-7,-2 --dv 6 --dw 0 --theorem k4").exit_code == 2);
  CHECK(cli::run("search --bound 0").exit_code == 2);
  CHECK(cli::run("search --dv 6").exit_code == 2);
}
