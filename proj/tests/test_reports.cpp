#include "doctest.h"
#include "support.hpp"

#include "fmlat/error.hpp"
#include "fmlat/reports.hpp"

using namespace fmlat;

namespace {
template <class R, class F>
void round_trip(const R& r, F from) {
  auto j = to_json(r);
  CHECK(j.at("schema") == kSchemaVersion);
  auto text = j.dump(2);
  CHECK(from(json::parse(text)) == r);
  CHECK(to_json(from(json::parse(text))).dump(2) == text);
}
}  // namespace

TEST_CASE("exact numbers in JSON") {
  CHECK(rational_to_json(Rational(3)) == json(3));
  CHECK(rational_to_json(Rational(-1, 2)) == json("-1/2"));
  CHECK(rational_from_json(json("5/10")) == Rational(1, 2));
  CHECK(rational_from_json(json(-4)) == -4);
  CHECK_THROWS_AS(rational_from_json(json(0.5)), InputError);
  auto v = support::k3(1, Rational(1, 3), 0, -2);
  CHECK(class_from_json(class_to_json(v)) == v);
}

TEST_CASE("verify report round trip") {
  VerifyOptions o;
  o.d_lo = o.d_hi = 2;
  round_trip(run_verify(o), verify_from_json);
}

TEST_CASE("sd report round trip") {
  SDRequest req;
  req.v = support::k3(1, 0, 0, -2);
  req.w = support::k3(1, 1, 4, -2);
  req.phi = {3, 1, -7, -2};
  req.theorems = {SDTheorem::K3, SDTheorem::General};
  round_trip(sd_report(req), sd_report_from_json);
  SDRequest bare;
  bare.d_v = 6;
  bare.d_w = 0;
  bare.phi = {3, 1, -7, -2};
  round_trip(sd_report(bare), sd_report_from_json);
}

TEST_CASE("matrix, transform and chi reports round trip") {
  MatrixReport m{"A_TL", std::nullopt, RVec{Rational(1, 2), 3}, "golden", "golden",
                 golden(GoldenName::A_TL, GoldenParams{1, {Rational(1, 2), 3}})};
  round_trip(m, matrix_report_from_json);
  TransformReport t{"FM_Pd", 3, std::nullopt, {1, 0, Rational(2, 7), 0}, {0, -1, 1, 1}};
  round_trip(t, transform_report_from_json);
  ChiReport c{"k3", support::k3(1, 0, 0, -2), support::k3(1, 0, 0, 0), 0};
  round_trip(c, chi_report_from_json);
}

TEST_CASE("search report round trip") {
  SearchReport plain{1, 6, std::nullopt, search_phi(1, 6)};
  round_trip(plain, search_report_from_json);
  SearchTarget t{6, 0, SDTheorem::K3, {}, {}};
  SearchReport targeted{1, 8, t, search_phi(1, 8, t)};
  round_trip(targeted, search_report_from_json);
}

TEST_CASE("wrong kind is rejected") {
  ChiReport c{"k3", support::k3(1, 0, 0, 0), support::k3(1, 0, 0, 0), 2};
  CHECK_THROWS_AS(matrix_report_from_json(to_json(c)), InputError);
}

TEST_CASE("verify suite") {
  auto out = run_verify(VerifyOptions{1, 3, std::nullopt});
  CHECK(out.all_pass());
  CHECK(out.failed == 0);
  bool found = false;
  for (const auto& c : out.cases) found = found || c.id == "golden_vs_built:FM_Pd:d=1";
  CHECK(found);
  auto bad = run_verify(VerifyOptions{1, 1, GoldenName::A_S});
  CHECK_FALSE(bad.all_pass());
  CHECK_THROWS_AS(run_verify(VerifyOptions{0, 3, std::nullopt}), InputError);
  CHECK_THROWS_AS(run_verify(VerifyOptions{3, 2, std::nullopt}), InputError);
  CHECK_THROWS_AS(run_verify(VerifyOptions{1, 65, std::nullopt}), InputError);
}
