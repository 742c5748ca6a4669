// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include "cli_runner.hpp"
#include "support.hpp"

#include "fmlat/bridgeland.hpp"
#include "fmlat/error.hpp"
#include "fmlat/operator_algebra.hpp"
#include "fmlat/product_calculus.hpp"
#include "fmlat/reports.hpp"
#include "fmlat/sd_engine.hpp"

#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace fmlat;
using support::k3;
using support::to_matrix;
namespace C = fmlat::classes;

namespace {

const SurfaceDescriptor K3 = SurfaceDescriptor::standard_k3();

GoldenParams at(std::int64_t d) { return GoldenParams{d, {1, 0}}; }

// Collects the first failure for the summary line.
struct Tally {
  std::int64_t checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && first_failure.empty()) first_failure = what;
  }
  bool ok() const { return first_failure.empty(); }
};

std::string d_tag(const char* name, std::int64_t d) { return std::string(name) + " d=" + std::to_string(d); }

Tally golden_vs_built() {
  Tally t;
  for (std::int64_t d = 1; d <= 12; ++d) {
    t.expect(build(GoldenName::FM_Pd, at(d)).matrix == golden(GoldenName::FM_Pd, at(d)), d_tag("FM_Pd", d));
    t.expect(golden(GoldenName::FM_Pd, at(d)) == to_matrix(oracle::fm_pd(d)), d_tag("FM_Pd table", d));
    t.expect(build(GoldenName::FM_Fd, at(d)).matrix == golden(GoldenName::FM_Fd, at(d)), d_tag("FM_Fd", d));
    t.expect(golden(GoldenName::FM_Fd, at(d)) == to_matrix(oracle::fm_fd(d)), d_tag("FM_Fd table", d));
    t.expect(op_tensor(ch_line_bundle(K3, {d + 1, 2 * (d + 1)})).matrix == golden(GoldenName::TensorL1, at(d)),
             d_tag("TensorL1", d));
    t.expect(golden(GoldenName::TensorL1, at(d)) == to_matrix(oracle::tensor_l1(d)), d_tag("TensorL1 table", d));
    t.expect(op_tensor(tw_class(d)).matrix == golden(GoldenName::Tw_d, at(d)), d_tag("Tw_d", d));
    t.expect(golden(GoldenName::Tw_d, at(d)) == to_matrix(oracle::tw(d)), d_tag("Tw_d table", d));
  }
  auto sigma = ch_line_bundle(K3, {1, 0});
  t.expect(op_tensor(sigma).matrix == golden(GoldenName::TensorSigma), "TensorSigma");
  t.expect(golden(GoldenName::TensorSigma) == to_matrix(oracle::tensor_sigma()), "TensorSigma table");
  t.expect(compose(op_pi_tensor(CohClass::unit(2)), op_tensor(sigma)).matrix == golden(GoldenName::PiPushPullSigma),
           "PiPushPullSigma composition");
  t.expect(golden(GoldenName::PiPushPullSigma) == to_matrix(oracle::pi_push_pull_sigma()), "PiPushPullSigma table");
  t.expect(op_pi_tensor(CohClass::unit(2)).matrix == golden(GoldenName::PiPushPull), "PiPushPull");
  auto as = add(op_pi_tensor(CohClass::unit(2)), negate(Operator::identity()));
  t.expect(as.matrix == golden(GoldenName::A_S), "A_S");
  t.expect(golden(GoldenName::A_S) == to_matrix(oracle::a_s()), "A_S table");
  return t;
}

Tally grr_oracle() {
  Tally t;
  for (std::int64_t d = 1; d <= 6; ++d)
    t.expect(fm_matrix(kernel_class(Kernel::Pd(d)), FMOrientation::PushFirstPullSecond).matrix ==
                 golden(GoldenName::FM_Pd, at(d)),
             d_tag("FM_Pd via kernel", d));
  t.expect(fm_matrix(kernel_class(Kernel::IDelta()), FMOrientation::PushSecondPullFirst).matrix ==
               golden(GoldenName::A_S),
           "A_S via kernel");
  return t;
}

Tally product_fixtures() {
  Tally t;
  t.expect(todd_product() == C::unit() + 2 * C::x_point() + 2 * C::point_x() + 4 * C::point(), "td(XxX)");
  t.expect(diag_push_grr(CohClass::unit(2)) == C::diagonal() - 2 * C::point(), "diag_push_grr(1)");
  t.expect(kernel_class(Kernel::IDelta()) ==
               C::fiber_product() - C::fiber_square() - C::diagonal() + 2 * C::point(),
           "kernel IDelta");
  for (std::int64_t d = 1; d <= 12; ++d) {
    auto pushed = pushforward_second(kernel_class(Kernel::Pd(d)));
    t.expect(pushed == k3(d, -1, d * d - d, 1 - 2 * d), d_tag("pushforward", d));
    auto twisted = mult(K3, pushed, ch_omega_pi());
    t.expect(twisted == k3(d, -1, d * d + d, -2 * d - 1), d_tag("omega twist", d));
    t.expect(op_tensor(twisted).matrix == golden(GoldenName::Tw_d, at(d)), d_tag("twist vs Tw_d", d));
  }
  return t;
}

Tally inverse_identity() {
  Tally t;
  t.expect(-golden(GoldenName::A_S).inverse() == golden(GoldenName::A_Sprime), "-A_S^-1 = A_Sprime");
  t.expect(golden(GoldenName::A_Sprime) == to_matrix(oracle::a_sprime()), "A_Sprime table");
  return t;
}

Tally pairing() {
  Tally t;
  const Matrix G = to_matrix(oracle::gram());
  t.expect(euler_gram_k3() == G, "Gram matrix");
  for (std::int64_t d = 1; d <= 12; ++d) {
    auto A = golden(GoldenName::FM_Pd, at(d));
    t.expect(A.transpose() * G * A == G, d_tag("FM_Pd", d));
    auto I = oracle::fm_pd(d);
    t.expect(oracle::mul(oracle::mul(oracle::transpose(I), oracle::gram()), I) == oracle::gram(),
             d_tag("FM_Pd integer check", d));
    // Recorded fixture: FM_Fd preserves the pairing.
    t.expect(pairing_preserved(golden(GoldenName::FM_Fd, at(d))) == true, d_tag("FM_Fd fixture", d));
  }
  return t;
}

Tally reductions() {
  Tally t;
  for (std::int64_t d = 1; d <= 12; ++d) {
    auto m = restrict2(build(GoldenName::FM_Pd, at(d)));
    t.expect(m == Matrix{{0, 1}, {-1, d}}, d_tag("restrict2 FM_Pd", d));
    t.expect(m.determinant() == 1, d_tag("det FM_Pd", d));
  }
  t.expect(restrict2(golden(GoldenName::A_S)) == Matrix{{-1, 1}, {0, -1}}, "restrict2 A_S");
  t.expect(restrict2(golden(GoldenName::A_S)) == golden(GoldenName::B_S), "B_S");
  for (int x = -5; x <= 5; ++x)
    for (int y = -2; y <= 2; ++y) {
      RVec D{x, y};
      auto m = restrict2(op_tensor(ch_line_bundle(K3, D)));
      t.expect(m == Matrix{{1, 0}, {fdeg(K3, ch_line_bundle(K3, D)), 1}}, "restrict2 A_TL");
      t.expect(m == Matrix{{1, 0}, {x, 1}}, "restrict2 A_TL literal");
    }
  return t;
}

Tally family_relations() {
  Tally t;
  std::mt19937_64 rng(0xF00D);
  std::uniform_int_distribution<std::int64_t> R(1, 50), D(-50, 50);
  const Int2x2 minus_i = {{{-1, 0}, {0, -1}}};
  for (int i = 0; i < 100; ++i) {
    auto p = oracle::random_admissible(rng, 50);
    auto f = phi_family(p.c, p.a, p.e, p.b);
    oracle::M2 phi{{{p.c, p.a}, {p.e, p.b}}}, psi{{{-p.b, p.a}, {p.e, -p.c}}};
    oracle::M2 omega{{{p.b, p.a}, {p.e, p.c}}}, xi{{{-p.c, p.a}, {p.e, -p.b}}}, mi{{{-1, 0}, {0, -1}}};
    t.expect(f.phi * f.psi == minus_i && f.psi * f.phi == minus_i, "phi psi");
    t.expect(f.xi * f.omega == minus_i && f.omega * f.xi == minus_i, "xi omega");
    t.expect(oracle::mul2(phi, psi) == mi && oracle::mul2(psi, phi) == mi, "phi psi (oracle)");
    t.expect(oracle::mul2(xi, omega) == mi && oracle::mul2(omega, xi) == mi, "xi omega (oracle)");
    for (int k = 0; k < 10; ++k) {
      std::int64_t r = R(rng), d = D(rng);
      auto w = transform2(negated(f.psi), {r, d});
      if (w.rk > 0 && p.c > 0) t.expect(p.a * (p.e * r - p.c * d) < p.c * w.rk, "slope inequality");
    }
  }
  return t;
}

Tally canonical() {
  Tally t;
  for (std::int64_t r = 2; r <= 50; ++r)
    for (std::int64_t d = -50; d <= 50; ++d) {
      if (std::gcd(r, d) != 1) continue;
      auto want = oracle::canonical_ab(r, d);
      t.expect(want && canonical_ab(r, d) == *want, "canonical_ab(" + std::to_string(r) + "," + std::to_string(d) + ")");
    }
  return t;
}

Tally worked_example() {
  Tally t;
  auto phi = make_sd_phi(3, 1, -7, -2, 1);
  auto pass = sd_check(SDTheorem::K3, phi, 6, 0);
  t.expect(pass.verdict == TriState::Pass, "d_v=6 passes");
  t.expect(pass.margin_v == 1 && pass.margin_w == 1, "margins (1,1)");
  t.expect(pass.ranks == TransformedRanks{3, 3}, "ranks (3,3)");
  auto fail = sd_check(SDTheorem::K3, phi, 5, 0);
  t.expect(fail.verdict == TriState::Fail && fail.margin_v <= 0 && fail.margin_w > 0, "d_v=5 fails first");
  return t;
}

Tally base_case() {
  Tally t;
  std::mt19937_64 rng(0xB45E);
  std::uniform_int_distribution<std::int64_t> u(-6, 6), kk(1, 15), coin(0, 1);
  for (int i = 0; i < 200; ++i) {
    std::int64_t s = u(rng), tt = u(rng), k = kk(rng);
    std::int64_t chiL = oracle::chi_line(s, tt);
    std::int64_t l = coin(rng) ? chiL - k : kk(rng);
    // w = (1, L, L^2/2 - l); twice its ch2 is L^2 - 2l = 2 (chi(L) - 2) - 2l.
    bool hrr_zero = oracle::chi_twice(1, 0, 0, -2 * k, 1, s, tt, 2 * (chiL - 2) - 2 * l) == 0;
    auto L = ch_line_bundle(K3, {s, tt});
    bool got = orthogonal_check(K3, k3(1, 0, 0, -k), k3(1, s, tt, L.p - l));
    t.expect(got == (k + l == chiL), "orthogonal iff k + l = chi(L)");
    t.expect(got == hrr_zero, "orthogonal vs expansion");
  }
  for (std::int64_t n = 0; n <= 20; ++n) t.expect(moduli_dim_k3(K3, k3(1, 0, 0, -n)) == 2 * n, "dim Hilb^n");
  return t;
}

template <class F>
bool cli_round_trip(const std::string& args, F from) {
  auto r = cli::run("--json " + args);
  if (r.exit_code != 0) return false;
  try {
    auto j = json::parse(r.out);
    return j.at("schema") == kSchemaVersion && to_json(from(j)) == j;
  } catch (const std::exception&) {
    return false;
  }
}

Tally command_line() {
  Tally t;
  t.expect(cli::run("verify --d-range 1..6").exit_code == 0, "verify 1..6 exits 0");
  t.expect(cli_round_trip("verify --d-range 1..1", verify_from_json), "verify JSON");
  t.expect(cli_round_trip("matrix FM_Pd --d 3", matrix_report_from_json), "matrix JSON");
  t.expect(cli_round_trip("transform --matrix FM_Pd --d 1 --vector 1,0,0,0", transform_report_from_json),
           "transform JSON");
  t.expect(cli_round_trip("chi --v 1,0,0,-2 --w 1,0,0,0", chi_report_from_json), "chi JSON");
  t.expect(cli_round_trip("sd-check --phi 3,1,-7,-2 --dv 6 --dw 0", sd_report_from_json), "sd-check JSON");
  t.expect(cli_round_trip("search --bound 8 --dv 6 --dw 0", search_report_from_json), "search JSON");
  t.expect(cli::run("verify --d-range 1..1 --corrupt-golden A_S").exit_code == 1, "corrupted golden exits 1");
  t.expect(cli::run("sd-check --phi 3,1,-7,-2 --dv 5 --dw 0").exit_code == 1, "failed check exits 1");
  t.expect(cli::run("verify --d-range 0..6").exit_code == 2, "bad range exits 2");
  t.expect(cli::run("matrix NoSuchMatrix").exit_code == 2, "unknown matrix exits 2");
  t.expect(cli::run("sd-check --phi 1,1,0,1 --dv 6 --dw 0").exit_code == 2, "inadmissible phi exits 2");
  t.expect(cli::run("").exit_code == 2, "missing command exits 2");
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Tally()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden tables equal built operators", golden_vs_built},
      {2, "kernel route equals golden tables", grr_oracle},
      {3, "product-ring fixtures", product_fixtures},
      {4, "negative inverse of A_S", inverse_identity},
      {5, "pairing preservation", pairing},
      {6, "rank/fiber-degree reductions", reductions},
      {7, "SL2(Z) family relations", family_relations},
      {8, "canonical_ab equals brute force", canonical},
      {9, "worked duality example", worked_example},
      {10, "Hilbert-scheme base case", base_case},
      {11, "command line contract", command_line},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << "criterion " << c.id << ": " << (t.ok() ? "PASS" : "FAIL") << "  " << c.title << " (" << t.checks
         << " checks)";
    if (!t.ok()) line << "  first failure: " << t.first_failure;
    std::cout << line.str() << "\n";
    failed += !t.ok();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
