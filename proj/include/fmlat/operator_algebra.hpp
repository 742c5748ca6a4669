#pragma once

#include "fmlat/core_ring.hpp"
#include "fmlat/matrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fmlat {

// Linear endomorphism of the even Chow ring of the standard K3 model, as a
// 4x4 matrix acting on (r, s, t, p) column vectors. `label` records how the
// operator was constructed.
struct Operator {
  Matrix matrix = Matrix(4, 4);
  std::string label;

  static Operator identity();
};

enum class GoldenName {
  TensorL1,
  TensorSigma,
  PiPushPull,
  PiPushPullSigma,
  FM_Pd,
  Tw_d,
  FM_Fd,
  A_S,
  A_Sprime,
  A_TL,
  B_S,
};

const std::vector<GoldenName>& all_golden_names();
std::string_view name_of(GoldenName n);
// Throws InputError for unknown names.
GoldenName parse_golden_name(std::string_view s);
bool depends_on_d(GoldenName n);

struct GoldenParams {
  std::int64_t d = 1;
  // A_TL only: divisor coefficients (sigma, f).
  RVec divisor = {Rational(1), Rational(0)};
};

// v -> c.v
Operator op_tensor(const CohClass& c);

// Pullback of the pushforward to the base curve:
// (r, s.sigma + t.f, p) -> (s, (2r - s + p) f, 0).
CohClass pi_pull_push(const CohClass& w);

// v -> pi^* pi_* (v.c)
Operator op_pi_tensor(const CohClass& c);

// The class ch(p_{2*} P_d (x) omega_pi) = (d, -sigma + (d^2+d) f, -2d-1).
CohClass tw_class(std::int64_t d);

// Constructs `name` by composing op_tensor / op_pi_tensor / identity only.
// B_S is a 2x2 matrix and has no operator form: use restrict2(build(A_S)).
Operator build(GoldenName name, const GoldenParams& params = {});

// Literal reference matrices with d (or the divisor) substituted.
Matrix golden(GoldenName name, const GoldenParams& params = {});

Operator compose(const Operator& outer, const Operator& inner);
Operator add(const Operator& a, const Operator& b);
Operator negate(const Operator& a);
// Throws SingularMatrixError.
Operator invert(const Operator& a);

CohClass apply(const Operator& op, const CohClass& v);

// The (rank, fdeg) block. Throws ReductionError when rows r, s depend on t or p.
Matrix restrict2(const Operator& op);
Matrix restrict2(const Matrix& m);

// A^T G A == G for the Euler pairing Gram matrix G.
bool pairing_preserved(const Operator& op);
bool pairing_preserved(const Matrix& m);

}  // namespace fmlat
