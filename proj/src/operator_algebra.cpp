#include "fmlat/operator_algebra.hpp"

#include "fmlat/error.hpp"

#include <array>

namespace fmlat {
namespace {

const SurfaceDescriptor& k3() {
  static const SurfaceDescriptor S = SurfaceDescriptor::standard_k3();
  return S;
}

CohClass basis_class(std::size_t i) {
  RVec c(4, Rational(0));
  c[i] = 1;
  return from_coords(c);
}

template <class F>
Matrix materialize(F&& f) {
  Matrix m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    RVec col = to_coords(f(basis_class(j)));
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = col[i];
  }
  return m;
}

CohClass ch_O(const Rational& sigma, const Rational& f) { return ch_line_bundle(k3(), {sigma, f}); }

std::string dstr(std::int64_t d) { return "d=" + std::to_string(d); }

constexpr std::array<std::string_view, 11> kNames = {
    "TensorL1", "TensorSigma", "PiPushPull", "PiPushPullSigma", "FM_Pd", "Tw_d",
    "FM_Fd",    "A_S",         "A_Sprime",   "A_TL",            "B_S"};

}  // namespace

Operator Operator::identity() { return {Matrix::identity(4), "id"}; }

const std::vector<GoldenName>& all_golden_names() {
  static const std::vector<GoldenName> names = {
      GoldenName::TensorL1, GoldenName::TensorSigma, GoldenName::PiPushPull,
      GoldenName::PiPushPullSigma, GoldenName::FM_Pd, GoldenName::Tw_d,
      GoldenName::FM_Fd, GoldenName::A_S, GoldenName::A_Sprime,
      GoldenName::A_TL, GoldenName::B_S};
  return names;
}

std::string_view name_of(GoldenName n) { return kNames[static_cast<std::size_t>(n)]; }

GoldenName parse_golden_name(std::string_view s) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == s) return static_cast<GoldenName>(i);
  throw InputError("unknown matrix name '" + std::string(s) + "'");
}

bool depends_on_d(GoldenName n) {
  return n == GoldenName::TensorL1 || n == GoldenName::FM_Pd || n == GoldenName::Tw_d ||
         n == GoldenName::FM_Fd;
}

Operator op_tensor(const CohClass& c) {
  return {materialize([&](const CohClass& v) { return mult(k3(), c, v); }),
          "tensor" + to_string(c)};
}

CohClass pi_pull_push(const CohClass& w) {
  RVec c = to_coords(w);
  const Rational& r = c[0];
  const Rational& s = c[1];
  const Rational& p = c[3];
  return from_coords({s, 0, 2 * r - s + p, 0});
}

Operator op_pi_tensor(const CohClass& c) {
  return {materialize([&](const CohClass& v) { return pi_pull_push(mult(k3(), v, c)); }),
          "pipushpull" + to_string(c)};
}

CohClass tw_class(std::int64_t d) {
  return from_coords({d, -1, Rational(d) * d + d, -2 * Rational(d) - 1});
}

namespace {

void require_d(const GoldenParams& p) {
  if (p.d < 1) throw InputError("d must be >= 1, got " + std::to_string(p.d));
}

void require_divisor(const GoldenParams& p) {
  if (p.divisor.size() != 2) throw InputError("A_TL needs a divisor with 2 components (sigma, f)");
}

}  // namespace

Operator build(GoldenName name, const GoldenParams& params) {
  const Rational d = params.d;
  switch (name) {
    case GoldenName::TensorL1: {
      require_d(params);
      auto op = op_tensor(ch_O(d + 1, 2 * (d + 1)));
      op.label = "TensorL1(" + dstr(params.d) + ")";
      return op;
    }
    case GoldenName::TensorSigma: {
      auto op = op_tensor(ch_O(1, 0));
      op.label = "TensorSigma";
      return op;
    }
    case GoldenName::PiPushPull: {
      auto op = op_pi_tensor(CohClass::unit(2));
      op.label = "PiPushPull";
      return op;
    }
    case GoldenName::PiPushPullSigma: {
      auto op = op_pi_tensor(ch_O(1, 0));
      op.label = "PiPushPullSigma";
      return op;
    }
    case GoldenName::FM_Pd: {
      require_d(params);
      auto op = compose(build(GoldenName::TensorL1, params),
                        add(build(GoldenName::PiPushPullSigma), negate(build(GoldenName::TensorSigma))));
      op.label = "FM_Pd(" + dstr(params.d) + ") = " + op.label;
      return op;
    }
    case GoldenName::Tw_d: {
      require_d(params);
      auto op = op_tensor(tw_class(params.d));
      op.label = "Tw_d(" + dstr(params.d) + ")";
      return op;
    }
    case GoldenName::FM_Fd: {
      require_d(params);
      auto tw = op_pi_tensor(tw_class(params.d));
      tw.label = "PiPushPull(Tw_d)";
      auto op = add(build(GoldenName::FM_Pd, params), tw);
      op.label = "FM_Fd(" + dstr(params.d) + ") = FM_Pd + PiPushPull(Tw_d)";
      return op;
    }
    case GoldenName::A_S: {
      auto op = add(build(GoldenName::PiPushPull), negate(Operator::identity()));
      op.label = "A_S = PiPushPull - id";
      return op;
    }
    case GoldenName::A_Sprime: {
      Operator inv;
      try {
        inv = invert(build(GoldenName::A_S));
      } catch (const SingularMatrixError&) {
        throw InternalError("A_S built as a singular matrix");
      }
      auto op = negate(inv);
      op.label = "A_Sprime = -(A_S)^-1";
      return op;
    }
    case GoldenName::A_TL: {
      require_divisor(params);
      auto op = op_tensor(ch_O(params.divisor[0], params.divisor[1]));
      op.label = "A_TL(" + to_string(params.divisor[0]) + " sigma + " + to_string(params.divisor[1]) + " f)";
      return op;
    }
    case GoldenName::B_S:
      throw InputError("B_S is a 2x2 Bridgeland matrix; use restrict2(build(A_S))");
  }
  throw InternalError("unhandled golden name");
}

Matrix golden(GoldenName name, const GoldenParams& params) {
  const Rational d = params.d;
  switch (name) {
    case GoldenName::TensorL1:
      require_d(params);
      return {{1, 0, 0, 0},
              {d + 1, 1, 0, 0},
              {2 * (d + 1), 0, 1, 0},
              {(d + 1) * (d + 1), 0, d + 1, 1}};
    case GoldenName::TensorSigma:
      return {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {-1, -2, 1, 1}};
    case GoldenName::PiPushPull:
      return {{0, 1, 0, 0}, {0, 0, 0, 0}, {2, -1, 0, 1}, {0, 0, 0, 0}};
    case GoldenName::PiPushPullSigma:
      return {{1, 1, 0, 0}, {0, 0, 0, 0}, {0, -3, 1, 1}, {0, 0, 0, 0}};
    case GoldenName::FM_Pd:
      require_d(params);
      return {{0, 1, 0, 0},
              {-1, d, 0, 0},
              {0, 2 * d - 1, 0, 1},
              {1, d * d - d, -1, d}};
    case GoldenName::Tw_d:
      require_d(params);
      return {{d, 0, 0, 0},
              {-1, d, 0, 0},
              {d * d + d, 0, d, 0},
              {-2 * d - 1, d * d + d + 2, -1, d}};
    case GoldenName::FM_Fd:
      require_d(params);
      return {{-1, d + 1, 0, 0},
              {-1, d, 0, 0},
              {0, (d + 1) * (d + 1), -1, d + 1},
              {1, d * d - d, -1, d}};
    case GoldenName::A_S:
      return {{-1, 1, 0, 0}, {0, -1, 0, 0}, {2, -1, -1, 1}, {0, 0, 0, -1}};
    case GoldenName::A_Sprime:
      return {{1, 1, 0, 0}, {0, 1, 0, 0}, {2, 1, 1, 1}, {0, 0, 0, 1}};
    case GoldenName::A_TL: {
      // [[1,0,0],[L,1,0],[L^2/2,L,1]] with L = x.sigma + y.f expanded in
      // (r, s, t, p): L.sigma = -2x + y, L.f = x, L^2/2 = -x^2 + xy.
      require_divisor(params);
      const Rational& x = params.divisor[0];
      const Rational& y = params.divisor[1];
      return {{1, 0, 0, 0}, {x, 1, 0, 0}, {y, 0, 1, 0}, {-x * x + x * y, -2 * x + y, x, 1}};
    }
    case GoldenName::B_S:
      return {{-1, 1}, {0, -1}};
  }
  throw InputError("unknown golden matrix");
}

Operator compose(const Operator& outer, const Operator& inner) {
  return {outer.matrix * inner.matrix, "(" + outer.label + " o " + inner.label + ")"};
}

Operator add(const Operator& a, const Operator& b) {
  return {a.matrix + b.matrix, "(" + a.label + " + " + b.label + ")"};
}

Operator negate(const Operator& a) { return {-a.matrix, "-" + a.label}; }

Operator invert(const Operator& a) { return {a.matrix.inverse(), "(" + a.label + ")^-1"}; }

CohClass apply(const Operator& op, const CohClass& v) { return from_coords(op.matrix * to_coords(v)); }

Matrix restrict2(const Matrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw InputError("restrict2 needs a 4x4 matrix");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 2; j < 4; ++j)
      if (m(i, j) != 0)
        throw ReductionError("rank/fdeg rows depend on (t, p): entry (" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + ") = " + to_string(m(i, j)));
  return {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}};
}

Matrix restrict2(const Operator& op) { return restrict2(op.matrix); }

bool pairing_preserved(const Matrix& m) {
  static const Matrix G = euler_gram_k3();
  return m.transpose() * G * m == G;
}

bool pairing_preserved(const Operator& op) { return pairing_preserved(op.matrix); }

}  // namespace fmlat
