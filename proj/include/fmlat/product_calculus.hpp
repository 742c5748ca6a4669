#pragma once

#include "fmlat/core_ring.hpp"
#include "fmlat/matrix.hpp"
#include "fmlat/operator_algebra.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace fmlat {

// Element of the modeled Chow ring of X x X for the standard K3 model X.
//
// decomp(i, j) is the coefficient of q1^* e_i . q2^* e_j with e = (1, sigma,
// f, pt); diag holds the coefficients of delta_*(1), delta_*(sigma),
// delta_*(f). delta_*(pt) is the point class and lives in decomp(3, 3).
struct ProductClass {
  Matrix decomp = Matrix(4, 4);
  std::array<Rational, 3> diag = {0, 0, 0};

  ProductClass operator+(const ProductClass& o) const;
  ProductClass operator-(const ProductClass& o) const;
  ProductClass operator-() const;
  friend ProductClass operator*(const Rational& s, const ProductClass& a);

  bool operator==(const ProductClass&) const = default;
};

enum class Side { First, Second };

// PushFirstPullSecond: v -> q1_*(K . q2^* v);
// PushSecondPullFirst: v -> q2_*(K . q1^* v).
enum class FMOrientation { PushFirstPullSecond, PushSecondPullFirst };

namespace classes {
ProductClass unit();
ProductClass diagonal();          // Delta = delta_*(1)
ProductClass point();             // [*]
ProductClass fiber_product();     // Pi = q1^* f + q2^* f
ProductClass fiber_square();      // [f x f]
ProductClass sigma_x();           // [sigma x X]
ProductClass x_sigma();           // [X x sigma]
ProductClass point_x();           // [* x X] = q1^* pt
ProductClass x_point();           // [X x *] = q2^* pt
}  // namespace classes

// Basis-labelled sum, e.g. "[f x X] + [X x f] - [f x f] - Delta + 2[*]".
std::string to_string(const ProductClass& a);

// The argument must have standard-model coordinates (lattice rank 2).
ProductClass pull(Side side, const CohClass& v);
ProductClass diag_push(const CohClass& v);
ProductClass prod_mult(const ProductClass& a, const ProductClass& b);
CohClass push(Side side, const ProductClass& a);

// Truncated exponential sum_{n<=4} a^n / n!.
ProductClass exp_class(const ProductClass& a);

// td(X x X) = q1^* td . q2^* td, and its inverse in the ring.
ProductClass todd_product();
ProductClass todd_product_inverse();

// delta_*(v . td_X) . td_{X x X}^{-1}
ProductClass diag_push_grr(const CohClass& v);

// Pi - ([f x f] + Delta) + 2[*], assembled from the named classes.
ProductClass o_pi_minus_delta_class();

struct Kernel {
  enum class Type { Pd, IDelta };
  Type type = Type::IDelta;
  std::int64_t d = 0;

  static Kernel Pd(std::int64_t d) { return {Type::Pd, d}; }
  static Kernel IDelta() { return {Type::IDelta, 0}; }
};

// IDelta: (1 - exp(-Pi)) - diag_push_grr(1).
// Pd(d):  o_pi_minus_delta_class() . exp((d+1) q1^*sigma) . exp(q2^*sigma)
//         . exp(2(d+1) q1^*f). Throws InputError for d < 1.
ProductClass kernel_class(const Kernel& k);

// q2_*(K . q1^* td_X): the Chern character of the pushforward of the kernel
// along the second projection, after cancelling td_X on both sides of GRR.
CohClass pushforward_second(const ProductClass& kernel);

// ch(omega_pi) = ch O(2f) on the standard K3 model.
CohClass ch_omega_pi();

// v -> push(target, K . pull(source, v . td_X)) on the four basis classes.
Operator fm_matrix(const ProductClass& kernel, FMOrientation o);

}  // namespace fmlat
