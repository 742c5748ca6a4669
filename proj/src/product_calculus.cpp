#include "fmlat/product_calculus.hpp"

#include "fmlat/error.hpp"

#include <sstream>

namespace fmlat {
namespace {

const SurfaceDescriptor& k3() {
  static const SurfaceDescriptor S = SurfaceDescriptor::standard_k3();
  return S;
}

// Second Chern class of a K3 surface, in units of the point class.
constexpr int kC2 = 24;

CohClass basis(std::size_t i) {
  RVec c(4, Rational(0));
  c[i] = 1;
  return from_coords(c);
}

// table[i][k] = coordinates of e_i . e_k
const std::array<std::array<RVec, 4>, 4>& basis_products() {
  static const auto table = [] {
    std::array<std::array<RVec, 4>, 4> t;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k) t[i][k] = to_coords(mult(k3(), basis(i), basis(k)));
    return t;
  }();
  return table;
}

RVec coords_checked(const CohClass& v, const char* what) {
  if (v.div.size() != 2)
    throw UnsupportedModelError(std::string(what) + " is only modeled for the standard K3 surface");
  return to_coords(v);
}

void add_diag_push(ProductClass& out, const RVec& c, const Rational& scale) {
  for (std::size_t s = 0; s < 3; ++s) out.diag[s] += scale * c[s];
  out.decomp(3, 3) += scale * c[3];
}

// delta_*(gamma) . decomposable part of b
void mult_diag_decomp(ProductClass& out, const std::array<Rational, 3>& gamma, const Matrix& b) {
  const auto& tab = basis_products();
  for (std::size_t g = 0; g < 3; ++g) {
    if (gamma[g] == 0) continue;
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t l = 0; l < 4; ++l) {
        if (b(k, l) == 0) continue;
        // gamma_g . e_k . e_l on the diagonal
        RVec gk = tab[g][k];
        RVec acc(4, Rational(0));
        for (std::size_t m = 0; m < 4; ++m) {
          if (gk[m] == 0) continue;
          for (std::size_t n = 0; n < 4; ++n) acc[n] += gk[m] * tab[m][l][n];
        }
        add_diag_push(out, acc, gamma[g] * b(k, l));
      }
  }
}

}  // namespace

ProductClass ProductClass::operator+(const ProductClass& o) const {
  ProductClass r;
  r.decomp = decomp + o.decomp;
  for (std::size_t s = 0; s < 3; ++s) r.diag[s] = diag[s] + o.diag[s];
  return r;
}

ProductClass ProductClass::operator-(const ProductClass& o) const { return *this + (-o); }

ProductClass ProductClass::operator-() const { return Rational(-1) * *this; }

ProductClass operator*(const Rational& s, const ProductClass& a) {
  ProductClass r;
  r.decomp = s * a.decomp;
  for (std::size_t k = 0; k < 3; ++k) r.diag[k] = s * a.diag[k];
  return r;
}

namespace classes {

namespace {
ProductClass decomposable(std::size_t i, std::size_t j) {
  ProductClass a;
  a.decomp(i, j) = 1;
  return a;
}
}  // namespace

ProductClass unit() { return decomposable(0, 0); }
ProductClass diagonal() {
  ProductClass a;
  a.diag[0] = 1;
  return a;
}
ProductClass point() { return decomposable(3, 3); }
ProductClass fiber_product() { return decomposable(2, 0) + decomposable(0, 2); }
ProductClass fiber_square() { return decomposable(2, 2); }
ProductClass sigma_x() { return decomposable(1, 0); }
ProductClass x_sigma() { return decomposable(0, 1); }
ProductClass point_x() { return decomposable(3, 0); }
ProductClass x_point() { return decomposable(0, 3); }

}  // namespace classes

std::string to_string(const ProductClass& a) {
  static const char* names[4] = {"X", "sigma", "f", "*"};
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& c, const std::string& label) {
    if (c == 0) return;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || label.empty()) os << to_string(mag);
    os << label;
  };
  term(a.decomp(0, 0), "");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == 0 && j == 0) continue;
      std::string label = (i == 3 && j == 3) ? "[*]" : "[" + std::string(names[i]) + " x " + names[j] + "]";
      term(a.decomp(i, j), label);
    }
  term(a.diag[0], "Delta");
  term(a.diag[1], "delta_*(sigma)");
  term(a.diag[2], "delta_*(f)");
  return first ? "0" : os.str();
}

ProductClass pull(Side side, const CohClass& v) {
  RVec c = coords_checked(v, "pull");
  ProductClass a;
  for (std::size_t i = 0; i < 4; ++i) {
    if (side == Side::First)
      a.decomp(i, 0) = c[i];
    else
      a.decomp(0, i) = c[i];
  }
  return a;
}

ProductClass diag_push(const CohClass& v) {
  ProductClass a;
  add_diag_push(a, coords_checked(v, "diag_push"), 1);
  return a;
}

ProductClass prod_mult(const ProductClass& a, const ProductClass& b) {
  const auto& tab = basis_products();
  ProductClass out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (a.decomp(i, j) == 0) continue;
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l) {
          if (b.decomp(k, l) == 0) continue;
          const Rational c = a.decomp(i, j) * b.decomp(k, l);
          const RVec& x = tab[i][k];
          const RVec& y = tab[j][l];
          for (std::size_t m = 0; m < 4; ++m) {
            if (x[m] == 0) continue;
            for (std::size_t n = 0; n < 4; ++n)
              if (y[n] != 0) out.decomp(m, n) += c * x[m] * y[n];
          }
        }
    }
  mult_diag_decomp(out, a.diag, b.decomp);
  mult_diag_decomp(out, b.diag, a.decomp);
  // delta_*(g1) . delta_*(g2) = delta_*(g1 . g2 . c2); only g1 = g2 = 1 survives.
  out.decomp(3, 3) += kC2 * a.diag[0] * b.diag[0];
  return out;
}

CohClass push(Side side, const ProductClass& a) {
  RVec c(4, Rational(0));
  for (std::size_t i = 0; i < 4; ++i) {
    // Integrate the other factor: only its point coefficient survives.
    c[i] += side == Side::Second ? a.decomp(3, i) : a.decomp(i, 3);
  }
  for (std::size_t s = 0; s < 3; ++s) c[s] += a.diag[s];
  return from_coords(c);
}

ProductClass exp_class(const ProductClass& a) {
  ProductClass sum = classes::unit();
  ProductClass term = classes::unit();
  for (int n = 1; n <= 4; ++n) {
    term = Rational(1, n) * prod_mult(term, a);
    sum = sum + term;
  }
  return sum;
}

ProductClass todd_product() {
  const CohClass td = todd(k3());
  return prod_mult(pull(Side::First, td), pull(Side::Second, td));
}

ProductClass todd_product_inverse() {
  // td = 1 + N with N nilpotent (no codimension-0 part): 1/(1+N) = sum (-N)^k.
  const ProductClass n = todd_product() - classes::unit();
  ProductClass sum = classes::unit();
  ProductClass term = classes::unit();
  for (int k = 1; k <= 4; ++k) {
    term = -prod_mult(term, n);
    sum = sum + term;
  }
  return sum;
}

ProductClass diag_push_grr(const CohClass& v) {
  return prod_mult(diag_push(mult(k3(), v, todd(k3()))), todd_product_inverse());
}

ProductClass o_pi_minus_delta_class() {
  using namespace classes;
  return fiber_product() - (fiber_square() + diagonal()) + Rational(2) * point();
}

ProductClass kernel_class(const Kernel& k) {
  using namespace classes;
  switch (k.type) {
    case Kernel::Type::IDelta: {
      // ch O_Pi = 1 - ch O(-Pi), ch O_Delta by GRR along the diagonal.
      ProductClass o_pi = unit() - exp_class(-fiber_product());
      return o_pi - diag_push_grr(CohClass::unit(2));
    }
    case Kernel::Type::Pd: {
      if (k.d < 1) throw InputError("kernel P_d needs d >= 1, got " + std::to_string(k.d));
      const Rational d1 = k.d + 1;
      ProductClass out = o_pi_minus_delta_class();
      out = prod_mult(out, exp_class(d1 * sigma_x()));
      out = prod_mult(out, exp_class(x_sigma()));
      out = prod_mult(out, exp_class(2 * d1 * pull(Side::First, from_coords({0, 0, 1, 0}))));
      return out;
    }
  }
  throw InternalError("unhandled kernel type");
}

CohClass pushforward_second(const ProductClass& kernel) {
  return push(Side::Second, prod_mult(kernel, pull(Side::First, todd(k3()))));
}

CohClass ch_omega_pi() { return ch_line_bundle(k3(), {0, 2}); }

Operator fm_matrix(const ProductClass& kernel, FMOrientation o) {
  const CohClass td = todd(k3());
  Operator op;
  for (std::size_t j = 0; j < 4; ++j) {
    CohClass v = mult(k3(), basis(j), td);
    CohClass image = o == FMOrientation::PushFirstPullSecond
                         ? push(Side::First, prod_mult(kernel, pull(Side::Second, v)))
                         : push(Side::Second, prod_mult(kernel, pull(Side::First, v)));
    RVec col = to_coords(image);
    for (std::size_t i = 0; i < 4; ++i) op.matrix(i, j) = col[i];
  }
  op.label = std::string("FM[") + to_string(kernel) + "]" +
             (o == FMOrientation::PushFirstPullSecond ? " (push q1, pull q2)" : " (push q2, pull q1)");
  return op;
}

}  // namespace fmlat
