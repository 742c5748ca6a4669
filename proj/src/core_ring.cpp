#include "fmlat/core_ring.hpp"

#include "fmlat/error.hpp"

#include <numeric>
#include <sstream>

namespace fmlat {
namespace {

void require_rank(const SurfaceDescriptor& S, const RVec& v, const char* what) {
  if (v.size() != S.lattice_rank())
    throw InputError(std::string(what) + ": divisor has " + std::to_string(v.size()) +
                     " components, lattice rank is " + std::to_string(S.lattice_rank()));
}

Rational intersect_int(const std::vector<IVec>& gram, const IVec& a, const IVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += Rational(gram[i][j]) * a[i] * b[j];
  return s;
}

RVec to_rvec(const IVec& v) { return RVec(v.begin(), v.end()); }

}  // namespace

SurfaceDescriptor SurfaceDescriptor::create(std::string name, std::int64_t chi_O,
                                            std::vector<std::string> basis_names,
                                            std::vector<IVec> gram, IVec fiber,
                                            std::optional<IVec> section, IVec canonical,
                                            std::optional<std::int64_t> lambda) {
  const std::size_t n = basis_names.size();
  if (n == 0) throw InputError("surface: empty divisor basis");
  if (gram.size() != n) throw InputError("surface: gram must have one row per basis element");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw InputError("surface: gram must be square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) throw InputError("surface: gram is not symmetric");
  }
  if (fiber.size() != n) throw InputError("surface: fiber has wrong length");
  if (canonical.size() != n) throw InputError("surface: canonical has wrong length");
  if (section && section->size() != n) throw InputError("surface: section has wrong length");

  if (intersect_int(gram, fiber, fiber) != 0) throw InputError("surface: fiber.fiber must be 0");
  if (section && intersect_int(gram, *section, fiber) != 1)
    throw InputError("surface: section.fiber must be 1");

  IVec fiber_degrees;
  for (std::size_t i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    fiber_degrees.push_back(to_int64(intersect_int(gram, fiber, e)));
  }
  std::int64_t g = 0;
  for (auto x : fiber_degrees) g = std::gcd(g, x < 0 ? -x : x);
  if (!lambda) {
    if (g == 0) throw InputError("surface: every basis vector has fiber degree 0; lambda undefined");
    lambda = g;
  }
  if (*lambda <= 0) throw InputError("surface: lambda must be positive");
  for (auto x : fiber_degrees)
    if (x % *lambda != 0)
      throw InputError("surface: lambda " + std::to_string(*lambda) +
                       " does not divide fiber degree " + std::to_string(x));

  SurfaceDescriptor S;
  S.name_ = std::move(name);
  S.chi_O_ = chi_O;
  S.basis_names_ = std::move(basis_names);
  S.gram_ = std::move(gram);
  S.fiber_ = std::move(fiber);
  S.section_ = std::move(section);
  S.canonical_ = std::move(canonical);
  S.lambda_ = *lambda;
  return S;
}

SurfaceDescriptor SurfaceDescriptor::standard_k3() {
  return create("standard K3", 2, {"sigma", "f"}, {{-2, 1}, {1, 0}}, {0, 1}, IVec{1, 0}, {0, 0}, 1);
}

bool SurfaceDescriptor::is_standard_k3() const {
  return chi_O_ == 2 && gram_ == std::vector<IVec>{{-2, 1}, {1, 0}} && fiber_ == IVec{0, 1} &&
         canonical_ == IVec{0, 0} && lambda_ == 1 &&
         (!section_ || *section_ == IVec{1, 0});
}

Rational SurfaceDescriptor::intersect(const RVec& a, const RVec& b) const {
  require_rank(*this, a, "intersect");
  require_rank(*this, b, "intersect");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (gram_[i][j] != 0) s += a[i] * Rational(gram_[i][j]) * b[j];
  }
  return s;
}

void require_standard_k3(const SurfaceDescriptor& S, const char* what) {
  if (!S.is_standard_k3())
    throw UnsupportedModelError(std::string(what) + " requires the standard K3 model, got '" +
                                S.name() + "'");
}

CohClass CohClass::zero(std::size_t lattice_rank) {
  return CohClass(0, RVec(lattice_rank, Rational(0)), 0);
}

CohClass CohClass::unit(std::size_t lattice_rank) {
  return CohClass(1, RVec(lattice_rank, Rational(0)), 0);
}

CohClass CohClass::operator+(const CohClass& o) const {
  if (div.size() != o.div.size()) throw InputError("class dimension mismatch");
  CohClass out(r + o.r, div, p + o.p);
  for (std::size_t i = 0; i < div.size(); ++i) out.div[i] += o.div[i];
  return out;
}

CohClass CohClass::operator-(const CohClass& o) const { return *this + (-o); }

CohClass CohClass::operator-() const { return Rational(-1) * *this; }

CohClass operator*(const Rational& s, const CohClass& v) {
  CohClass out(s * v.r, v.div, s * v.p);
  for (auto& x : out.div) x *= s;
  out.kind = v.kind;
  return out;
}

std::string to_string(const CohClass& v) {
  std::ostringstream os;
  os << "(" << to_string(v.r) << "; ";
  for (std::size_t i = 0; i < v.div.size(); ++i) os << (i ? ", " : "") << to_string(v.div[i]);
  os << "; " << to_string(v.p) << ")";
  return os.str();
}

RVec to_coords(const CohClass& v) {
  if (v.div.size() != 2) throw UnsupportedModelError("standard-model coordinates need a rank-2 lattice");
  return {v.r, v.div[0], v.div[1], v.p};
}

CohClass from_coords(const RVec& c) {
  if (c.size() != 4) throw InputError("expected 4 coordinates (r, s, t, p)");
  return CohClass(c[0], {c[1], c[2]}, c[3]);
}

CohClass ch_line_bundle(const SurfaceDescriptor& S, const RVec& D) {
  require_rank(S, D, "ch_line_bundle");
  return CohClass(1, D, S.intersect(D, D) / 2);
}

CohClass mult(const SurfaceDescriptor& S, const CohClass& v, const CohClass& w) {
  require_rank(S, v.div, "mult");
  require_rank(S, w.div, "mult");
  CohClass out(v.r * w.r, RVec(S.lattice_rank()), v.r * w.p + w.r * v.p + S.intersect(v.div, w.div));
  for (std::size_t i = 0; i < out.div.size(); ++i) out.div[i] = v.r * w.div[i] + w.r * v.div[i];
  return out;
}

CohClass dual(const CohClass& v) {
  CohClass out(v.r, v.div, v.p);
  for (auto& x : out.div) x = -x;
  out.kind = v.kind;
  return out;
}

CohClass todd(const SurfaceDescriptor& S) {
  RVec half_k;
  for (auto k : S.canonical()) half_k.push_back(Rational(-k, 2));
  return CohClass(1, std::move(half_k), S.chi_O());
}

Rational integrate(const CohClass& v) { return v.p; }

Rational chi_tensor(const SurfaceDescriptor& S, const CohClass& v, const CohClass& w) {
  return integrate(mult(S, mult(S, v, w), todd(S)));
}

Rational euler_pairing(const SurfaceDescriptor& S, const CohClass& v, const CohClass& w) {
  return chi_tensor(S, dual(v), w);
}

Rational fdeg(const SurfaceDescriptor& S, const CohClass& v) {
  require_rank(S, v.div, "fdeg");
  return S.intersect(v.div, to_rvec(S.fiber()));
}

std::int64_t moduli_dim_k3(const SurfaceDescriptor& S, const CohClass& v) {
  require_standard_k3(S, "moduli_dim_k3");
  return to_int64(2 - euler_pairing(S, v, v));
}

Matrix euler_gram_k3() {
  const auto S = SurfaceDescriptor::standard_k3();
  Matrix g(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      RVec ei(4, Rational(0)), ej(4, Rational(0));
      ei[i] = 1;
      ej[j] = 1;
      g(i, j) = euler_pairing(S, from_coords(ei), from_coords(ej));
    }
  return g;
}

std::vector<std::string> integrality_warnings(const CohClass& v) {
  std::vector<std::string> out;
  if (!is_integer(v.r)) out.push_back("rank " + to_string(v.r) + " is not an integer");
  for (std::size_t i = 0; i < v.div.size(); ++i)
    if (!is_integer(v.div[i]))
      out.push_back("divisor component " + std::to_string(i + 1) + " is not an integer");
  if (!is_integer(2 * v.p)) out.push_back("ch2 " + to_string(v.p) + " is not in (1/2)Z");
  return out;
}

}  // namespace fmlat
