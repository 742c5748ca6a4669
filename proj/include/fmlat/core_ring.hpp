#pragma once

#include "fmlat/matrix.hpp"
#include "fmlat/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fmlat {

using IVec = std::vector<std::int64_t>;

// Numerical model of an elliptic surface: a finite divisor lattice with its
// intersection form, the fiber/section/canonical classes, chi(O) and the
// smallest positive fiber degree lambda.
class SurfaceDescriptor {
 public:
  // Validates every invariant and throws InputError on violation. When
  // `lambda` is empty it is the gcd of |fiber.b| over the basis.
  static SurfaceDescriptor create(std::string name, std::int64_t chi_O,
                                  std::vector<std::string> basis_names,
                                  std::vector<IVec> gram, IVec fiber,
                                  std::optional<IVec> section, IVec canonical,
                                  std::optional<std::int64_t> lambda = std::nullopt);

  // chi = 2, K = 0, basis (sigma, f), gram [[-2,1],[1,0]], lambda = 1.
  static SurfaceDescriptor standard_k3();

  const std::string& name() const { return name_; }
  std::int64_t chi_O() const { return chi_O_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const std::vector<IVec>& gram() const { return gram_; }
  const IVec& fiber() const { return fiber_; }
  const std::optional<IVec>& section() const { return section_; }
  const IVec& canonical() const { return canonical_; }
  std::int64_t lambda() const { return lambda_; }
  std::size_t lattice_rank() const { return basis_names_.size(); }

  bool is_standard_k3() const;

  // Intersection number under the Gram form.
  Rational intersect(const RVec& a, const RVec& b) const;

  bool operator==(const SurfaceDescriptor&) const = default;

 private:
  SurfaceDescriptor() = default;

  std::string name_;
  std::int64_t chi_O_ = 0;
  std::vector<std::string> basis_names_;
  std::vector<IVec> gram_;
  IVec fiber_;
  std::optional<IVec> section_;
  IVec canonical_;
  std::int64_t lambda_ = 1;
};

// Throws UnsupportedModelError unless S is the standard K3 model.
void require_standard_k3(const SurfaceDescriptor& S, const char* what);

enum class KVectorKind { Topological, Oriented };

// Even Chow-ring element r + div + p[pt]. `kind` is a label only; it does not
// take part in arithmetic or equality.
struct CohClass {
  Rational r;
  RVec div;
  Rational p;
  std::optional<KVectorKind> kind;

  CohClass() = default;
  CohClass(Rational r, RVec div, Rational p) : r(std::move(r)), div(std::move(div)), p(std::move(p)) {}

  static CohClass zero(std::size_t lattice_rank);
  static CohClass unit(std::size_t lattice_rank);

  CohClass operator+(const CohClass& o) const;
  CohClass operator-(const CohClass& o) const;
  CohClass operator-() const;
  friend CohClass operator*(const Rational& s, const CohClass& v);

  bool operator==(const CohClass& o) const { return r == o.r && div == o.div && p == o.p; }
};

std::string to_string(const CohClass& v);

// Standard-model coordinates (r, s, t, p) of r + s.sigma + t.f + p[pt].
RVec to_coords(const CohClass& v);
CohClass from_coords(const RVec& c);

CohClass ch_line_bundle(const SurfaceDescriptor& S, const RVec& D);
CohClass mult(const SurfaceDescriptor& S, const CohClass& v, const CohClass& w);
CohClass dual(const CohClass& v);
CohClass todd(const SurfaceDescriptor& S);
// Point-class coefficient.
Rational integrate(const CohClass& v);
// Integral of v.w.td(S).
Rational chi_tensor(const SurfaceDescriptor& S, const CohClass& v, const CohClass& w);
// chi(v, w) = chi_tensor(dual(v), w).
Rational euler_pairing(const SurfaceDescriptor& S, const CohClass& v, const CohClass& w);
Rational fdeg(const SurfaceDescriptor& S, const CohClass& v);
// 2 - chi(v, v); standard K3 only.
std::int64_t moduli_dim_k3(const SurfaceDescriptor& S, const CohClass& v);

// Gram matrix of euler_pairing in (r, s, t, p) coordinates, computed from the
// ring operations.
Matrix euler_gram_k3();

// Human-readable notes when v is not the Chern character of an honest sheaf
// class (non-integral r or div, p outside (1/2)Z). Never throws.
std::vector<std::string> integrality_warnings(const CohClass& v);

}  // namespace fmlat
