#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fmlat {

using Int2x2 = std::array<std::array<std::int64_t, 2>, 2>;

Int2x2 operator*(const Int2x2& a, const Int2x2& b);
Int2x2 negated(const Int2x2& a);
std::int64_t det(const Int2x2& a);
std::string to_string(const Int2x2& a);
inline constexpr Int2x2 kIdentity2 = {{{1, 0}, {0, 1}}};

struct RankFdeg {
  std::int64_t rk = 0;
  std::int64_t fd = 0;
  bool operator==(const RankFdeg&) const = default;
};

// Admissible Bridgeland matrix [[c, a], [e, b]]: cb - ae = 1, a > 0, lambda | e.
class FM2 {
 public:
  // Throws AdmissibilityError listing every failed constraint.
  static FM2 make(std::int64_t c, std::int64_t a, std::int64_t e, std::int64_t b,
                  std::int64_t lambda = 1);
  // Constraint violations, empty when admissible.
  static std::vector<std::string> violations(std::int64_t c, std::int64_t a, std::int64_t e,
                                             std::int64_t b, std::int64_t lambda);

  std::int64_t c() const { return c_; }
  std::int64_t a() const { return a_; }
  std::int64_t e() const { return e_; }
  std::int64_t b() const { return b_; }
  std::int64_t lambda() const { return lambda_; }
  Int2x2 matrix() const { return {{{c_, a_}, {e_, b_}}}; }

  bool operator==(const FM2&) const = default;

 private:
  FM2(std::int64_t c, std::int64_t a, std::int64_t e, std::int64_t b, std::int64_t lambda)
      : c_(c), a_(a), e_(e), b_(b), lambda_(lambda) {}
  std::int64_t c_, a_, e_, b_, lambda_;
};

// The four transforms between D(X) and D(Y) and their rank/fdeg matrices:
// kernel P gives Phi (phi) and Omega (omega), kernel Q gives Psi (psi) and
// Xi (xi).
struct FM2Family {
  Int2x2 phi, psi, omega, xi;
  // phi.psi = psi.phi = xi.omega = omega.xi = -I
  bool relations_hold = false;
};

// Throws AdmissibilityError.
FM2Family phi_family(std::int64_t c, std::int64_t a, std::int64_t e, std::int64_t b,
                     std::int64_t lambda = 1);
FM2Family phi_family(const FM2& phi);

// Unique (a, b) with b r - a d = 1 and 0 < a < r. Requires r > 1;
// throws CoprimalityError when gcd(r, d) != 1.
std::pair<std::int64_t, std::int64_t> canonical_ab(std::int64_t r, std::int64_t d);

RankFdeg transform2(const Int2x2& m, const RankFdeg& v);

// b/a > d/r, i.e. b r > a d. Throws InputError for rk <= 0 or a <= 0.
bool wit1_forced(const RankFdeg& v, std::int64_t a, std::int64_t b);

enum class BiratClass {
  BirationalHighRank,
  BirationalRankOne,
  RegularIsomorphism,
  BirationalCodimTwo,
  NotCovered,
};

std::string to_string(BiratClass c);

// Rank of w = Psi v [1], i.e. the first entry of -psi (r, d): b r - a d.
std::int64_t rank_w(const RankFdeg& v, const FM2& phi);

// Strongest conclusion available for v under phi. `t` is the dimension offset
// for the regular-isomorphism test; when absent that branch is skipped.
// Throws CoprimalityError, InputError (rk <= 0, t < 0).
BiratClass gen_birat_classify(const RankFdeg& v, const FM2& phi, std::optional<std::int64_t> t,
                              bool k3);

}  // namespace fmlat
