#include "fmlat/bridgeland.hpp"

#include "fmlat/error.hpp"

#include <numeric>
#include <sstream>
#include <tuple>

namespace fmlat {

Int2x2 operator*(const Int2x2& a, const Int2x2& b) {
  Int2x2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

Int2x2 negated(const Int2x2& a) { return {{{-a[0][0], -a[0][1]}, {-a[1][0], -a[1][1]}}}; }

std::int64_t det(const Int2x2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

std::string to_string(const Int2x2& a) {
  std::ostringstream os;
  os << "[[" << a[0][0] << ", " << a[0][1] << "], [" << a[1][0] << ", " << a[1][1] << "]]";
  return os.str();
}

std::vector<std::string> FM2::violations(std::int64_t c, std::int64_t a, std::int64_t e,
                                         std::int64_t b, std::int64_t lambda) {
  std::vector<std::string> out;
  if (lambda <= 0) {
    out.push_back("lambda must be positive (got " + std::to_string(lambda) + ")");
    return out;
  }
  if (c * b - a * e != 1)
    out.push_back("determinant cb - ae = " + std::to_string(c * b - a * e) + " must be 1");
  if (a <= 0) out.push_back("a = " + std::to_string(a) + " must be positive");
  if (e % lambda != 0)
    out.push_back("e = " + std::to_string(e) + " must be a multiple of lambda = " + std::to_string(lambda));
  return out;
}

FM2 FM2::make(std::int64_t c, std::int64_t a, std::int64_t e, std::int64_t b, std::int64_t lambda) {
  auto bad = violations(c, a, e, b, lambda);
  if (!bad.empty()) {
    std::string msg = "inadmissible matrix " + to_string(Int2x2{{{c, a}, {e, b}}}) + ":";
    for (const auto& s : bad) msg += " " + s + ";";
    msg.pop_back();
    throw AdmissibilityError(msg);
  }
  return FM2(c, a, e, b, lambda);
}

FM2Family phi_family(const FM2& m) {
  const auto c = m.c(), a = m.a(), e = m.e(), b = m.b();
  FM2Family fam;
  fam.phi = {{{c, a}, {e, b}}};
  fam.psi = {{{-b, a}, {e, -c}}};
  fam.omega = {{{b, a}, {e, c}}};
  fam.xi = {{{-c, a}, {e, -b}}};
  const Int2x2 minus_id = negated(kIdentity2);
  fam.relations_hold = fam.phi * fam.psi == minus_id && fam.psi * fam.phi == minus_id &&
                       fam.xi * fam.omega == minus_id && fam.omega * fam.xi == minus_id;
  if (!fam.relations_hold) throw InternalError("functor relations fail for an admissible matrix");
  return fam;
}

FM2Family phi_family(std::int64_t c, std::int64_t a, std::int64_t e, std::int64_t b,
                     std::int64_t lambda) {
  return phi_family(FM2::make(c, a, e, b, lambda));
}

std::pair<std::int64_t, std::int64_t> canonical_ab(std::int64_t r, std::int64_t d) {
  if (r <= 1) throw InputError("canonical_ab needs r > 1, got " + std::to_string(r));
  if (std::gcd(r, d) != 1)
    throw CoprimalityError("r = " + std::to_string(r) + " and d = " + std::to_string(d) +
                           " are not coprime");
  // Extended Euclid on (r, d): x r + y d = 1, then b = x, a = -y.
  std::int64_t old_r = r, cur_r = d, old_x = 1, cur_x = 0, old_y = 0, cur_y = 1;
  while (cur_r != 0) {
    std::int64_t q = old_r / cur_r;
    std::tie(old_r, cur_r) = std::make_pair(cur_r, old_r - q * cur_r);
    std::tie(old_x, cur_x) = std::make_pair(cur_x, old_x - q * cur_x);
    std::tie(old_y, cur_y) = std::make_pair(cur_y, old_y - q * cur_y);
  }
  if (old_r < 0) {
    old_x = -old_x;
    old_y = -old_y;
  }
  std::int64_t b = old_x, a = -old_y;
  // Shift along (a, b) -> (a + k r, b + k d) into 0 < a < r.
  std::int64_t a_mod = ((a % r) + r) % r;
  b += (a_mod - a) / r * d;
  a = a_mod;
  if (b * r - a * d != 1 || a <= 0 || a >= r) throw InternalError("canonical_ab normalization failed");
  return {a, b};
}

RankFdeg transform2(const Int2x2& m, const RankFdeg& v) {
  return {m[0][0] * v.rk + m[0][1] * v.fd, m[1][0] * v.rk + m[1][1] * v.fd};
}

bool wit1_forced(const RankFdeg& v, std::int64_t a, std::int64_t b) {
  if (v.rk <= 0) throw InputError("wit1_forced needs positive rank");
  if (a <= 0) throw InputError("wit1_forced needs a > 0");
  return b * v.rk > a * v.fd;
}

std::string to_string(BiratClass c) {
  switch (c) {
    case BiratClass::BirationalHighRank: return "BirationalHighRank";
    case BiratClass::BirationalRankOne: return "BirationalRankOne";
    case BiratClass::RegularIsomorphism: return "RegularIsomorphism";
    case BiratClass::BirationalCodimTwo: return "BirationalCodimTwo";
    case BiratClass::NotCovered: return "NotCovered";
  }
  return "?";
}

std::int64_t rank_w(const RankFdeg& v, const FM2& phi) {
  const FM2Family fam = phi_family(phi);
  return transform2(negated(fam.psi), v).rk;
}

BiratClass gen_birat_classify(const RankFdeg& v, const FM2& phi, std::optional<std::int64_t> t,
                              bool k3) {
  if (v.rk <= 0) throw InputError("gen_birat_classify needs positive rank");
  if (std::gcd(v.rk, v.fd) != 1)
    throw CoprimalityError("rank " + std::to_string(v.rk) + " and fiber degree " +
                           std::to_string(v.fd) + " are not coprime");
  if (t && *t < 0) throw InputError("dimension offset t must be non-negative");
  const std::int64_t rkw = rank_w(v, phi);
  if (rkw > 1) return k3 && rkw >= 3 ? BiratClass::BirationalCodimTwo : BiratClass::BirationalHighRank;
  if (rkw == 1) {
    if (t && v.rk > phi.a() * *t) return BiratClass::RegularIsomorphism;
    if (v.rk > phi.a()) return BiratClass::BirationalRankOne;
  }
  return BiratClass::NotCovered;
}

}  // namespace fmlat
