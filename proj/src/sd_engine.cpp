#include "fmlat/sd_engine.hpp"

#include "fmlat/error.hpp"

namespace fmlat {
namespace {

bool is_zero_divisor(const CohClass& v) {
  for (const auto& x : v.div)
    if (x != 0) return false;
  return true;
}

std::string ineq(std::int64_t lhs, const char* op, std::int64_t rhs) {
  return std::to_string(lhs) + " " + op + " " + std::to_string(rhs);
}

}  // namespace

std::string to_string(TriState s) {
  switch (s) {
    case TriState::Pass: return "pass";
    case TriState::Fail: return "fail";
    case TriState::NotEvaluated: return "not-evaluated";
  }
  return "?";
}

std::string to_string(SDTheorem t) { return t == SDTheorem::K3 ? "k3" : "general"; }

SDTheorem parse_theorem(const std::string& s) {
  if (s == "k3") return SDTheorem::K3;
  if (s == "general") return SDTheorem::General;
  throw InputError("unknown theorem '" + s + "' (expected k3 or general)");
}

SDPair SDPair::make(const SurfaceDescriptor& S, CohClass v, CohClass w, bool no_higher_cohomology) {
  if (v.r != 1 || w.r != 1) throw InputError("SD pair classes must have rank 1");
  SDPair p;
  p.d_v = to_int64(fdeg(S, v));
  p.d_w = to_int64(fdeg(S, w));
  p.v = std::move(v);
  p.w = std::move(w);
  p.no_higher_cohomology = no_higher_cohomology;
  return p;
}

bool orthogonal_check(const SurfaceDescriptor& S, const CohClass& v, const CohClass& w) {
  return chi_tensor(S, v, w) == 0;
}

BaseCaseResult mo_base_check(const SurfaceDescriptor& S, const CohClass& v, const CohClass& w,
                             bool no_higher_cohomology) {
  BaseCaseResult res;
  auto fail = [&](std::string note) {
    res.notes.push_back(std::move(note));
    res.holds = false;
  };
  res.holds = true;
  if (v.r != 1 || w.r != 1) {
    fail("base case needs rank-one classes");
    return res;
  }
  if (!is_zero_divisor(v)) fail("v must have trivial determinant");
  const Rational k = -v.p;
  const Rational L2 = S.intersect(w.div, w.div);
  const Rational l = L2 / 2 - w.p;
  const Rational chi_L = chi_tensor(S, ch_line_bundle(S, w.div), CohClass::unit(S.lattice_rank()));
  if (!is_integer(k) || k <= 0) fail("k = " + to_string(k) + " must be a positive integer");
  if (!is_integer(l) || l <= 0) fail("l = " + to_string(l) + " must be a positive integer");
  if (k + l != chi_L)
    fail("k + l = " + to_string(k + l) + " differs from chi(L) = " + to_string(chi_L));
  if (!no_higher_cohomology) fail("vanishing of higher cohomology of L is not attested");
  return res;
}

TransformedRanks transformed_ranks(const FM2& phi, std::int64_t d_v, std::int64_t d_w) {
  return {phi.a() * d_v - phi.c(), phi.c() + phi.a() * d_w};
}

std::vector<std::string> sd_violations(std::int64_t c, std::int64_t a, std::int64_t e,
                                       std::int64_t b, std::int64_t lambda) {
  auto out = FM2::violations(c, a, e, b, lambda);
  if (!(c > a)) out.push_back("c = " + std::to_string(c) + " must exceed a = " + std::to_string(a));
  if (!(-b > a)) out.push_back("-b = " + std::to_string(-b) + " must exceed a = " + std::to_string(a));
  return out;
}

FM2 make_sd_phi(std::int64_t c, std::int64_t a, std::int64_t e, std::int64_t b, std::int64_t lambda) {
  auto bad = sd_violations(c, a, e, b, lambda);
  if (!bad.empty()) {
    std::string msg = "inadmissible matrix " + to_string(Int2x2{{{c, a}, {e, b}}}) + ":";
    for (const auto& s : bad) msg += " " + s + ";";
    msg.pop_back();
    throw AdmissibilityError(msg);
  }
  return FM2::make(c, a, e, b, lambda);
}

SDCheck sd_check(SDTheorem theorem, const FM2& phi, std::int64_t d_v, std::int64_t d_w,
                 std::optional<std::int64_t> t_v, std::optional<std::int64_t> t_w) {
  make_sd_phi(phi.c(), phi.a(), phi.e(), phi.b(), phi.lambda());
  const std::int64_t a = phi.a(), c = phi.c();
  SDCheck out;
  out.theorem = theorem;
  out.ranks = transformed_ranks(phi, d_v, d_w);
  std::int64_t thr_v = 0, thr_w = 0;
  if (theorem == SDTheorem::K3) {
    thr_v = 2 * a + c;
    thr_w = 2 * a - c;
    out.rank_threshold_pass = out.ranks.rk_xi_v >= 3 && out.ranks.rk_phi_w >= 3;
  } else {
    if (!t_v || !t_w) throw InputError("the general check needs both t_v and t_w");
    thr_v = a * *t_v + c;
    thr_w = a * *t_w - c;
  }
  out.margin_v = a * d_v - thr_v;
  out.margin_w = a * d_w - thr_w;
  out.witness_v = ineq(a * d_v, out.margin_v > 0 ? ">" : "<=", thr_v);
  out.witness_w = ineq(a * d_w, out.margin_w > 0 ? ">" : "<=", thr_w);
  out.verdict = out.margin_v > 0 && out.margin_w > 0 ? TriState::Pass : TriState::Fail;
  return out;
}

std::vector<SearchHit> search_phi(std::int64_t lambda, std::int64_t bound,
                                  const std::optional<SearchTarget>& target) {
  if (bound < 1) throw InputError("search bound must be >= 1");
  if (lambda < 1) throw InputError("lambda must be >= 1");
  std::vector<SearchHit> hits;
  // c > a >= 1 so c > 0 and b is determined by c b = 1 + a e.
  for (std::int64_t c = -bound; c <= bound; ++c)
    for (std::int64_t a = 1; a <= bound; ++a) {
      if (!(c > a)) continue;
      for (std::int64_t e = -bound; e <= bound; ++e) {
        if (e % lambda != 0) continue;
        const std::int64_t num = 1 + a * e;
        if (num % c != 0) continue;
        const std::int64_t b = num / c;
        if (b < -bound || b > bound || !(-b > a)) continue;
        SearchHit hit{FM2::make(c, a, e, b, lambda), std::nullopt};
        if (target) {
          hit.check = sd_check(target->theorem, hit.phi, target->d_v, target->d_w, target->t_v, target->t_w);
          if (hit.check->verdict != TriState::Pass) continue;
        }
        hits.push_back(std::move(hit));
      }
    }
  return hits;
}

}  // namespace fmlat

namespace fmlat {

SDReport sd_report(const SDRequest& req) {
  SDReport rep;
  const std::int64_t lambda = req.lambda ? *req.lambda : req.surface ? req.surface->lambda() : 1;
  const auto [c, a, e, b] = req.phi;
  const FM2 phi = make_sd_phi(c, a, e, b, lambda);
  rep.phi = req.phi;
  rep.lambda = lambda;

  if (req.v.has_value() != req.w.has_value()) throw InputError("give both v and w, or neither");
  std::optional<SurfaceDescriptor> S = req.surface;
  if (req.v) {
    if (!S) S = SurfaceDescriptor::standard_k3();
    rep.surface = S->name();
    SDPair pair = SDPair::make(*S, *req.v, *req.w, req.no_higher_cohomology);
    rep.v = pair.v;
    rep.w = pair.w;
    rep.d_v = pair.d_v;
    rep.d_w = pair.d_w;
    if (req.d_v && *req.d_v != pair.d_v)
      rep.notes.push_back("supplied d_v = " + std::to_string(*req.d_v) + " ignored; fdeg(v) = " +
                          std::to_string(pair.d_v));
    if (req.d_w && *req.d_w != pair.d_w)
      rep.notes.push_back("supplied d_w = " + std::to_string(*req.d_w) + " ignored; fdeg(w) = " +
                          std::to_string(pair.d_w));
    rep.orthogonal = orthogonal_check(*S, pair.v, pair.w);
    if (!*rep.orthogonal)
      rep.notes.push_back("chi(v.w) = " + to_string(chi_tensor(*S, pair.v, pair.w)) + ", not orthogonal");
    auto base = mo_base_check(*S, pair.v, pair.w, pair.no_higher_cohomology);
    rep.base_case = base.holds;
    for (auto& n : base.notes) rep.notes.push_back("base case: " + n);
  } else {
    if (!req.d_v || !req.d_w) throw InputError("fiber degrees d_v and d_w are required without classes");
    rep.d_v = *req.d_v;
    rep.d_w = *req.d_w;
    if (S) rep.surface = S->name();
  }

  const auto ranks = transformed_ranks(phi, rep.d_v, rep.d_w);
  rep.rk_xi_v = ranks.rk_xi_v;
  rep.rk_phi_w = ranks.rk_phi_w;

  for (SDTheorem th : req.theorems) {
    if (th == SDTheorem::K3) {
      auto chk = sd_check(th, phi, rep.d_v, rep.d_w);
      rep.k3_check = chk.verdict;
      rep.k3_margins = std::array<std::int64_t, 2>{chk.margin_v, chk.margin_w};
      rep.rank_threshold = chk.rank_threshold_pass;
      if ((chk.verdict == TriState::Pass) != *chk.rank_threshold_pass)
        rep.notes.push_back("k3: inequality thresholds and exact rank thresholds (rk >= 3) disagree");
    } else {
      auto t_v = req.t_v, t_w = req.t_w;
      auto default_t = [&](const std::optional<CohClass>& cls, const char* which) -> std::optional<std::int64_t> {
        if (!cls || !S || !S->is_standard_k3()) return std::nullopt;
        auto t = moduli_dim_k3(*S, *cls);
        rep.notes.push_back(std::string("general: ") + which + " = " + std::to_string(t) +
                            " from the K3 moduli dimension");
        return t;
      };
      if (!t_v) t_v = default_t(rep.v, "t_v");
      if (!t_w) t_w = default_t(rep.w, "t_w");
      auto chk = sd_check(th, phi, rep.d_v, rep.d_w, t_v, t_w);
      rep.general_check = chk.verdict;
      rep.general_margins = std::array<std::int64_t, 2>{chk.margin_v, chk.margin_w};
      rep.notes.push_back("general: the K_X twist is vertical and does not change rank or fdeg");
    }
  }
  return rep;
}

}  // namespace fmlat
