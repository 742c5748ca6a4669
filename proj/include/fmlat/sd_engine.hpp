#pragma once

#include "fmlat/bridgeland.hpp"
#include "fmlat/core_ring.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fmlat {

enum class TriState { Pass, Fail, NotEvaluated };
enum class SDTheorem { K3, General };

std::string to_string(TriState s);
std::string to_string(SDTheorem t);
// "k3" | "general"; throws InputError.
SDTheorem parse_theorem(const std::string& s);

// Orthogonal rank-one pair on Y. d_v, d_w are recomputed from the classes.
// `no_higher_cohomology` is the caller's attestation that O(L_v + L_w) has no
// higher cohomology; it is never verified here.
struct SDPair {
  CohClass v, w;
  std::int64_t d_v = 0, d_w = 0;
  bool no_higher_cohomology = false;

  // Throws InputError unless both classes have rank 1 and integral fiber degree.
  static SDPair make(const SurfaceDescriptor& S, CohClass v, CohClass w, bool no_higher_cohomology);
};

// chi_tensor(v, w) == 0
bool orthogonal_check(const SurfaceDescriptor& S, const CohClass& v, const CohClass& w);

struct BaseCaseResult {
  bool holds = false;
  std::vector<std::string> notes;
};

// v = (1, 0, -k), w = (1, L, L^2/2 - l) with k, l positive integers and
// k + l = chi(L), plus the attestation.
BaseCaseResult mo_base_check(const SurfaceDescriptor& S, const CohClass& v, const CohClass& w,
                             bool no_higher_cohomology);

struct TransformedRanks {
  std::int64_t rk_xi_v = 0;   // a d_v - c
  std::int64_t rk_phi_w = 0;  // c + a d_w
  bool operator==(const TransformedRanks&) const = default;
};

TransformedRanks transformed_ranks(const FM2& phi, std::int64_t d_v, std::int64_t d_w);

// FM2 admissibility plus c > a and -b > a.
std::vector<std::string> sd_violations(std::int64_t c, std::int64_t a, std::int64_t e,
                                       std::int64_t b, std::int64_t lambda);
// Throws AdmissibilityError listing every failed constraint.
FM2 make_sd_phi(std::int64_t c, std::int64_t a, std::int64_t e, std::int64_t b,
                std::int64_t lambda = 1);

struct SDCheck {
  SDTheorem theorem = SDTheorem::K3;
  TriState verdict = TriState::NotEvaluated;
  // Cross-multiplied margins; the inequality holds iff the margin is > 0.
  //   K3:      a d_v - (2a + c),      a d_w - (2a - c)
  //   General: a d_v - (a t_v + c),   a d_w - (a t_w - c)
  std::int64_t margin_v = 0, margin_w = 0;
  TransformedRanks ranks;
  // K3 only: rk Xi v >= 3 and rk Phi w >= 3.
  std::optional<bool> rank_threshold_pass;
  std::string witness_v, witness_w;

  bool operator==(const SDCheck&) const = default;
};

// Verdict uses the theorem inequalities verbatim. Throws AdmissibilityError
// when phi violates c > a or -b > a, InputError when General lacks t_v/t_w.
SDCheck sd_check(SDTheorem theorem, const FM2& phi, std::int64_t d_v, std::int64_t d_w,
                 std::optional<std::int64_t> t_v = std::nullopt,
                 std::optional<std::int64_t> t_w = std::nullopt);

struct SearchTarget {
  std::int64_t d_v = 0, d_w = 0;
  SDTheorem theorem = SDTheorem::K3;
  std::optional<std::int64_t> t_v, t_w;

  bool operator==(const SearchTarget&) const = default;
};

struct SearchHit {
  FM2 phi;
  std::optional<SDCheck> check;

  bool operator==(const SearchHit&) const = default;
};

// Every admissible [[c,a],[e,b]] with entries bounded by `bound` in absolute
// value, c > a, -b > a, in lexicographic (c, a, e, b) order. With a target,
// only matrices passing sd_check are returned.
std::vector<SearchHit> search_phi(std::int64_t lambda, std::int64_t bound,
                                  const std::optional<SearchTarget>& target = std::nullopt);

struct SDRequest {
  // Defaults to the standard K3 model when classes are given without one.
  std::optional<SurfaceDescriptor> surface;
  std::optional<CohClass> v, w;
  // Used only when v, w are absent; otherwise recomputed via fdeg.
  std::optional<std::int64_t> d_v, d_w;
  bool no_higher_cohomology = false;
  std::array<std::int64_t, 4> phi = {0, 0, 0, 0};  // c, a, e, b
  // Defaults to the surface's lambda, or 1.
  std::optional<std::int64_t> lambda;
  std::vector<SDTheorem> theorems = {SDTheorem::K3};
  // General theorem only; default to moduli_dim_k3 of v / w on the standard K3.
  std::optional<std::int64_t> t_v, t_w;
};

struct SDReport {
  std::optional<std::string> surface;
  std::optional<CohClass> v, w;
  std::array<std::int64_t, 4> phi = {0, 0, 0, 0};
  std::int64_t lambda = 1;
  std::int64_t d_v = 0, d_w = 0;
  std::optional<bool> orthogonal, base_case;
  std::int64_t rk_xi_v = 0, rk_phi_w = 0;
  TriState k3_check = TriState::NotEvaluated;
  TriState general_check = TriState::NotEvaluated;
  std::optional<std::array<std::int64_t, 2>> k3_margins, general_margins;
  // rk Xi v >= 3 and rk Phi w >= 3, when the K3 theorem was evaluated.
  std::optional<bool> rank_threshold;
  std::vector<std::string> notes;

  bool operator==(const SDReport&) const = default;
};

// Runs orthogonality, the Hilbert-scheme base case, transformed ranks and the
// requested theorem checks. Throws AdmissibilityError / InputError.
SDReport sd_report(const SDRequest& req);

}  // namespace fmlat
