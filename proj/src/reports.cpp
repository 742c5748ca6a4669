#include "fmlat/reports.hpp"

#include "fmlat/error.hpp"

#include <limits>
#include <sstream>

namespace fmlat {
namespace {

json header(const char* kind) { return json{{"schema", kSchemaVersion}, {"kind", kind}}; }

void expect_kind(const json& j, const char* kind) {
  if (!j.is_object() || j.value("kind", "") != kind)
    throw InputError(std::string("expected a '") + kind + "' report");
}

json rvec_to_json(const RVec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rational_to_json(q));
  return a;
}

RVec rvec_from_json(const json& j) {
  RVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& r : m.to_rows()) rows.push_back(rvec_to_json(r));
  return rows;
}

Matrix matrix_from_json(const json& j) {
  std::vector<RVec> rows;
  for (const auto& r : j) rows.push_back(rvec_from_json(r));
  return Matrix::from_rows(rows);
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

TriState tristate_from(const std::string& s) {
  if (s == "pass") return TriState::Pass;
  if (s == "fail") return TriState::Fail;
  if (s == "not-evaluated") return TriState::NotEvaluated;
  throw InputError("bad check state '" + s + "'");
}

json check_to_json(const SDCheck& c) {
  return json{{"theorem", to_string(c.theorem)},
              {"verdict", to_string(c.verdict)},
              {"margins", {c.margin_v, c.margin_w}},
              {"ranks", {c.ranks.rk_xi_v, c.ranks.rk_phi_w}},
              {"rank_threshold", opt(c.rank_threshold_pass)},
              {"witnesses", {c.witness_v, c.witness_w}}};
}

SDCheck check_from_json(const json& j) {
  SDCheck c;
  c.theorem = parse_theorem(j.at("theorem").get<std::string>());
  c.verdict = tristate_from(j.at("verdict").get<std::string>());
  c.margin_v = j.at("margins").at(0).get<std::int64_t>();
  c.margin_w = j.at("margins").at(1).get<std::int64_t>();
  c.ranks.rk_xi_v = j.at("ranks").at(0).get<std::int64_t>();
  c.ranks.rk_phi_w = j.at("ranks").at(1).get<std::int64_t>();
  c.rank_threshold_pass = opt_from<bool>(j, "rank_threshold");
  c.witness_v = j.at("witnesses").at(0).get<std::string>();
  c.witness_w = j.at("witnesses").at(1).get<std::string>();
  return c;
}

std::string fmt_phi(const std::array<std::int64_t, 4>& p) {
  return "[[" + std::to_string(p[0]) + ", " + std::to_string(p[1]) + "], [" + std::to_string(p[2]) + ", " +
         std::to_string(p[3]) + "]]";
}

std::string join(const RVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s;
}

}  // namespace

json rational_to_json(const Rational& q) {
  if (is_integer(q)) {
    const Integer n = numerator(q);
    if (n <= std::numeric_limits<std::int64_t>::max() && n >= std::numeric_limits<std::int64_t>::min())
      return n.convert_to<std::int64_t>();
  }
  return to_string(q);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected an exact number (integer or \"n/d\" string)");
}

json class_to_json(const CohClass& v) {
  RVec flat{v.r};
  flat.insert(flat.end(), v.div.begin(), v.div.end());
  flat.push_back(v.p);
  return rvec_to_json(flat);
}

CohClass class_from_json(const json& j) {
  RVec flat = rvec_from_json(j);
  if (flat.size() < 3) throw InputError("a class needs at least rank, one divisor entry and ch2");
  return CohClass(flat.front(), RVec(flat.begin() + 1, flat.end() - 1), flat.back());
}

// --- verify ---------------------------------------------------------------

json to_json(const VerifyOutcome& r) {
  json j = header("verify");
  j["suite"] = r.suite;
  j["cases"] = json::array();
  for (const auto& c : r.cases)
    j["cases"].push_back(
        {{"id", c.id}, {"description", c.description}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  j["summary"] = {{"passed", r.passed}, {"failed", r.failed}, {"total", r.passed + r.failed}};
  return j;
}

VerifyOutcome verify_from_json(const json& j) {
  expect_kind(j, "verify");
  VerifyOutcome r;
  r.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("cases"))
    r.cases.push_back({c.at("id").get<std::string>(), c.at("description").get<std::string>(),
                       c.at("pass").get<bool>(), c.at("lhs").get<std::string>(), c.at("rhs").get<std::string>()});
  r.passed = j.at("summary").at("passed").get<std::int64_t>();
  r.failed = j.at("summary").at("failed").get<std::int64_t>();
  return r;
}

std::string render_text(const VerifyOutcome& r) {
  std::ostringstream os;
  for (const auto& c : r.cases) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.description << "\n";
    if (!c.pass) os << "     lhs: " << c.lhs << "\n     rhs: " << c.rhs << "\n";
  }
  os << r.passed << " passed, " << r.failed << " failed, " << (r.passed + r.failed) << " total\n";
  return os.str();
}

// --- sd report ------------------------------------------------------------

json to_json(const SDReport& r) {
  json j = header("sd-report");
  j["surface"] = opt(r.surface);
  j["v"] = r.v ? class_to_json(*r.v) : json(nullptr);
  j["w"] = r.w ? class_to_json(*r.w) : json(nullptr);
  j["phi"] = r.phi;
  j["lambda"] = r.lambda;
  j["d_v"] = r.d_v;
  j["d_w"] = r.d_w;
  j["orthogonal"] = opt(r.orthogonal);
  j["base_case"] = opt(r.base_case);
  j["rk_xi_v"] = r.rk_xi_v;
  j["rk_phi_w"] = r.rk_phi_w;
  j["checks"] = {{"k3", to_string(r.k3_check)}, {"general", to_string(r.general_check)}};
  j["margins"] = {{"k3", opt(r.k3_margins)}, {"general", opt(r.general_margins)}};
  j["rank_threshold"] = opt(r.rank_threshold);
  j["notes"] = r.notes;
  return j;
}

SDReport sd_report_from_json(const json& j) {
  expect_kind(j, "sd-report");
  SDReport r;
  r.surface = opt_from<std::string>(j, "surface");
  if (!j.at("v").is_null()) r.v = class_from_json(j.at("v"));
  if (!j.at("w").is_null()) r.w = class_from_json(j.at("w"));
  r.phi = j.at("phi").get<std::array<std::int64_t, 4>>();
  r.lambda = j.at("lambda").get<std::int64_t>();
  r.d_v = j.at("d_v").get<std::int64_t>();
  r.d_w = j.at("d_w").get<std::int64_t>();
  r.orthogonal = opt_from<bool>(j, "orthogonal");
  r.base_case = opt_from<bool>(j, "base_case");
  r.rk_xi_v = j.at("rk_xi_v").get<std::int64_t>();
  r.rk_phi_w = j.at("rk_phi_w").get<std::int64_t>();
  r.k3_check = tristate_from(j.at("checks").at("k3").get<std::string>());
  r.general_check = tristate_from(j.at("checks").at("general").get<std::string>());
  r.k3_margins = opt_from<std::array<std::int64_t, 2>>(j.at("margins"), "k3");
  r.general_margins = opt_from<std::array<std::int64_t, 2>>(j.at("margins"), "general");
  r.rank_threshold = opt_from<bool>(j, "rank_threshold");
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

std::string render_text(const SDReport& r) {
  std::ostringstream os;
  if (r.surface) os << "surface:     " << *r.surface << "\n";
  if (r.v) os << "v:           " << to_string(*r.v) << "\n";
  if (r.w) os << "w:           " << to_string(*r.w) << "\n";
  os << "phi:         " << fmt_phi(r.phi) << "  (lambda " << r.lambda << ")\n";
  os << "d_v, d_w:    " << r.d_v << ", " << r.d_w << "\n";
  if (r.orthogonal) os << "orthogonal:  " << (*r.orthogonal ? "yes" : "no") << "\n";
  if (r.base_case) os << "base case:   " << (*r.base_case ? "yes" : "no") << "\n";
  os << "ranks:       rk Xi v = " << r.rk_xi_v << ", rk Phi w = " << r.rk_phi_w << "\n";
  os << "k3 check:    " << to_string(r.k3_check);
  if (r.k3_margins) os << "  margins (" << (*r.k3_margins)[0] << ", " << (*r.k3_margins)[1] << ")";
  os << "\n";
  os << "general:     " << to_string(r.general_check);
  if (r.general_margins) os << "  margins (" << (*r.general_margins)[0] << ", " << (*r.general_margins)[1] << ")";
  os << "\n";
  if (r.rank_threshold) os << "rk >= 3:     " << (*r.rank_threshold ? "yes" : "no") << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

// --- matrix / transform / chi ---------------------------------------------

json to_json(const MatrixReport& r) {
  json j = header("matrix");
  j["name"] = r.name;
  j["d"] = opt(r.d);
  j["divisor"] = r.divisor ? rvec_to_json(*r.divisor) : json(nullptr);
  j["source"] = r.source;
  j["label"] = r.label;
  j["rows"] = matrix_to_json(r.matrix);
  return j;
}

MatrixReport matrix_report_from_json(const json& j) {
  expect_kind(j, "matrix");
  MatrixReport r;
  r.name = j.at("name").get<std::string>();
  r.d = opt_from<std::int64_t>(j, "d");
  if (!j.at("divisor").is_null()) r.divisor = rvec_from_json(j.at("divisor"));
  r.source = j.at("source").get<std::string>();
  r.label = j.at("label").get<std::string>();
  r.matrix = matrix_from_json(j.at("rows"));
  return r;
}

std::string render_text(const MatrixReport& r) {
  std::ostringstream os;
  os << r.name;
  if (r.d) os << " (d=" << *r.d << ")";
  if (r.divisor) os << " (D=" << join(*r.divisor) << ")";
  os << " [" << r.source << "]\n" << render_grid(r.matrix);
  return os.str();
}

json to_json(const TransformReport& r) {
  json j = header("transform");
  j["name"] = r.name;
  j["d"] = opt(r.d);
  j["divisor"] = r.divisor ? rvec_to_json(*r.divisor) : json(nullptr);
  j["input"] = rvec_to_json(r.input);
  j["output"] = rvec_to_json(r.output);
  return j;
}

TransformReport transform_report_from_json(const json& j) {
  expect_kind(j, "transform");
  TransformReport r;
  r.name = j.at("name").get<std::string>();
  r.d = opt_from<std::int64_t>(j, "d");
  if (!j.at("divisor").is_null()) r.divisor = rvec_from_json(j.at("divisor"));
  r.input = rvec_from_json(j.at("input"));
  r.output = rvec_from_json(j.at("output"));
  return r;
}

std::string render_text(const TransformReport& r) { return join(r.output) + "\n"; }

json to_json(const ChiReport& r) {
  json j = header("chi");
  j["surface"] = r.surface;
  j["v"] = class_to_json(r.v);
  j["w"] = class_to_json(r.w);
  j["chi"] = rational_to_json(r.chi);
  return j;
}

ChiReport chi_report_from_json(const json& j) {
  expect_kind(j, "chi");
  return {j.at("surface").get<std::string>(), class_from_json(j.at("v")), class_from_json(j.at("w")),
          rational_from_json(j.at("chi"))};
}

std::string render_text(const ChiReport& r) { return to_string(r.chi) + "\n"; }

// --- search ---------------------------------------------------------------

json to_json(const SearchReport& r) {
  json j = header("search");
  j["lambda"] = r.lambda;
  j["bound"] = r.bound;
  if (r.target)
    j["target"] = {{"d_v", r.target->d_v},
                   {"d_w", r.target->d_w},
                   {"theorem", to_string(r.target->theorem)},
                   {"t_v", opt(r.target->t_v)},
                   {"t_w", opt(r.target->t_w)}};
  else
    j["target"] = nullptr;
  j["hits"] = json::array();
  for (const auto& h : r.hits) {
    json hj = {{"phi", {h.phi.c(), h.phi.a(), h.phi.e(), h.phi.b()}}};
    hj["check"] = h.check ? check_to_json(*h.check) : json(nullptr);
    j["hits"].push_back(hj);
  }
  j["count"] = r.hits.size();
  return j;
}

SearchReport search_report_from_json(const json& j) {
  expect_kind(j, "search");
  SearchReport r;
  r.lambda = j.at("lambda").get<std::int64_t>();
  r.bound = j.at("bound").get<std::int64_t>();
  if (!j.at("target").is_null()) {
    const auto& t = j.at("target");
    SearchTarget tg;
    tg.d_v = t.at("d_v").get<std::int64_t>();
    tg.d_w = t.at("d_w").get<std::int64_t>();
    tg.theorem = parse_theorem(t.at("theorem").get<std::string>());
    tg.t_v = opt_from<std::int64_t>(t, "t_v");
    tg.t_w = opt_from<std::int64_t>(t, "t_w");
    r.target = tg;
  }
  for (const auto& h : j.at("hits")) {
    auto p = h.at("phi").get<std::array<std::int64_t, 4>>();
    SearchHit hit{FM2::make(p[0], p[1], p[2], p[3], r.lambda), std::nullopt};
    if (!h.at("check").is_null()) hit.check = check_from_json(h.at("check"));
    r.hits.push_back(std::move(hit));
  }
  return r;
}

std::string render_text(const SearchReport& r) {
  std::ostringstream os;
  for (const auto& h : r.hits) {
    os << fmt_phi({h.phi.c(), h.phi.a(), h.phi.e(), h.phi.b()});
    if (h.check)
      os << "  " << to_string(h.check->verdict) << " margins (" << h.check->margin_v << ", " << h.check->margin_w
         << ") ranks (" << h.check->ranks.rk_xi_v << ", " << h.check->ranks.rk_phi_w << ")";
    os << "\n";
  }
  os << r.hits.size() << " matrices\n";
  return os.str();
}

}  // namespace fmlat
