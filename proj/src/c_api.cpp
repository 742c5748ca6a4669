#include "fmlat/fmlat.h"

#include "fmlat/error.hpp"
#include "fmlat/operator_algebra.hpp"
#include "fmlat/product_calculus.hpp"
#include "fmlat/reports.hpp"
#include "fmlat/surface_io.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct fmlat_surface {
  fmlat::SurfaceDescriptor S;
};

struct fmlat_operator {
  fmlat::GoldenName name;
  fmlat::MatrixReport report;
};

namespace {

thread_local std::string g_last_error;

fmlat_status fail(fmlat_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
fmlat_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return FMLAT_OK;
  } catch (const fmlat::Error& e) {
    return fail(static_cast<fmlat_status>(static_cast<int>(e.code())), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(FMLAT_ERR_INPUT, std::string("malformed JSON: ") + e.what());
  } catch (const std::bad_alloc&) {
    return fail(FMLAT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FMLAT_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void need(const void* p, const char* what) {
  if (!p) throw fmlat::InputError(std::string(what) + " must not be null");
}

template <class R>
std::string emit(const R& r, int as_json) {
  return as_json ? fmlat::to_json(r).dump(2) + "\n" : fmlat::render_text(r);
}

fmlat::CohClass parse_class(const char* text) {
  auto flat = fmlat::parse_rational_list(text);
  if (flat.size() < 3) throw fmlat::InputError("a class needs r, at least one divisor entry and p");
  return {flat.front(), fmlat::RVec(flat.begin() + 1, flat.end() - 1), flat.back()};
}

std::optional<std::int64_t> opt_int(const fmlat::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::int64_t>();
}

}  // namespace

extern "C" {

const char* fmlat_last_error(void) { return g_last_error.c_str(); }

const char* fmlat_status_name(fmlat_status s) {
  switch (s) {
    case FMLAT_OK: return "ok";
    case FMLAT_ERR_INPUT: return "input error";
    case FMLAT_ERR_PARSE: return "parse error";
    case FMLAT_ERR_UNSUPPORTED_MODEL: return "unsupported model";
    case FMLAT_ERR_COPRIMALITY: return "coprimality error";
    case FMLAT_ERR_ADMISSIBILITY: return "admissibility error";
    case FMLAT_ERR_SINGULAR: return "singular matrix";
    case FMLAT_ERR_REDUCTION: return "reduction undefined";
    case FMLAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

int fmlat_schema_version(void) { return fmlat::kSchemaVersion; }

void fmlat_string_free(char* s) { std::free(s); }

fmlat_status fmlat_surface_standard_k3(fmlat_surface** out) {
  return guarded([&] {
    need(out, "out");
    *out = new fmlat_surface{fmlat::SurfaceDescriptor::standard_k3()};
  });
}

fmlat_status fmlat_surface_load(const char* path, fmlat_surface** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new fmlat_surface{fmlat::load_surface(path)};
  });
}

fmlat_status fmlat_surface_parse(const char* text, fmlat_surface** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new fmlat_surface{fmlat::parse_surface(text)};
  });
}

fmlat_status fmlat_surface_format(const fmlat_surface* s, char** out) {
  return guarded([&] {
    need(s, "surface");
    need(out, "out");
    *out = dup(fmlat::format_surface(s->S));
  });
}

void fmlat_surface_free(fmlat_surface* s) { delete s; }

fmlat_status fmlat_chi(const fmlat_surface* s, const char* v, const char* w, int as_json, char** out) {
  return guarded([&] {
    need(s, "surface");
    need(v, "v");
    need(w, "w");
    need(out, "out");
    fmlat::ChiReport r{s->S.name(), parse_class(v), parse_class(w), {}};
    const std::size_t n = s->S.basis_names().size();
    if (r.v.div.size() != n || r.w.div.size() != n)
      throw fmlat::InputError("classes need " + std::to_string(n + 2) + " entries on surface '" + s->S.name() + "'");
    r.chi = fmlat::chi_tensor(s->S, r.v, r.w);
    *out = dup(emit(r, as_json));
  });
}

fmlat_status fmlat_operator_create(const char* name, int64_t d, const char* divisor, fmlat_source source,
                                   fmlat_operator** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    const auto g = fmlat::parse_golden_name(name);
    fmlat::GoldenParams params;
    params.d = d;
    if (d < 1) throw fmlat::InputError("d must be >= 1");
    if (divisor) {
      if (g != fmlat::GoldenName::A_TL) throw fmlat::InputError("--divisor applies to A_TL only");
      params.divisor = fmlat::parse_rational_list(divisor);
      if (params.divisor.size() != 2) throw fmlat::InputError("divisor must be x,y");
    }

    fmlat::MatrixReport r;
    r.name = name;
    if (fmlat::depends_on_d(g)) r.d = d;
    if (g == fmlat::GoldenName::A_TL) r.divisor = params.divisor;
    switch (source) {
      case FMLAT_SOURCE_BUILT: {
        r.source = "built";
        if (g == fmlat::GoldenName::B_S) {
          r.matrix = fmlat::restrict2(fmlat::build(fmlat::GoldenName::A_S));
          r.label = "restrict2(A_S)";
        } else {
          auto op = fmlat::build(g, params);
          r.matrix = op.matrix;
          r.label = op.label;
        }
        break;
      }
      case FMLAT_SOURCE_GOLDEN:
        r.source = "golden";
        r.matrix = fmlat::golden(g, params);
        r.label = "golden";
        break;
      case FMLAT_SOURCE_GRR: {
        r.source = "grr";
        fmlat::Operator op;
        if (g == fmlat::GoldenName::FM_Pd)
          op = fmlat::fm_matrix(fmlat::kernel_class(fmlat::Kernel::Pd(d)), fmlat::FMOrientation::PushFirstPullSecond);
        else if (g == fmlat::GoldenName::A_S)
          op = fmlat::fm_matrix(fmlat::kernel_class(fmlat::Kernel::IDelta()), fmlat::FMOrientation::PushSecondPullFirst);
        else
          throw fmlat::InputError("the grr source is available for FM_Pd and A_S only");
        r.matrix = op.matrix;
        r.label = op.label;
        break;
      }
      default:
        throw fmlat::InputError("unknown matrix source");
    }
    *out = new fmlat_operator{g, std::move(r)};
  });
}

fmlat_status fmlat_operator_render(const fmlat_operator* op, int as_json, char** out) {
  return guarded([&] {
    need(op, "operator");
    need(out, "out");
    *out = dup(emit(op->report, as_json));
  });
}

fmlat_status fmlat_operator_apply(const fmlat_operator* op, const char* vector, int as_json, char** out) {
  return guarded([&] {
    need(op, "operator");
    need(vector, "vector");
    need(out, "out");
    fmlat::TransformReport r;
    r.name = op->report.name;
    r.d = op->report.d;
    r.divisor = op->report.divisor;
    r.input = fmlat::parse_rational_list(vector);
    if (r.input.size() != op->report.matrix.cols())
      throw fmlat::InputError(r.name + " acts on vectors of length " + std::to_string(op->report.matrix.cols()));
    r.output = op->report.matrix * r.input;
    *out = dup(emit(r, as_json));
  });
}

void fmlat_operator_free(fmlat_operator* op) { delete op; }

fmlat_status fmlat_verify(int64_t d_lo, int64_t d_hi, const char* corrupt, int as_json, char** out,
                          int* all_pass) {
  return guarded([&] {
    need(out, "out");
    fmlat::VerifyOptions o;
    o.d_lo = d_lo;
    o.d_hi = d_hi;
    if (corrupt) o.corrupt_golden = fmlat::parse_golden_name(corrupt);
    auto r = fmlat::run_verify(o);
    if (all_pass) *all_pass = r.all_pass() ? 1 : 0;
    *out = dup(emit(r, as_json));
  });
}

fmlat_status fmlat_sd_check(const fmlat_surface* surface, const char* request_json, int as_json, char** out,
                            int* passed) {
  return guarded([&] {
    need(request_json, "request");
    need(out, "out");
    const auto j = fmlat::json::parse(request_json);
    fmlat::SDRequest req;
    if (surface) req.surface = surface->S;
    req.phi = j.at("phi").get<std::array<std::int64_t, 4>>();
    req.d_v = opt_int(j, "d_v");
    req.d_w = opt_int(j, "d_w");
    if (j.contains("v") && !j.at("v").is_null()) req.v = fmlat::class_from_json(j.at("v"));
    if (j.contains("w") && !j.at("w").is_null()) req.w = fmlat::class_from_json(j.at("w"));
    req.lambda = opt_int(j, "lambda");
    if (j.contains("theorems")) {
      req.theorems.clear();
      for (const auto& t : j.at("theorems")) req.theorems.push_back(fmlat::parse_theorem(t.get<std::string>()));
    }
    req.t_v = opt_int(j, "t_v");
    req.t_w = opt_int(j, "t_w");
    req.no_higher_cohomology = j.value("no_higher_cohomology", false);
    if (req.v.has_value() != req.w.has_value()) throw fmlat::InputError("give both v and w, or neither");
    if (!req.v && (!req.d_v || !req.d_w)) throw fmlat::InputError("need d_v and d_w, or the classes v and w");

    auto r = fmlat::sd_report(req);
    if (passed) {
      bool ok = true;
      for (auto t : req.theorems) {
        auto s = t == fmlat::SDTheorem::K3 ? r.k3_check : r.general_check;
        ok = ok && s == fmlat::TriState::Pass;
      }
      *passed = ok ? 1 : 0;
    }
    *out = dup(emit(r, as_json));
  });
}

fmlat_status fmlat_search(int64_t lambda, int64_t bound, const char* target_json, int as_json, char** out) {
  return guarded([&] {
    need(out, "out");
    fmlat::SearchReport r;
    r.lambda = lambda;
    r.bound = bound;
    if (target_json) {
      const auto j = fmlat::json::parse(target_json);
      fmlat::SearchTarget t;
      t.d_v = j.at("d_v").get<std::int64_t>();
      t.d_w = j.at("d_w").get<std::int64_t>();
      t.theorem = fmlat::parse_theorem(j.value("theorem", std::string("k3")));
      t.t_v = opt_int(j, "t_v");
      t.t_w = opt_int(j, "t_w");
      r.target = t;
    }
    r.hits = fmlat::search_phi(lambda, bound, r.target);
    *out = dup(emit(r, as_json));
  });
}

}  // extern "C"
