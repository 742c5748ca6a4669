// fmlat command-line front end. Links only the C interface.
#include "fmlat/fmlat.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct Failure {
  int code;
};

void check(fmlat_status s) {
  if (s == FMLAT_OK) return;
  std::cerr << "fmlat: " << fmlat_status_name(s) << ": " << fmlat_last_error() << "\n";
  throw Failure{s == FMLAT_ERR_INTERNAL ? kCheckFailed : kUsage};
}

void usage_error(const std::string& msg) {
  std::cerr << "fmlat: input error: " << msg << "\n";
  throw Failure{kUsage};
}

void print_and_free(char* out) {
  std::fputs(out, stdout);
  fmlat_string_free(out);
}

// "a..b" or a single integer.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  try {
    auto dots = s.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      auto v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    auto lo_s = s.substr(0, dots), hi_s = s.substr(dots + 2);
    auto lo = std::stoll(lo_s, &used);
    if (used != lo_s.size()) throw std::invalid_argument(s);
    auto hi = std::stoll(hi_s, &used);
    if (used != hi_s.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    usage_error("bad range '" + s + "', expected lo..hi");
  }
  return {0, 0};
}

fmlat_source parse_source(const std::string& s) {
  if (s == "built") return FMLAT_SOURCE_BUILT;
  if (s == "golden") return FMLAT_SOURCE_GOLDEN;
  if (s == "grr") return FMLAT_SOURCE_GRR;
  usage_error("unknown source '" + s + "'");
  return FMLAT_SOURCE_BUILT;
}

struct SurfaceHandle {
  fmlat_surface* s = nullptr;
  ~SurfaceHandle() { fmlat_surface_free(s); }
};

// --surface, then $FMLAT_SURFACE, then the built-in K3 model.
void open_surface(const std::string& path, SurfaceHandle& h) {
  std::string p = path;
  if (p.empty())
    if (const char* env = std::getenv("FMLAT_SURFACE")) p = env;
  check(p.empty() ? fmlat_surface_standard_k3(&h.s) : fmlat_surface_load(p.c_str(), &h.s));
}

nlohmann::json class_json(const std::string& text) {
  nlohmann::json a = nlohmann::json::array();
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    a.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return a;
}

struct Args {
  bool json = false;

  std::string d_range = "1..6";
  std::string corrupt;

  std::string name;
  std::int64_t d = 1;
  std::string divisor;
  std::string source = "built";
  std::string vector;

  std::string surface, v, w;

  std::vector<std::int64_t> phi;
  std::optional<std::int64_t> dv, dw, tv, tw, lambda;
  std::vector<std::string> theorems;
  bool attest = false;

  std::int64_t bound = 5;
  std::string theorem = "k3";
};

int run_operator(const Args& a, bool transform) {
  fmlat_operator* op = nullptr;
  check(fmlat_operator_create(a.name.c_str(), a.d, a.divisor.empty() ? nullptr : a.divisor.c_str(),
                              parse_source(a.source), &op));
  char* out = nullptr;
  fmlat_status s = transform ? fmlat_operator_apply(op, a.vector.c_str(), a.json, &out)
                             : fmlat_operator_render(op, a.json, &out);
  fmlat_operator_free(op);
  check(s);
  print_and_free(out);
  return kOk;
}

int run_verify(const Args& a) {
  auto [lo, hi] = parse_range(a.d_range);
  char* out = nullptr;
  int all_pass = 0;
  check(fmlat_verify(lo, hi, a.corrupt.empty() ? nullptr : a.corrupt.c_str(), a.json, &out, &all_pass));
  print_and_free(out);
  return all_pass ? kOk : kCheckFailed;
}

int run_chi(const Args& a) {
  SurfaceHandle h;
  open_surface(a.surface, h);
  char* out = nullptr;
  check(fmlat_chi(h.s, a.v.c_str(), a.w.c_str(), a.json, &out));
  print_and_free(out);
  return kOk;
}

int run_sd_check(const Args& a) {
  if (a.phi.size() != 4) usage_error("--phi takes c,a,e,b");
  nlohmann::json req;
  req["phi"] = a.phi;
  if (a.dv) req["d_v"] = *a.dv;
  if (a.dw) req["d_w"] = *a.dw;
  if (a.tv) req["t_v"] = *a.tv;
  if (a.tw) req["t_w"] = *a.tw;
  if (a.lambda) req["lambda"] = *a.lambda;
  if (!a.v.empty()) req["v"] = class_json(a.v);
  if (!a.w.empty()) req["w"] = class_json(a.w);
  req["theorems"] = a.theorems.empty() ? std::vector<std::string>{"k3"} : a.theorems;
  req["no_higher_cohomology"] = a.attest;

  SurfaceHandle h;
  if (!a.v.empty() || !a.w.empty()) open_surface(a.surface, h);
  char* out = nullptr;
  int passed = 0;
  check(fmlat_sd_check(h.s, req.dump().c_str(), a.json, &out, &passed));
  print_and_free(out);
  return passed ? kOk : kCheckFailed;
}

int run_search(const Args& a) {
  std::string target;
  if (a.dv || a.dw) {
    if (!a.dv || !a.dw) usage_error("--dv and --dw go together");
    nlohmann::json t{{"d_v", *a.dv}, {"d_w", *a.dw}, {"theorem", a.theorem}};
    if (a.tv) t["t_v"] = *a.tv;
    if (a.tw) t["t_w"] = *a.tw;
    target = t.dump();
  }
  char* out = nullptr;
  check(fmlat_search(a.lambda.value_or(1), a.bound, target.empty() ? nullptr : target.c_str(), a.json, &out));
  print_and_free(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fourier-Mukai lattice calculus on elliptic K3 surfaces"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Args a;
  app.add_flag("--json", a.json, "Emit JSON instead of text");

  auto* verify = app.add_subcommand("verify", "Run every built-in identity check");
  verify->add_option("--d-range", a.d_range, "Range of d, lo..hi within 1..64")->capture_default_str();
  verify->add_option("--corrupt-golden", a.corrupt)->group("");

  auto* matrix = app.add_subcommand("matrix", "Print an action matrix");
  matrix->add_option("name", a.name, "Matrix name, e.g. FM_Pd")->required();
  matrix->add_option("--d", a.d, "Parameter d >= 1")->capture_default_str();
  matrix->add_option("--divisor", a.divisor, "Divisor x,y for A_TL");
  matrix->add_option("--source", a.source, "built | golden | grr")->capture_default_str();

  auto* transform = app.add_subcommand("transform", "Apply an action matrix to a vector");
  transform->add_option("--matrix", a.name, "Matrix name")->required();
  transform->add_option("--d", a.d, "Parameter d >= 1")->capture_default_str();
  transform->add_option("--divisor", a.divisor, "Divisor x,y for A_TL");
  transform->add_option("--source", a.source, "built | golden | grr")->capture_default_str();
  transform->add_option("--vector", a.vector, "r,s,t,p")->required();

  auto* chi = app.add_subcommand("chi", "Euler characteristic chi(v, w)");
  chi->add_option("--surface", a.surface, "Surface file (default $FMLAT_SURFACE, else the K3 model)");
  chi->add_option("--v", a.v, "r,div...,p")->required();
  chi->add_option("--w", a.w, "r,div...,p")->required();

  auto* sd = app.add_subcommand("sd-check", "Check the duality hypotheses for a matrix phi");
  sd->add_option("--phi", a.phi, "c,a,e,b")->delimiter(',')->required();
  sd->add_option("--dv", a.dv, "Fiber degree of v");
  sd->add_option("--dw", a.dw, "Fiber degree of w");
  sd->add_option("--v", a.v, "Class v as r,div...,p");
  sd->add_option("--w", a.w, "Class w as r,div...,p");
  sd->add_option("--surface", a.surface, "Surface file for --v/--w");
  sd->add_option("--theorem", a.theorems, "k3 | general (repeatable)")->check(CLI::IsMember({"k3", "general"}));
  sd->add_option("--tv", a.tv, "t for v (general theorem)");
  sd->add_option("--tw", a.tw, "t for w (general theorem)");
  sd->add_option("--lambda", a.lambda, "Fiber degree gcd");
  sd->add_flag("--attest-no-higher-cohomology", a.attest, "Assert O(L_v + L_w) has no higher cohomology");

  auto* search = app.add_subcommand("search", "Enumerate admissible matrices phi");
  search->add_option("--lambda", a.lambda, "Fiber degree gcd");
  search->add_option("--bound", a.bound, "Bound on |entries|")->capture_default_str();
  search->add_option("--dv", a.dv, "Keep only matrices passing for this d_v");
  search->add_option("--dw", a.dw, "... and this d_w");
  search->add_option("--theorem", a.theorem, "k3 | general")->check(CLI::IsMember({"k3", "general"}));
  search->add_option("--tv", a.tv, "t for v (general theorem)");
  search->add_option("--tw", a.tw, "t for w (general theorem)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "fmlat: usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*verify) return run_verify(a);
    if (*matrix) return run_operator(a, false);
    if (*transform) return run_operator(a, true);
    if (*chi) return run_chi(a);
    if (*sd) return run_sd_check(a);
    if (*search) return run_search(a);
  } catch (const Failure& f) {
    return f.code;
  }
  return kUsage;
}
