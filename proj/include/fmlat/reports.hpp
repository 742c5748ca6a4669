#pragma once

#include "fmlat/core_ring.hpp"
#include "fmlat/matrix.hpp"
#include "fmlat/sd_engine.hpp"
#include "fmlat/verify.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace fmlat {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Integers become JSON numbers, everything else an "n/d" string.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json class_to_json(const CohClass& v);  // [r, div..., p]
CohClass class_from_json(const json& j);

struct MatrixReport {
  std::string name;
  std::optional<std::int64_t> d;
  std::optional<RVec> divisor;
  std::string source;  // built | golden | grr
  std::string label;
  Matrix matrix;

  bool operator==(const MatrixReport&) const = default;
};

struct TransformReport {
  std::string name;
  std::optional<std::int64_t> d;
  std::optional<RVec> divisor;
  RVec input, output;

  bool operator==(const TransformReport&) const = default;
};

struct ChiReport {
  std::string surface;
  CohClass v, w;
  Rational chi;

  bool operator==(const ChiReport&) const = default;
};

struct SearchReport {
  std::int64_t lambda = 1, bound = 1;
  std::optional<SearchTarget> target;
  std::vector<SearchHit> hits;

  bool operator==(const SearchReport&) const = default;
};

json to_json(const VerifyOutcome& r);
json to_json(const SDReport& r);
json to_json(const MatrixReport& r);
json to_json(const TransformReport& r);
json to_json(const ChiReport& r);
json to_json(const SearchReport& r);

VerifyOutcome verify_from_json(const json& j);
SDReport sd_report_from_json(const json& j);
MatrixReport matrix_report_from_json(const json& j);
TransformReport transform_report_from_json(const json& j);
ChiReport chi_report_from_json(const json& j);
SearchReport search_report_from_json(const json& j);

std::string render_text(const VerifyOutcome& r);
std::string render_text(const SDReport& r);
std::string render_text(const MatrixReport& r);
std::string render_text(const TransformReport& r);
std::string render_text(const ChiReport& r);
std::string render_text(const SearchReport& r);

}  // namespace fmlat
