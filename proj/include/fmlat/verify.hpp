#pragma once

#include "fmlat/operator_algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fmlat {

struct VerifyCase {
  std::string id;
  std::string description;
  bool pass = false;
  std::string lhs, rhs;

  bool operator==(const VerifyCase&) const = default;
};

struct VerifyOutcome {
  std::string suite = "verify";
  std::vector<VerifyCase> cases;
  std::int64_t passed = 0, failed = 0;

  bool all_pass() const { return failed == 0; }
  bool operator==(const VerifyOutcome&) const = default;
};

struct VerifyOptions {
  std::int64_t d_lo = 1, d_hi = 6;
  // Fault injection for negative-path tests: perturbs entry (1,1) of this
  // golden table before comparing.
  std::optional<GoldenName> corrupt_golden;
};

// Every golden-vs-built, GRR-vs-golden, product fixture, inverse, pairing and
// Bridgeland check over d in [d_lo, d_hi]. Throws InputError unless
// 1 <= d_lo <= d_hi <= 64.
VerifyOutcome run_verify(const VerifyOptions& opts);

// Compact row-list rendering "[[a,b],[c,d]]".
std::string render_rows(const Matrix& m);

}  // namespace fmlat
