#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fmlat {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using RVec = std::vector<Rational>;

// Accepts "n", "-n", "n/d" (d != 0). Surrounding whitespace is ignored.
Rational parse_rational(std::string_view text);

// Comma-separated list of parse_rational values.
RVec parse_rational_list(std::string_view text);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

// Throws InputError when q is not an integer or does not fit in 64 bits.
std::int64_t to_int64(const Rational& q);

}  // namespace fmlat
