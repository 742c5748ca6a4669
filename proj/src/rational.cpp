#include "fmlat/rational.hpp"

#include "fmlat/error.hpp"

#include <cctype>
#include <limits>

namespace fmlat {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw InputError("malformed rational '" + std::string(whole) + "'");
  Integer v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("malformed rational '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  Integer num = parse_integer(s.substr(0, slash), text);
  Integer den = parse_integer(s.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

RVec parse_rational_list(std::string_view text) {
  RVec out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw InputError("expected an integer, got " + to_string(q));
  Integer n = numerator(q);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw InputError("integer out of range: " + n.str());
  return n.convert_to<std::int64_t>();
}

}  // namespace fmlat
