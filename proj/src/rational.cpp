#include "lpcoh/rational.hpp"

#include <cctype>

#include "lpcoh/errors.hpp"

namespace lpcoh {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view num = rest;
  std::string_view den = "1";
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError(std::string(text), "malformed rational, expected \"p\" or \"p/q\"");
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (d == 0) throw ParseError(std::string(text), "zero denominator");
  if (negative) n = -n;
  return Rational(n, d);  // the two-argument constructor canonicalizes
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return value.str();
}

}  // namespace lpcoh
