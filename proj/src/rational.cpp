#include "gt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gt {

bool is_integer(const Rational& r) { return denominator(r) == 1; }

bool is_nonneg_integer(const Rational& r) { return is_integer(r) && r >= 0; }

Integer integer_value(const Rational& r) {
  if (!is_integer(r)) throw std::invalid_argument("integer_value: " + to_string(r) + " is not an integer");
  return numerator(r);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_signed_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw std::invalid_argument("invalid rational \"" + std::string(whole) + "\"");
  }
  Integer value{std::string(digits)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_signed_integer(text, text));
  }
  const Integer num = parse_signed_integer(text.substr(0, slash), text);
  const std::string_view den_part = text.substr(slash + 1);
  if (!all_digits(den_part)) {
    throw std::invalid_argument("invalid rational \"" + std::string(text) + "\"");
  }
  const Integer den{std::string(den_part)};
  if (den == 0) {
    throw std::invalid_argument("invalid rational \"" + std::string(text) + "\": zero denominator");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace gt
