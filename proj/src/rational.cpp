#include "snr/rational.hpp"

#include <cctype>

#include "snr/errors.hpp"

namespace snr {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  Rational value(mpz_class(strip_plus(num)), mpz_class(strip_plus(den)));
  if (value.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

}  // namespace snr
