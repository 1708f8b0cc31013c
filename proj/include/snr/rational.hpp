#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace snr {

using Rational = mpq_class;

// Accepts "p", "p/q", with an optional leading sign. Result is canonical.
Rational parse_rational(std::string_view text);
// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace snr
