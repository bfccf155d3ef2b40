#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hcb {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-p/q" or an integer. The result is canonicalized.
/// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 1, or "p" when the value is an integer.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace hcb
