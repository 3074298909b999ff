#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace floerkit {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p" or "p/q" with an optional leading sign; throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
bool is_integer(const Rational& r);
int sign(const Rational& r);

}  // namespace floerkit
