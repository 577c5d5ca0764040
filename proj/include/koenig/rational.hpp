#pragma once

#include <gmpxx.h>

#include <string>

namespace koenig {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" or "p" in lowest terms.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(const std::string& text);

}  // namespace koenig
