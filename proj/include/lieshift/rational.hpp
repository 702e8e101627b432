#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lieshift {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent vector of a monomial. Negative entries only appear at central
/// Laurent variables.
using Exponent = std::vector<int>;

/// Parses "n", "-n" or "p/q". Floats are rejected.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace lieshift
