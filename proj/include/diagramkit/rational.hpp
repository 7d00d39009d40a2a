#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace diagramkit {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// Always "p/q", including integers ("3/1") so reports are byte-stable.
std::string to_string(const Rational& q);

// Accepts "p/q" or an integer "p". Decimals and other forms are rejected
// with std::invalid_argument.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

// Exact power with a non-negative exponent.
Rational pow(const Rational& base, unsigned exponent);

std::vector<std::string> to_strings(const std::vector<Rational>& values);

}  // namespace diagramkit
