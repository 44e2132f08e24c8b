#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyint {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(int n);
Integer binomial(int n, int k);

// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(int n);

Rational power(const Rational& base, int exponent);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace polyint
