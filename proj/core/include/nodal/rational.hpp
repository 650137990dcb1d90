#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nodal {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "-p", "p/q"; result is canonicalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

Rational power(const Rational& base, unsigned exponent);
BigInt binomial(long n, long k);
BigInt double_factorial(long n);
BigInt factorial(long n);

bool is_zero(const std::vector<Rational>& v);

}
