#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace invhilb {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; values built from raw numerator/denominator pairs must
// go through make_rational().
using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

// Accepts "p", "-p", "p/q" with decimal digits. Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

BigInt factorial(unsigned n);

} // namespace invhilb
