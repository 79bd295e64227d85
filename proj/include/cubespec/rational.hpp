#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cubespec {

// All exact arithmetic in the library runs on GMP's big integers and big
// rationals. Rationals are kept canonical (lowest terms, positive
// denominator) at every construction point.
using BigInt = mpz_class;
using BigRat = mpq_class;

// den must be nonzero. Canonicalizes, unlike the raw mpq_class(num, den)
// constructor.
BigRat make_rational(const BigInt& num, const BigInt& den);
BigRat make_rational(long num, long den = 1);

// "p/q" in lowest terms with q > 0, e.g. "5/2", "-1/3", "0/1". The
// denominator is always written so the format is self-describing.
std::string to_fraction_string(const BigRat& value);

// Accepts "p/q" or a bare integer "p". Throws DomainError on malformed input
// or zero denominator.
BigRat parse_fraction(const std::string& text);

BigInt binomial(unsigned long n, unsigned long k);
BigInt int_pow(const BigInt& base, unsigned long exp);
BigRat rat_pow(const BigRat& base, unsigned long exp);

}  // namespace cubespec
