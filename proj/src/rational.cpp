#include "cubespec/rational.hpp"

#include "cubespec/errors.hpp"

namespace cubespec {

BigRat make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigRat make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

std::string to_fraction_string(const BigRat& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigRat parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return BigRat(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational: '" + text + "'");
  }
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt int_pow(const BigInt& base, unsigned long exp) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
  return result;
}

BigRat rat_pow(const BigRat& base, unsigned long exp) {
  if (exp == 0) return BigRat(1);
  BigRat result;
  mpz_pow_ui(result.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(result.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exp);
  return result;  // base canonical implies result canonical
}

}  // namespace cubespec
