#pragma once

#include <string>
#include <vector>

#include "cubespec/matrix.hpp"
#include "cubespec/rational.hpp"

namespace cubespec {

// Dense univariate polynomial with exact rational coefficients, index =
// power. Canonical form: no trailing zero coefficients; the zero polynomial
// is the empty list. Nothing in here ever rounds.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRat> coefficients);

  static RationalPolynomial constant(const BigRat& value);

  bool is_zero() const { return coefficients_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<BigRat>& coefficients() const { return coefficients_; }
  // Zero beyond the degree.
  BigRat coefficient(std::size_t power) const;
  const BigRat& leading_coefficient() const;

  BigRat evaluate(const BigRat& x) const;

  RationalPolynomial operator*(const RationalPolynomial& other) const;
  bool operator==(const RationalPolynomial& other) const = default;

 private:
  std::vector<BigRat> coefficients_;
};

// p(a*x + b), computed exactly by Horner evaluation in the polynomial ring.
RationalPolynomial compose_affine(const RationalPolynomial& p, const BigRat& a,
                                  const BigRat& b);

// det((x-1)*n*I + A) for the n-cube, built bottom-up: the order-1 case is
// x(x-2), and each dimension step splits the determinant through the
// [[A', I], [I, A']] block form into two affine substitutions of the
// previous polynomial. Degree 2^n, leading coefficient n^(2^n). 1 <= n <= 12.
RationalPolynomial charpoly_recursive(int n);

// The same polynomial as an expanded product of the known eigenvalue
// factors: n^(2^n) * prod_k (x - 2k/n)^C(n,k). Independent of the recursion
// route except for sharing the arithmetic layer.
RationalPolynomial charpoly_product(int n);

// Monic characteristic polynomial det(x*I - L) of the n-cube's normalized
// Laplacian: prod_k (x - 2k/n)^C(n,k).
RationalPolynomial laplacian_charpoly(int n);

// Exact characteristic polynomial det(x*I - M) of a rational matrix by the
// Faddeev-LeVerrier iteration, run over the integers after clearing
// denominators. Order capped at 64.
RationalPolynomial charpoly_faddeev_leverrier(const RatMatrix& m);

// Serialization used by the JSON interfaces: "p/q" per coefficient,
// index = power.
std::vector<std::string> coefficient_strings(const RationalPolynomial& p);
RationalPolynomial polynomial_from_strings(
    const std::vector<std::string>& coefficients);

}  // namespace cubespec
