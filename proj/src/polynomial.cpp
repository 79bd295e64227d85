#include "cubespec/polynomial.hpp"

#include <string>
#include <utility>

#include "cubespec/errors.hpp"

namespace cubespec {

namespace {

constexpr int kDegreeCapDimension = 12;  // degree 2^12 = 4096

void check_charpoly_dimension(int n) {
  if (n < 1 || n > kDegreeCapDimension)
    throw DimensionError("characteristic polynomials supported for 1 <= n <= " +
                         std::to_string(kDegreeCapDimension) + ", got " +
                         std::to_string(n));
}

// p := p * (x - root), in place on the ascending coefficient list.
void multiply_linear(std::vector<BigRat>& c, const BigRat& root) {
  c.emplace_back(0);
  for (std::size_t j = c.size() - 1; j >= 1; --j)
    c[j] = c[j - 1] - root * c[j];
  c[0] = -root * c[0];
}

std::vector<BigRat> eigenfactor_product(int n, const BigRat& lead) {
  std::vector<BigRat> c{lead};
  const unsigned long un = static_cast<unsigned long>(n);
  for (unsigned long k = 0; k <= un; ++k) {
    const BigRat root = make_rational(BigInt(2 * k), BigInt(un));
    const unsigned long mult = binomial(un, k).get_ui();
    for (unsigned long t = 0; t < mult; ++t) multiply_linear(c, root);
  }
  return c;
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<BigRat> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0)
    coefficients_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const BigRat& value) {
  if (value == 0) return RationalPolynomial();
  return RationalPolynomial(std::vector<BigRat>{value});
}

BigRat RationalPolynomial::coefficient(std::size_t power) const {
  if (power >= coefficients_.size()) return BigRat(0);
  return coefficients_[power];
}

const BigRat& RationalPolynomial::leading_coefficient() const {
  if (coefficients_.empty())
    throw DomainError("zero polynomial has no leading coefficient");
  return coefficients_.back();
}

BigRat RationalPolynomial::evaluate(const BigRat& x) const {
  BigRat acc(0);
  for (std::size_t i = coefficients_.size(); i-- > 0;)
    acc = acc * x + coefficients_[i];
  return acc;
}

RationalPolynomial RationalPolynomial::operator*(
    const RationalPolynomial& other) const {
  if (is_zero() || other.is_zero()) return RationalPolynomial();
  const auto& a = coefficients_;
  const auto& b = other.coefficients_;
  std::vector<BigRat> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return RationalPolynomial(std::move(c));
}

RationalPolynomial compose_affine(const RationalPolynomial& p, const BigRat& a,
                                  const BigRat& b) {
  if (p.is_zero()) return RationalPolynomial();
  if (a == 0) return RationalPolynomial::constant(p.evaluate(b));
  const auto& c = p.coefficients();
  if (b == 0) {
    // p(a*x): coefficient k picks up a^k
    std::vector<BigRat> out(c);
    BigRat power(1);
    for (std::size_t k = 1; k < out.size(); ++k) {
      power *= a;
      out[k] *= power;
    }
    return RationalPolynomial(std::move(out));
  }
  // Horner in the polynomial ring: r := r*(a*x + b) + c_k, top down.
  std::vector<BigRat> r{c.back()};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    r.emplace_back(0);
    for (std::size_t j = r.size() - 1; j >= 1; --j)
      r[j] = r[j - 1] * a + r[j] * b;
    r[0] = r[0] * b + c[k];
  }
  return RationalPolynomial(std::move(r));
}

RationalPolynomial charpoly_recursive(int n) {
  check_charpoly_dimension(n);
  RationalPolynomial f(std::vector<BigRat>{BigRat(0), BigRat(-2), BigRat(1)});
  for (int m = 2; m <= n; ++m) {
    const BigRat scale = make_rational(m, m - 1);
    const BigRat shift = make_rational(-2, m - 1);
    f = compose_affine(f, scale, BigRat(0)) * compose_affine(f, scale, shift);
  }
  return f;
}

RationalPolynomial charpoly_product(int n) {
  check_charpoly_dimension(n);
  const BigRat lead(int_pow(BigInt(n), 1ul << static_cast<unsigned>(n)));
  return RationalPolynomial(eigenfactor_product(n, lead));
}

RationalPolynomial laplacian_charpoly(int n) {
  check_charpoly_dimension(n);
  return RationalPolynomial(eigenfactor_product(n, BigRat(1)));
}

RationalPolynomial charpoly_faddeev_leverrier(const RatMatrix& m) {
  if (!m.square())
    throw ShapeError("characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  if (n > 64)
    throw DimensionError("characteristic-polynomial oracle capped at order 64");
  if (n == 0) return RationalPolynomial::constant(BigRat(1));

  // Clear denominators: with B = d*M integral, det(x*I - M) has coefficient
  // of x^j equal to c_j / d^(n-j) where c_j comes from det(y*I - B).
  BigInt d(1);
  for (const BigRat& v : m.data())
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den().get_mpz_t());
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b(i, j) = m(i, j).get_num() * (d / m(i, j).get_den());

  // Faddeev-LeVerrier: M_1 = I; c_{n-k} = -tr(B*M_k)/k;
  // M_{k+1} = B*M_k + c_{n-k}*I. For an integer matrix every division is
  // exact, so the whole iteration stays in the integers.
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix mk = IntMatrix::identity(n);
  BigInt t;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      mk = mat_mul(b, mk);
      const BigInt& prev = c[n - k + 1];
      for (std::size_t i = 0; i < n; ++i) mk(i, i) += prev;
    }
    // tr(B*M_k) without forming the product
    t = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t += b(i, j) * mk(j, i);
    t = -t;
    mpz_divexact_ui(c[n - k].get_mpz_t(), t.get_mpz_t(), k);
  }

  std::vector<BigRat> out(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    out[j] = make_rational(c[j], int_pow(d, n - j));
  return RationalPolynomial(std::move(out));
}

std::vector<std::string> coefficient_strings(const RationalPolynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const BigRat& c : p.coefficients()) out.push_back(to_fraction_string(c));
  return out;
}

RationalPolynomial polynomial_from_strings(
    const std::vector<std::string>& coefficients) {
  std::vector<BigRat> c;
  c.reserve(coefficients.size());
  for (const auto& s : coefficients) c.push_back(parse_fraction(s));
  return RationalPolynomial(std::move(c));
}

}  // namespace cubespec
