#include "cubespec/matrix.hpp"

#include <cstddef>

namespace cubespec {

namespace {

template <typename T>
Matrix<T> mul_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  T prod;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      const T* brow = b.row(k);
      T* orow = out.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        prod = aik * brow[j];
        orow[j] += prod;
      }
    }
  }
  return out;
}

template <typename T>
T trace_impl(const Matrix<T>& m) {
  if (!m.square()) throw ShapeError("trace of non-square matrix");
  T t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  return mul_impl(a, b);
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  return mul_impl(a, b);
}

BigRat trace(const RatMatrix& m) { return trace_impl(m); }
BigInt trace(const IntMatrix& m) { return trace_impl(m); }

BigInt bareiss_determinant(IntMatrix m) {
  if (!m.square()) throw ShapeError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return BigInt(1);

  BigInt prev(1);
  int sign = 1;
  BigInt t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // first nonzero pivot in column k
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return BigInt(0);
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      sign = -sign;
    }
    const BigInt& pkk = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInt mik = m(i, k);
      BigInt* ri = m.row(i);
      const BigInt* rk = m.row(k);
      for (std::size_t j = k + 1; j < n; ++j) {
        t = pkk * ri[j] - mik * rk[j];
        mpz_divexact(ri[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      ri[k] = 0;
    }
    prev = pkk;
  }
  BigInt det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

BigRat determinant(const RatMatrix& m) {
  if (!m.square()) throw ShapeError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix scaled(n, n);
  BigInt scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt lcm(1);
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const BigRat& v = m(i, j);
      scaled(i, j) = v.get_num() * (lcm / v.get_den());
    }
    scale *= lcm;
  }
  return make_rational(bareiss_determinant(std::move(scaled)), scale);
}

std::vector<BigRat> solve_linear_system(const IntMatrix& a,
                                        const std::vector<BigInt>& b) {
  if (!a.square()) throw ShapeError("solve requires a square matrix");
  const std::size_t n = a.rows();
  if (b.size() != n) throw ShapeError("right-hand side length mismatch");

  // augmented [A | b], eliminated fraction-free
  IntMatrix m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = b[i];
  }

  BigInt prev(1);
  BigInt t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) throw SingularSystemError("singular linear system");
    if (pivot != k)
      for (std::size_t j = k; j <= n; ++j) std::swap(m(k, j), m(pivot, j));
    const BigInt& pkk = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInt mik = m(i, k);
      BigInt* ri = m.row(i);
      const BigInt* rk = m.row(k);
      for (std::size_t j = k + 1; j <= n; ++j) {
        t = pkk * ri[j] - mik * rk[j];
        mpz_divexact(ri[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      ri[k] = 0;
    }
    prev = pkk;
  }

  std::vector<BigRat> x(n);
  for (std::size_t ri = n; ri-- > 0;) {
    BigRat acc(m(ri, n));
    for (std::size_t j = ri + 1; j < n; ++j) acc -= BigRat(m(ri, j)) * x[j];
    x[ri] = acc / BigRat(m(ri, ri));
  }
  return x;
}

}  // namespace cubespec
