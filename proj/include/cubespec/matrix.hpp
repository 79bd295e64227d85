#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cubespec/errors.hpp"
#include "cubespec/rational.hpp"

namespace cubespec {

// Minimal dense row-major matrix. Sized for the desk-scale exact work in
// this library, not for general numerics.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  T* row(std::size_t i) { return data_.data() + i * cols_; }
  const T* row(std::size_t i) const { return data_.data() + i * cols_; }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRat>;
using RealMatrix = Matrix<double>;

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
BigRat trace(const RatMatrix& m);
BigInt trace(const IntMatrix& m);

// Exact determinant by Bareiss fraction-free elimination: intermediate
// entries stay integral (they are minors of the input), so no rational
// arithmetic happens and no precision is lost.
BigInt bareiss_determinant(IntMatrix m);

// Determinant of a rational matrix. Rows are scaled integral first, then
// eliminated fraction-free; the row scalings divide back out at the end.
BigRat determinant(const RatMatrix& m);

// Solves A x = b exactly for square integer A: fraction-free forward
// elimination on the augmented system, rational back substitution. Throws
// SingularSystemError when A is singular.
std::vector<BigRat> solve_linear_system(const IntMatrix& a,
                                        const std::vector<BigInt>& b);

}  // namespace cubespec
