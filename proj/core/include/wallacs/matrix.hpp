#pragma once

#include <cstddef>
#include <vector>

#include "wallacs/exact.hpp"

namespace wallacs {

using IntVec = std::vector<Int>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVec& d);
  // Throws std::domain_error on ragged input.
  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  std::vector<IntVec> to_rows() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

bool is_symmetric(const IntMatrix& m);
bool is_skew_symmetric_zero_diagonal(const IntMatrix& m);

// Exact determinant (fraction-free Bareiss elimination). Empty matrix -> 1.
Int determinant(const IntMatrix& m);

// x^T m y. Dimension mismatch -> std::domain_error.
Int evaluate_form(const IntMatrix& m, const IntVec& x, const IntVec& y);

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& m);

// Diagonal of a rational diagonal form congruent to the given symmetric
// matrix (simultaneous row/column elimination; a zero diagonal block is
// handled by adding one row/column pair into another). All returned entries
// are nonzero; a singular input throws std::domain_error.
std::vector<Rational> congruence_diagonal(const IntMatrix& symmetric);

// Coefficients of the completed-squares representation of a positive
// definite symmetric matrix A:
//   x^T A x = sum_i d[i] * (x_i + sum_{j>i} u[i][j] * x_j)^2, d[i] > 0.
// Throws std::domain_error when A is not positive definite.
struct QuadraticCompletion {
  std::vector<Rational> d;
  std::vector<std::vector<Rational>> u;
};
QuadraticCompletion quadratic_completion(const IntMatrix& symmetric);

}  // namespace wallacs
