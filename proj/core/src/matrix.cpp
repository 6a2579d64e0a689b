#include "wallacs/matrix.hpp"

namespace wallacs {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw std::domain_error("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<IntVec> IntMatrix::to_rows() const {
  std::vector<IntVec> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i].resize(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

bool is_symmetric(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_skew_symmetric_zero_diagonal(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  }
  return true;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("determinant: not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (a(p, p) == 0) {
      std::size_t r = p + 1;
      while (r < n && a(r, p) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i)
      for (std::size_t j = p + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(p, p) - a(i, p) * a(p, j)) / prev;
    prev = a(p, p);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Int evaluate_form(const IntMatrix& m, const IntVec& x, const IntVec& y) {
  if (x.size() != m.rows() || y.size() != m.cols())
    throw std::domain_error("evaluate_form: dimension mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (y[j] != 0) row += m(i, j) * y[j];
    acc += x[i] * row;
  }
  return acc;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::domain_error("matmul: dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a(i, l) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

namespace {

std::vector<std::vector<Rational>> to_rational(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  return a;
}

}  // namespace

std::vector<Rational> congruence_diagonal(const IntMatrix& symmetric) {
  if (!is_symmetric(symmetric))
    throw std::domain_error("congruence_diagonal: matrix is not symmetric");
  const std::size_t n = symmetric.rows();
  auto a = to_rational(symmetric);
  std::vector<Rational> diag;
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] == 0) {
      std::size_t j = i + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        std::swap(a[i], a[j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
      } else {
        // The remaining diagonal is zero; fold a nonzero off-diagonal pair
        // into position i, turning a[i][i] into 2*a[i][j] != 0.
        j = i + 1;
        while (j < n && a[i][j] == 0) ++j;
        if (j == n)
          throw std::domain_error("congruence_diagonal: singular matrix");
        for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
        for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
      }
    }
    const Rational d = a[i][i];
    diag.push_back(d);
    for (std::size_t r = i + 1; r < n; ++r) {
      if (a[r][i] == 0) continue;
      const Rational f = a[r][i] / d;
      for (std::size_t c = i; c < n; ++c) a[r][c] -= f * a[i][c];
    }
    // The paired column elimination only zeroes the tails of row/column i;
    // the trailing block is already symmetric.
    for (std::size_t r = i + 1; r < n; ++r) {
      a[i][r] = 0;
      a[r][i] = 0;
    }
  }
  return diag;
}

QuadraticCompletion quadratic_completion(const IntMatrix& symmetric) {
  if (!is_symmetric(symmetric))
    throw std::domain_error("quadratic_completion: matrix is not symmetric");
  const std::size_t n = symmetric.rows();
  auto a = to_rational(symmetric);
  QuadraticCompletion qc;
  qc.d.resize(n);
  qc.u.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] <= 0)
      throw std::domain_error("quadratic_completion: not positive definite");
    qc.d[i] = a[i][i];
    for (std::size_t j = i + 1; j < n; ++j) qc.u[i][j] = a[i][j] / a[i][i];
    for (std::size_t r = i + 1; r < n; ++r)
      for (std::size_t c = i + 1; c < n; ++c)
        a[r][c] -= a[r][i] * a[i][c] / a[i][i];
  }
  return qc;
}

}  // namespace wallacs
