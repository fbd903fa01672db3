#include "mr6v/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "mr6v/errors.hpp"

namespace mr6v {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Rational Matrix::det() const {
  if (rows_ != cols_)
    throw Error(Violation::NonSquare, "determinant of a " + std::to_string(rows_) + "x" +
                                          std::to_string(cols_) + " matrix");
  const std::size_t n = rows_;
  if (n == 0) return Rational(1);

  Matrix m(*this);
  Rational prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
      m.at(i, k) = Rational(0);
    }
    prev = m.at(k, k);
  }
  Rational d = m.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_)
    throw Error(Violation::NonSquare, "inverse of a " + std::to_string(rows_) + "x" +
                                          std::to_string(cols_) + " matrix");
  const std::size_t n = rows_;
  Matrix work(*this);
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw Error(Violation::Singular, "matrix has no inverse");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(col, j), work.at(pivot, j));
        std::swap(inv.at(col, j), inv.at(pivot, j));
      }
    }
    const Rational p = work.at(col, col).reciprocal();
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) *= p;
      inv.at(col, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || work.at(i, col).is_zero()) continue;
      const Rational factor = work.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        work.at(i, j) -= factor * work.at(col, j);
        inv.at(i, j) -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  }
  return r;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace mr6v
