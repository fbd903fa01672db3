#pragma once

#include <cstddef>
#include <vector>

#include "mr6v/rational.hpp"

namespace mr6v {

/// Dense matrix over Rational. Determinants use fraction-free (Bareiss)
/// elimination, which keeps intermediate entries from blowing up at the
/// n ~ 12 sizes the thermodynamic checks need. The determinant of a 0x0
/// matrix is 1 (empty-determinant convention).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  /// Exact determinant; throws Error(NonSquare) for non-square input.
  Rational det() const;

  /// Exact inverse; throws Error(NonSquare) or Error(Singular).
  Matrix inverse() const;

  Matrix operator*(const Matrix& o) const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_identity() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

}  // namespace mr6v
