#pragma once

#include <cstddef>
#include <vector>

#include "diagcell/delta_poly.hpp"

namespace diagcell {

class QMatrix;

// Dense row-major matrix over Q[delta].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<DeltaPoly> entries);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<DeltaPoly>& entries() const noexcept { return entries_; }

  DeltaPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const DeltaPoly& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool is_constant() const;
  bool is_symmetric() const;
  PolyMatrix transpose() const;
  QMatrix eval(const Rational& v) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<DeltaPoly> entries_;
};

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::size_t rank() const;
  // Throws Error(NonSquare); Error(ValidationFailed) if singular.
  QMatrix inverse() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Fraction-free (Bareiss) elimination; every intermediate stays in Q[delta].
// Throws Error(NonSquare).
DeltaPoly det(const PolyMatrix& m);

// Gaussian elimination over Q. Throws Error(NonSquare).
Rational det(const QMatrix& m);

}  // namespace diagcell
