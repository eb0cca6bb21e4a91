#include "diagcell/poly_matrix.hpp"

#include <utility>

#include "diagcell/error.hpp"

namespace diagcell {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<DeltaPoly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::SizeMismatch, "matrix entry count does not match its shape");
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool PolyMatrix::is_constant() const {
  for (const auto& e : entries_) {
    if (!e.is_constant()) return false;
  }
  return true;
}

bool PolyMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

QMatrix PolyMatrix::eval(const Rational& v) const {
  QMatrix q(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) q(i, j) = (*this)(i, j).eval(v);
  }
  return q;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product shape mismatch");
  PolyMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const DeltaPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorCode::SizeMismatch, "matrix sum shape mismatch");
  }
  PolyMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
  return c;
}

DeltaPoly det(const PolyMatrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  PolyMatrix a = m;
  DeltaPoly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = divexact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = DeltaPoly();
    }
    prev = a(k, k);
  }
  DeltaPoly d = a(n - 1, n - 1);
  return negate ? -d : d;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

namespace {

// Row-reduces `a` in place (with optional companion `b` receiving the same
// row operations); returns the rank and the determinant sign/scale factor.
std::size_t eliminate(QMatrix& a, QMatrix* b, Rational* det_out) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Rational det = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) {
      det = 0;
      continue;
    }
    if (p != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(rank, j));
      if (b) {
        for (std::size_t j = 0; j < b->cols(); ++j) std::swap((*b)(p, j), (*b)(rank, j));
      }
      det = -det;
    }
    Rational piv = a(rank, c);
    det *= piv;
    Rational inv = 1 / piv;
    for (std::size_t j = 0; j < cols; ++j) a(rank, j) *= inv;
    if (b) {
      for (std::size_t j = 0; j < b->cols(); ++j) (*b)(rank, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        if (a(rank, j) != 0) a(i, j) -= f * a(rank, j);
      }
      if (b) {
        for (std::size_t j = 0; j < b->cols(); ++j) {
          if ((*b)(rank, j) != 0) (*b)(i, j) -= f * (*b)(rank, j);
        }
      }
    }
    ++rank;
  }
  if (rank < rows || rank < cols) det = 0;
  if (det_out) *det_out = det;
  return rank;
}

}  // namespace

std::size_t QMatrix::rank() const {
  QMatrix a = *this;
  return eliminate(a, nullptr, nullptr);
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorCode::NonSquare, "inverse of a non-square matrix");
  QMatrix a = *this;
  QMatrix b = identity(rows_);
  if (eliminate(a, &b, nullptr) != rows_) {
    throw Error(ErrorCode::ValidationFailed, "matrix is singular");
  }
  return b;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product shape mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

Rational det(const QMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NonSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (m.rows() == 0) return 1;
  QMatrix a = m;
  Rational d;
  eliminate(a, nullptr, &d);
  return d;
}

}  // namespace diagcell
