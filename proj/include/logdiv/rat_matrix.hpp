#pragma once

#include <cstddef>
#include <vector>

#include "logdiv/errors.hpp"
#include "logdiv/rational.hpp"

namespace logdiv {

/// Dense matrix of exact rationals. Square-only operations check shape.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool is_zero() const {
    for (const Rational& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    a.check_same_shape(b);
    RatMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
    return r;
  }

  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    a.check_same_shape(b);
    RatMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
    return r;
  }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) raise(errc::size_mismatch, "matrix product shape");
    RatMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }

  friend RatMatrix operator*(const Rational& c, const RatMatrix& a) {
    RatMatrix r = a;
    for (Rational& x : r.e_) x *= c;
    return r;
  }

  RatMatrix pow(std::size_t k) const {
    require_square();
    RatMatrix r = identity(rows_);
    RatMatrix base = *this;
    while (k) {
      if (k & 1u) r = r * base;
      base = base * base;
      k >>= 1u;
    }
    return r;
  }

  Rational trace() const {
    require_square();
    Rational t(0);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  /// Exact rank by Gaussian elimination.
  std::size_t rank() const {
    RatMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && m.at(piv, c).is_zero()) ++piv;
      if (piv == rows_) continue;
      m.swap_rows(piv, r);
      Rational inv = Rational(1) / m.at(r, c);
      for (std::size_t j = c; j < cols_; ++j) m.at(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || m.at(i, c).is_zero()) continue;
        Rational f = m.at(i, c);
        for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
      }
      ++r;
    }
    return r;
  }

  /// Exact inverse by Gauss-Jordan; the caller guarantees invertibility.
  RatMatrix inverse() const {
    require_square();
    RatMatrix m = *this;
    RatMatrix inv = identity(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t piv = c;
      while (piv < rows_ && m.at(piv, c).is_zero()) ++piv;
      if (piv == rows_) raise(errc::internal_error, "inverting a singular matrix");
      m.swap_rows(piv, c);
      inv.swap_rows(piv, c);
      Rational f = Rational(1) / m.at(c, c);
      for (std::size_t j = 0; j < cols_; ++j) {
        m.at(c, j) *= f;
        inv.at(c, j) *= f;
      }
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == c || m.at(i, c).is_zero()) continue;
        Rational g = m.at(i, c);
        for (std::size_t j = 0; j < cols_; ++j) {
          m.at(i, j) -= g * m.at(c, j);
          inv.at(i, j) -= g * inv.at(c, j);
        }
      }
    }
    return inv;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  void require_square() const {
    if (!is_square()) raise(errc::not_square, "matrix is not square");
  }

 private:
  void check_same_shape(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) raise(errc::size_mismatch, "matrix shapes differ");
  }

  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

/// Reduced row echelon form together with the pivot columns.
struct Rref {
  RatMatrix m;
  std::vector<std::size_t> pivots;
};

inline Rref rref(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    Rational inv = Rational(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace logdiv
