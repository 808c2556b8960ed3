#pragma once

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "logdiv/poly.hpp"
#include "logdiv/rat_matrix.hpp"

namespace logdiv {

/// Matrix of polynomials over one shared context.
class PolyMatrix {
 public:
  PolyMatrix(VarContext ctx, std::size_t rows, std::size_t cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols), e_(rows * cols, Poly::zero(ctx_)) {
    if (rows == 0 || cols == 0) raise(errc::dimension_mismatch, "empty matrix");
  }

  const VarContext& context() const { return ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Poly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  PolyMatrix submatrix(const std::vector<std::size_t>& row_idx,
                       const std::vector<std::size_t>& col_idx) const {
    PolyMatrix s(ctx_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) s.at(i, j) = at(row_idx[i], col_idx[j]);
    return s;
  }

  RatMatrix evaluate(const std::vector<Rational>& p) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).evaluate(p);
    return m;
  }

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  VarContext ctx_;
  std::size_t rows_, cols_;
  std::vector<Poly> e_;
};

/// Exact determinant by Laplace expansion along rows, memoized over column
/// subsets. Division-free; matrix sizes in scope stay small.
inline Poly det_poly_matrix(const PolyMatrix& m) {
  if (!m.is_square()) raise(errc::not_square, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > 16) raise(errc::internal_error, "determinant size out of supported range");

  std::unordered_map<std::uint32_t, Poly> memo;
  // det over rows [row..n) and the columns in `mask` (popcount == n - row).
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t mask) -> Poly {
    if (row == n) return Poly::constant(m.context(), Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Poly acc = Poly::zero(m.context());
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (((mask >> c) & 1u) == 0) continue;
      const Poly& entry = m.at(row, c);
      if (!entry.is_zero()) {
        Poly sub = self(self, row + 1, mask & ~(std::uint32_t{1} << c));
        if (!sub.is_zero()) {
          Poly contrib = entry * sub;
          acc = (sign > 0) ? acc + contrib : acc - contrib;
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  std::uint32_t full = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  return rec(rec, 0, full);
}

namespace poly_matrix_detail {
inline void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}
}  // namespace poly_matrix_detail

/// All order-k minors, enumerated over row and column subsets in
/// lexicographic index order.
inline std::vector<Poly> order_minors(const PolyMatrix& m, std::size_t k) {
  if (k == 0 || k > m.rows() || k > m.cols())
    raise(errc::index_out_of_range, "minor order " + std::to_string(k));
  std::vector<std::vector<std::size_t>> rowsets, colsets;
  poly_matrix_detail::subsets_of_size(m.rows(), k, rowsets);
  poly_matrix_detail::subsets_of_size(m.cols(), k, colsets);
  std::vector<Poly> minors;
  minors.reserve(rowsets.size() * colsets.size());
  for (const auto& rs : rowsets)
    for (const auto& cs : colsets) minors.push_back(det_poly_matrix(m.submatrix(rs, cs)));
  return minors;
}

}  // namespace logdiv
