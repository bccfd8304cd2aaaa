#ifndef LEDC_MATRIX_HPP
#define LEDC_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ledc/error.hpp"
#include "ledc/field.hpp"

namespace ledc {

/// Dense row-major matrix over a prime field. Codewords are row vectors: c = x * G.
class MatrixGF {
 public:
  static constexpr std::size_t kMaxDim = std::size_t{1} << 16;

  MatrixGF(const PrimeField& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols) {
    if (rows > kMaxDim || cols > kMaxDim)
      throw Error(ErrorKind::TooLarge, "matrix dimensions exceed 2^16");
    data_.assign(rows * cols, Felt{0});
  }

  /// Entries are reduced modulo q.
  static MatrixGF from_rows(const PrimeField& field, const std::vector<std::vector<long long>>& rows,
                            std::size_t cols_if_empty = 0) {
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    MatrixGF m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged row " + std::to_string(i));
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.elem(rows[i][j]);
    }
    return m;
  }

  static MatrixGF identity(const PrimeField& field, std::size_t n) {
    MatrixGF m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Felt& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Felt operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Felt> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Felt> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  std::vector<Felt> column(std::size_t c) const {
    std::vector<Felt> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  std::vector<std::vector<long long>> to_rows() const {
    std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).value;
    return out;
  }

  MatrixGF transpose() const {
    MatrixGF t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Felt a) { return a.is_zero(); });
  }

  friend bool operator==(const MatrixGF& a, const MatrixGF& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Felt> data_;
};

inline std::ostream& operator<<(std::ostream& os, const MatrixGF& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

inline MatrixGF operator*(const MatrixGF& a, const MatrixGF& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field()))
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  const PrimeField& f = a.field();
  MatrixGF out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      Felt s = a(i, l);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(s, b(l, j)));
    }
  return out;
}

/// Row vector times matrix.
inline std::vector<Felt> vec_mul(std::span<const Felt> x, const MatrixGF& m) {
  if (x.size() != m.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "vector length " + std::to_string(x.size()) + " != rows " + std::to_string(m.rows()));
  const PrimeField& f = m.field();
  std::vector<Felt> out(m.cols(), Felt{0});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i].is_zero()) continue;
    auto row = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(x[i], row[j]));
  }
  return out;
}

/// Matrix times column vector.
inline std::vector<Felt> mul_vec(const MatrixGF& m, std::span<const Felt> v) {
  if (v.size() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "vector length != cols");
  const PrimeField& f = m.field();
  std::vector<Felt> out(m.rows(), Felt{0});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Felt acc{0};
    auto row = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(row[j], v[j]));
    out[i] = acc;
  }
  return out;
}

struct RrefResult {
  MatrixGF reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form. Pivot is the first nonzero entry at or below the
/// current row, scanning columns left to right.
inline RrefResult rref(MatrixGF m) {
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pr, j));
    Felt scale = f.inv(m(pr, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(pr, j) = f.mul(m(pr, j), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pr) continue;
      Felt factor = m(r, c);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(pr, j)));
    }
    pivots.push_back(c);
    ++pr;
  }
  return RrefResult{std::move(m), pr, std::move(pivots)};
}

/// Rank by forward elimination only (no back substitution).
inline std::size_t rank(MatrixGF m) {
  const PrimeField& f = m.field();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(sel, j), m(pr, j));
    Felt scale = f.inv(m(pr, c));
    for (std::size_t r = pr + 1; r < m.rows(); ++r) {
      Felt factor = f.mul(m(r, c), scale);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(pr, j)));
    }
    ++pr;
  }
  return pr;
}

inline Felt det(MatrixGF m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "determinant of non-square matrix");
  const PrimeField& f = m.field();
  const std::size_t n = m.rows();
  Felt acc = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c).is_zero()) ++sel;
    if (sel == n) return f.zero();
    if (sel != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(sel, j), m(c, j));
      acc = f.neg(acc);
    }
    acc = f.mul(acc, m(c, c));
    Felt scale = f.inv(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      Felt factor = f.mul(m(r, c), scale);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < n; ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
    }
  }
  return acc;
}

/// Basis of the right kernel {v : m v = 0}. One vector per free column, in
/// increasing column order, with that free variable set to 1.
inline std::vector<std::vector<Felt>> nullspace(const MatrixGF& m) {
  const PrimeField& f = m.field();
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Felt>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Felt> v(m.cols(), Felt{0});
    v[free] = f.one();
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivot_cols[i]] = f.neg(red.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves x * a = b for the row vector x (length a.rows()).
inline std::vector<Felt> solve(const MatrixGF& a, std::span<const Felt> b) {
  if (b.size() != a.cols())
    throw Error(ErrorKind::DimensionMismatch, "right-hand side length != cols");
  const PrimeField& f = a.field();
  // x a = b  <=>  a^T x^T = b^T; eliminate on the augmented transpose.
  MatrixGF aug(f, a.cols(), a.rows() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) aug(j, i) = a(i, j);
  for (std::size_t j = 0; j < a.cols(); ++j) aug(j, a.rows()) = b[j];
  RrefResult red = rref(std::move(aug));
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == a.rows())
    throw Error(ErrorKind::Inconsistent, "system has no solution");
  if (red.rank < a.rows())
    throw Error(ErrorKind::Underdetermined,
                "rank " + std::to_string(red.rank) + " < unknowns " + std::to_string(a.rows()));
  std::vector<Felt> x(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) x[i] = red.reduced(i, a.rows());
  return x;
}

/// k x n matrix with entry (i, j) = points[j]^i.
inline MatrixGF vandermonde(const PrimeField& f, std::span<const Felt> points, std::size_t k) {
  if (k > points.size())
    throw Error(ErrorKind::InvalidArgument, "Vandermonde needs k <= number of points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!f.contains(points[i])) throw Error(ErrorKind::InvalidArgument, "point not reduced");
    for (std::size_t j = 0; j < i; ++j)
      if (points[i] == points[j])
        throw Error(ErrorKind::DuplicatePoint, "evaluation point " + std::to_string(points[i].value) + " repeated");
  }
  MatrixGF m(f, k, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    Felt p = f.one();
    for (std::size_t i = 0; i < k; ++i) {
      m(i, j) = p;
      p = f.mul(p, points[j]);
    }
  }
  return m;
}

inline MatrixGF submatrix(const MatrixGF& m, std::span<const std::size_t> row_idx,
                          std::span<const std::size_t> col_idx) {
  MatrixGF out(m.field(), row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    if (row_idx[i] >= m.rows()) throw Error(ErrorKind::IndexOutOfRange, "row index " + std::to_string(row_idx[i]));
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      if (col_idx[j] >= m.cols())
        throw Error(ErrorKind::IndexOutOfRange, "column index " + std::to_string(col_idx[j]));
      out(i, j) = m(row_idx[i], col_idx[j]);
    }
  }
  return out;
}

/// Blocks of a two-group generator matrix, laid out as
///   [ U  0 ]   private data of group 1
///   [ A  B ]   shared data
///   [ 0  V ]   private data of group 2
struct TwoGroupBlocks {
  MatrixGF U, A, B, V;
};

inline MatrixGF block_assemble(const TwoGroupBlocks& blk) {
  const auto& [U, A, B, V] = blk;
  if (U.cols() != A.cols() || B.cols() != V.cols() || A.rows() != B.rows())
    throw Error(ErrorKind::DimensionMismatch, "block widths/heights disagree");
  const std::size_t n1 = U.cols(), n2 = V.cols();
  MatrixGF g(U.field(), U.rows() + A.rows() + V.rows(), n1 + n2);
  std::size_t r = 0;
  for (std::size_t i = 0; i < U.rows(); ++i, ++r)
    for (std::size_t j = 0; j < n1; ++j) g(r, j) = U(i, j);
  for (std::size_t i = 0; i < A.rows(); ++i, ++r) {
    for (std::size_t j = 0; j < n1; ++j) g(r, j) = A(i, j);
    for (std::size_t j = 0; j < n2; ++j) g(r, n1 + j) = B(i, j);
  }
  for (std::size_t i = 0; i < V.rows(); ++i, ++r)
    for (std::size_t j = 0; j < n2; ++j) g(r, n1 + j) = V(i, j);
  return g;
}

}  // namespace ledc

#endif  // LEDC_MATRIX_HPP
