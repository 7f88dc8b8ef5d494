#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pfq/error.hpp"
#include "pfq/ring.hpp"

namespace pfq {

// Dense row-major matrix. Indexing is 0-based; the usual 1-based notation is
// handled by IndexSet and the at1() accessor.
template <RingScalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const S& fill = S{})
      : rows_(rows), cols_(cols), zero_(zero_like(fill)),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

  static Matrix identity(int n, const S& like = S{}) {
    Matrix m(n, n, zero_like(like));
    for (int i = 0; i < n; ++i) m(i, i) = one_like(like);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  // A zero of the right kind (carries series order); used for empty products.
  const S& zero() const { return zero_; }

  S& operator()(int i, int j) { return a_[idx(i, j)]; }
  const S& operator()(int i, int j) const { return a_[idx(i, j)]; }
  const S& at1(int i, int j) const { return (*this)(i - 1, j - 1); }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // 0-based row and column selections.
  Matrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    Matrix m(static_cast<int>(rs.size()), static_cast<int>(cs.size()), zero_);
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j)
        m(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
    return m;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw DomainError("matrix shape mismatch in product");
    Matrix r(x.rows_, y.cols_, x.zero_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const S& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
      }
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  size_t idx(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
  }
  int rows_ = 0, cols_ = 0;
  S zero_{};
  std::vector<S> a_;
};

// Division-free Laplace expansion along rows with memo over column subsets;
// works over any ring. O(2^n n).
template <RingScalar S>
S det_laplace(const Matrix<S>& m) {
  const int n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (n > 24) throw GuardError("det_laplace guard: n > 24");
  S one = one_like(m.zero());
  if (n == 0) return one;
  // dp over subsets of columns used by the first popcount rows.
  std::vector<S> dp(size_t{1} << n, m.zero());
  std::vector<bool> seen(size_t{1} << n, false);
  dp[0] = one;
  seen[0] = true;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!seen[mask] || dp[mask].is_zero()) continue;
    int row = __builtin_popcount(mask);
    if (row == n) continue;
    int above = 0;  // columns to the right already used; gives the sign
    for (int c = n - 1; c >= 0; --c) {
      if (mask & (1u << c)) {
        ++above;
        continue;
      }
      const S& e = m(row, c);
      if (e.is_zero()) continue;
      // sign of placing column c after the used ones: (-1)^(# used columns > c)
      std::uint32_t nm = mask | (1u << c);
      S t = dp[mask] * e;
      if (above & 1) t = -t;
      dp[nm] = seen[nm] ? dp[nm] + t : t;
      seen[nm] = true;
    }
  }
  std::uint32_t full = (1u << n) - 1;
  return seen[full] ? dp[full] : m.zero();
}

// Gaussian elimination over a field.
inline Rational det_gauss(Matrix<Rational> m) {
  const int n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  Rational d(1);
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m(p, k).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      for (int j = k; j < n; ++j) std::swap(m(p, j), m(k, j));
      d = -d;
    }
    const Rational piv = m(k, k);
    d *= piv;
    Rational inv = inverse(piv);
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Rational f = m(i, k) * inv;
      for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

template <RingScalar S>
S det(const Matrix<S>& m) {
  if constexpr (is_field_v<S>)
    return det_gauss(m);
  else
    return det_laplace(m);
}

}  // namespace pfq
