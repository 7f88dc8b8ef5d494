#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "pfq/matrix.hpp"

namespace pfq {

// Strictly increasing list of 1-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::vector<int> idx);  // NOLINT(google-explicit-constructor)
  IndexSet(std::initializer_list<int> idx) : IndexSet(std::vector<int>(idx)) {}

  // [lo, hi] as a set; empty when hi < lo.
  static IndexSet range(int lo, int hi);
  IndexSet with(std::initializer_list<int> extra) const;

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  const std::vector<int>& indices() const { return v_; }
  int operator[](int k) const { return v_[static_cast<size_t>(k)]; }
  std::string str() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> v_;
};

template <RingScalar S>
class SkewMatrix {
 public:
  SkewMatrix() = default;
  // Validates a_ij = -a_ji (hence zero diagonal); throws SkewViolation with
  // the offending 1-based (i,j).
  explicit SkewMatrix(Matrix<S> m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw DomainError("skew matrix must be square");
    for (int i = 0; i < n(); ++i)
      for (int j = i; j < n(); ++j)
        if (!(m_(i, j) + m_(j, i)).is_zero()) throw SkewViolation(i + 1, j + 1);
  }

  // Build from the upper-triangle entry function f(i,j), i<j, 1-based.
  template <class F>
  static SkewMatrix from_upper(int n, const S& zero, F&& f) {
    Matrix<S> m(n, n, zero);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        m(i - 1, j - 1) = f(i, j);
        m(j - 1, i - 1) = -m(i - 1, j - 1);
      }
    SkewMatrix s;
    s.m_ = std::move(m);
    return s;
  }

  int n() const { return m_.rows(); }
  const Matrix<S>& matrix() const { return m_; }
  const S& at1(int i, int j) const { return m_.at1(i, j); }
  const S& operator()(int i, int j) const { return m_(i, j); }
  const S& zero() const { return m_.zero(); }

  SkewMatrix restrict(const IndexSet& I) const {
    std::vector<int> idx;
    for (int i : I.indices()) {
      if (i < 1 || i > n()) throw DomainError("index " + std::to_string(i) + " out of range");
      idx.push_back(i - 1);
    }
    SkewMatrix s;
    s.m_ = m_.submatrix(idx, idx);
    return s;
  }

 private:
  Matrix<S> m_;
};

inline void require_even(int n) {
  if (n % 2 != 0) throw DomainError("Pfaffian of odd dimension " + std::to_string(n));
}

// Sum over perfect matchings with the permutation sign (the definition).
template <RingScalar S>
S pf_combinatorial(const SkewMatrix<S>& A) {
  const int n = A.n();
  require_even(n);
  if (n > 12) throw GuardError("pf_combinatorial guard: n > 12");
  S total = zero_like(A.zero());
  std::vector<int> seq;
  std::vector<bool> used(static_cast<size_t>(n), false);
  std::function<void(S)> rec = [&](S prod) {
    int i = 0;
    while (i < n && used[static_cast<size_t>(i)]) ++i;
    if (i == n) {
      int inv = 0;
      for (size_t x = 0; x < seq.size(); ++x)
        for (size_t y = x + 1; y < seq.size(); ++y)
          if (seq[x] > seq[y]) ++inv;
      total = (inv % 2) ? total - prod : total + prod;
      return;
    }
    used[static_cast<size_t>(i)] = true;
    for (int j = i + 1; j < n; ++j) {
      if (used[static_cast<size_t>(j)] || A(i, j).is_zero()) continue;
      used[static_cast<size_t>(j)] = true;
      seq.push_back(i);
      seq.push_back(j);
      rec(prod * A(i, j));
      seq.pop_back();
      seq.pop_back();
      used[static_cast<size_t>(j)] = false;
    }
    used[static_cast<size_t>(i)] = false;
  };
  rec(one_like(A.zero()));
  return total;
}

// First-row expansion with memo over remaining-index subsets. Division free.
template <RingScalar S>
S pf_expansion(const SkewMatrix<S>& A) {
  const int n = A.n();
  require_even(n);
  if (n > 26) throw GuardError("pf_expansion guard: n > 26");
  std::unordered_map<std::uint32_t, S> memo;
  std::function<S(std::uint32_t)> rec = [&](std::uint32_t mask) -> S {
    if (mask == 0) return one_like(A.zero());
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int i = __builtin_ctz(mask);
    std::uint32_t rest = mask & ~(1u << i);
    S s = zero_like(A.zero());
    int t = 0;
    for (int j = i + 1; j < n; ++j) {
      if (!(rest & (1u << j))) continue;
      if (!A(i, j).is_zero()) {
        S term = A(i, j) * rec(rest & ~(1u << j));
        s = (t % 2) ? s - term : s + term;
      }
      ++t;
    }
    memo.emplace(mask, s);
    return s;
  };
  return rec(n == 0 ? 0u : (n == 32 ? ~0u : ((1u << n) - 1)));
}

// 2x2 block Schur-complement elimination; swaps a row/column pair when the
// pivot vanishes (each swap flips the sign). Needs exact division.
template <RingScalar S>
S pf_elimination(const SkewMatrix<S>& A) {
  const int n = A.n();
  require_even(n);
  Matrix<S> M = A.matrix();
  S result = one_like(A.zero());
  auto swap_pair = [&](int x, int y) {
    for (int c = 0; c < n; ++c) std::swap(M(x, c), M(y, c));
    for (int r = 0; r < n; ++r) std::swap(M(r, x), M(r, y));
  };
  for (int k = 0; k < n; k += 2) {
    if (M(k, k + 1).is_zero()) {
      int j = k + 2;
      while (j < n && M(k, j).is_zero()) ++j;
      if (j == n) return zero_like(A.zero());
      swap_pair(k + 1, j);
      result = -result;
    }
    const S p = M(k, k + 1);
    result = result * p;
    const S pinv = inverse(p);
    for (int i = k + 2; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        S upd = (M(k + 1, i) * M(k, j) - M(k, i) * M(k + 1, j)) * pinv;
        M(i, j) = M(i, j) + upd;
        M(j, i) = -M(i, j);
      }
    }
  }
  return result;
}

// Default route: elimination over fields, expansion otherwise.
template <RingScalar S>
S pfaffian(const SkewMatrix<S>& A) {
  if constexpr (is_field_v<S>)
    return pf_elimination(A);
  else
    return pf_expansion(A);
}

// a_I = Pf(A_I); a_empty = 1.
template <RingScalar S>
S subpfaffian(const SkewMatrix<S>& A, const IndexSet& I) {
  if (I.size() % 2) throw DomainError("subpfaffian needs an even index set, got " + I.str());
  if (I.empty()) return one_like(A.zero());
  return pfaffian(A.restrict(I));
}

template <RingScalar S>
bool check_pf_desnanot_jacobi(const SkewMatrix<S>& A) {
  const int n = A.n();
  if (n < 4 || n % 2) throw DomainError("Pfaffian Desnanot-Jacobi needs even n >= 4");
  IndexSet base = IndexSet::range(1, n - 4);
  auto a = [&](std::initializer_list<int> extra) { return subpfaffian(A, base.with(extra)); };
  S lhs = subpfaffian(A, base) * subpfaffian(A, IndexSet::range(1, n));
  S rhs = a({n - 3, n - 2}) * a({n - 1, n}) - a({n - 3, n - 1}) * a({n - 2, n}) +
          a({n - 3, n}) * a({n - 2, n - 1});
  return lhs == rhs;
}

template <RingScalar S>
bool check_det_desnanot_jacobi(const Matrix<S>& M) {
  const int n = M.rows();
  if (n < 2 || n != M.cols()) throw DomainError("Desnanot-Jacobi needs a square matrix, n >= 2");
  std::vector<int> base;
  for (int i = 0; i < n - 2; ++i) base.push_back(i);
  auto minor = [&](int r, int c) {
    auto rs = base, cs = base;
    rs.push_back(r);
    cs.push_back(c);
    return det(M.submatrix(rs, cs));
  };
  S lhs = det(M.submatrix(base, base)) * det(M);
  S rhs = minor(n - 2, n - 2) * minor(n - 1, n - 1) - minor(n - 2, n - 1) * minor(n - 1, n - 2);
  return lhs == rhs;
}

template <RingScalar S>
struct MsfSides {
  S lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

// sum_{|I|=n} Pf(B_I) det(T_I) against Pf(T B tT).
template <RingScalar S>
MsfSides<S> minor_summation_sides(const Matrix<S>& T, const SkewMatrix<S>& B) {
  const int n = T.rows(), N = T.cols();
  if (n % 2) throw DomainError("minor summation needs even n");
  if (n > N || B.n() != N) throw DomainError("minor summation shape mismatch");
  if (n > 8 || N > 10) throw GuardError("minor summation guard: n <= 8, N <= 10");
  std::vector<int> rows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)] = i;
  S lhs = zero_like(B.zero());
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == n) {
      std::vector<int> one_based;
      for (int c : pick) one_based.push_back(c + 1);
      S p = subpfaffian(B, IndexSet(one_based));
      if (!p.is_zero()) lhs = lhs + p * det(T.submatrix(rows, pick));
      return;
    }
    for (int c = start; c < N; ++c) {
      pick.push_back(c);
      rec(c + 1);
      pick.pop_back();
    }
  };
  rec(0);
  Matrix<S> C = T * B.matrix() * T.transpose();
  S rhs = pfaffian(SkewMatrix<S>(std::move(C)));
  return {lhs, rhs};
}

template <RingScalar S>
bool minor_summation_check(const Matrix<S>& T, const SkewMatrix<S>& B) {
  return minor_summation_sides(T, B).equal();
}

// The tridiagonal skew matrix with b_{i,i+1} = alpha(i), 1-based.
template <RingScalar S>
SkewMatrix<S> tridiagonal_matrix(int n, const std::function<S(int)>& alpha, const S& zero) {
  return SkewMatrix<S>::from_upper(n, zero, [&](int i, int j) { return j == i + 1 ? alpha(i) : zero; });
}

// Closed form for subpfaffians of the tridiagonal matrix above.
template <RingScalar S>
S tridiagonal_subpf(const std::function<S(int)>& alpha, const IndexSet& I, const S& like) {
  if (I.size() % 2) throw DomainError("tridiagonal_subpf needs an even index set");
  S r = one_like(like);
  for (int k = 0; k < I.size(); k += 2) {
    if (I[k + 1] != I[k] + 1) return zero_like(like);
    r = r * alpha(I[k]);
  }
  return r;
}

}  // namespace pfq
