#include "pfq/decomp.hpp"

namespace pfq {

namespace {

std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
  return v;
}

// a_{[base],k,l} with k,l outside [base] and the ordering taken literally.
Rational pf_base_kl(const RSkew& A, int base, int k, int l) {
  if (k == l || l <= base) return Rational(0);
  int lo = std::min(k, l), hi = std::max(k, l);
  Rational p = subpfaffian(A, IndexSet::range(1, base).with({lo, hi}));
  return k < l ? p : -p;
}

}  // namespace

RMatrix permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  RMatrix P(n, n);
  for (int i = 0; i < n; ++i) P(i, perm[static_cast<size_t>(i)]) = Rational(1);
  return P;
}

RMatrix permuted_rows(const RMatrix& A, const std::vector<int>& perm) {
  return A.submatrix(perm, iota_vec(A.cols()));
}

std::vector<int> pair_swap_permutation(int dim) {
  std::vector<int> p(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) p[static_cast<size_t>(i)] = (i % 2 == 0) ? i + 1 : i - 1;
  return p;
}

RMatrix block_j(int dim) {
  RMatrix J(dim, dim);
  for (int k = 0; k + 1 < dim; k += 2) {
    J(k, k + 1) = Rational(1);
    J(k + 1, k) = Rational(-1);
  }
  return J;
}

RMatrix block_t(const std::vector<Rational>& t) {
  const int dim = 2 * static_cast<int>(t.size());
  RMatrix T(dim, dim);
  for (size_t i = 0; i < t.size(); ++i) {
    int k = 2 * static_cast<int>(i);
    T(k, k + 1) = t[i];
    T(k + 1, k) = -t[i];
  }
  return T;
}

LUDecomposition lu_by_minors(const RMatrix& A, const std::vector<int>& perm) {
  const int n = A.rows();
  if (n != A.cols() || static_cast<int>(perm.size()) != n)
    throw DomainError("lu_by_minors needs a square matrix and a matching permutation");
  RMatrix PA = permuted_rows(A, perm);
  auto minor = [&](std::vector<int> rs, std::vector<int> cs) {
    return rs.empty() ? Rational(1) : det_gauss(PA.submatrix(rs, cs));
  };
  std::vector<Rational> lead(static_cast<size_t>(n) + 1);
  lead[0] = Rational(1);
  for (int i = 1; i <= n; ++i) {
    lead[static_cast<size_t>(i)] = minor(iota_vec(i), iota_vec(i));
    if (lead[static_cast<size_t>(i)].is_zero()) throw PivotError(i, "vanishing leading minor");
  }
  LUDecomposition lu{perm, RMatrix::identity(n), {}, RMatrix::identity(n)};
  for (int i = 1; i <= n; ++i)
    lu.D.push_back(lead[static_cast<size_t>(i)] / lead[static_cast<size_t>(i - 1)]);
  // 1-based i > j: rows [j-1] + {i}, columns [j]
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      auto rs = iota_vec(j - 1);
      rs.push_back(i - 1);
      lu.L(i - 1, j - 1) = minor(rs, iota_vec(j)) / lead[static_cast<size_t>(j)];
    }
  // 1-based i < j: rows [i], columns [i-1] + {j}
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto cs = iota_vec(i - 1);
      cs.push_back(j - 1);
      lu.U(i - 1, j - 1) = minor(iota_vec(i), cs) / lead[static_cast<size_t>(i)];
    }
  if (!lu_reconstructs(A, lu)) throw Error("lu_by_minors: reconstruction failed");
  return lu;
}

bool lu_reconstructs(const RMatrix& A, const LUDecomposition& lu) {
  const int n = A.rows();
  RMatrix D(n, n);
  for (int i = 0; i < n; ++i) D(i, i) = lu.D[static_cast<size_t>(i)];
  return permuted_rows(A, lu.perm) == lu.L * D * lu.U;
}

PfDecomposition pf_decompose_by_subpf(const RSkew& A) {
  const int dim = A.n();
  require_even(dim);
  if (dim > 20) throw GuardError("subpfaffian decomposition is gated to dimension <= 20");
  const int n = dim / 2;
  PfDecomposition d{{}, RMatrix(dim, dim)};
  std::vector<Rational> a(static_cast<size_t>(n) + 1);
  a[0] = Rational(1);
  for (int i = 1; i <= n; ++i) {
    a[static_cast<size_t>(i)] = subpfaffian(A, IndexSet::range(1, 2 * i));
    if (a[static_cast<size_t>(i)].is_zero()) throw PivotError(i, "vanishing leading subpfaffian");
    d.t.push_back(a[static_cast<size_t>(i)] / a[static_cast<size_t>(i - 1)]);
  }
  for (int i = 1; i <= n; ++i)
    for (int k = 2 * i - 1; k <= 2 * i; ++k)
      for (int l = 1; l <= dim; ++l)
        d.V(k - 1, l - 1) = pf_base_kl(A, 2 * i - 2, k, l) / a[static_cast<size_t>(i)];
  return d;
}

PfDecomposition pf_decompose_elimination(const RSkew& A) {
  const int dim = A.n();
  require_even(dim);
  const int n = dim / 2;
  RMatrix M = A.matrix();
  PfDecomposition d{{}, RMatrix(dim, dim)};
  for (int i = 1; i <= n; ++i) {
    const int k = 2 * i - 2;  // 0-based first row of block i
    const Rational p = M(k, k + 1);
    if (p.is_zero()) throw PivotError(i, "vanishing leading subpfaffian");
    d.t.push_back(p);
    const Rational pinv = inverse(p);
    d.V(k, k + 1) = Rational(1);
    d.V(k + 1, k) = Rational(-1);
    for (int l = k + 2; l < dim; ++l) {
      d.V(k, l) = M(k, l) * pinv;
      d.V(k + 1, l) = M(k + 1, l) * pinv;
    }
    for (int r = k + 2; r < dim; ++r)
      for (int c = r + 1; c < dim; ++c) {
        M(r, c) += (M(k + 1, r) * M(k, c) - M(k, r) * M(k + 1, c)) * pinv;
        M(c, r) = -M(r, c);
      }
  }
  return d;
}

RSkew reconstruct(const PfDecomposition& d) {
  return RSkew(d.V.transpose() * block_t(d.t) * d.V);
}

Rational pf_from_decomp(const PfDecomposition& d) {
  Rational p(1);
  for (const auto& t : d.t) p *= t;
  return p;
}

LUDecomposition lu_from_pf_decomp(const PfDecomposition& d) {
  const int dim = d.V.rows();
  auto perm = pair_swap_permutation(dim);
  RMatrix P = permutation_matrix(perm);
  RMatrix J = block_j(dim);
  RMatrix Jt = J.transpose();
  RMatrix Dm = P * Jt * block_t(d.t) * J;
  LUDecomposition lu{perm, P * d.V.transpose() * J * P, {}, Jt * d.V};
  for (int i = 0; i < dim; ++i) lu.D.push_back(Dm(i, i));
  return lu;
}

LUDecomposition lu_from_pf_decomp_entrywise(const PfDecomposition& d) {
  const int dim = d.V.rows();
  auto v = [&](int k, int l) { return d.V.at1(k, l); };
  LUDecomposition lu{pair_swap_permutation(dim), RMatrix(dim, dim), {}, RMatrix(dim, dim)};
  for (int i = 1; i <= dim; ++i) {
    lu.D.push_back(i % 2 ? -d.t[static_cast<size_t>((i + 1) / 2 - 1)] : d.t[static_cast<size_t>(i / 2 - 1)]);
    for (int j = 1; j <= dim; ++j) {
      lu.U(i - 1, j - 1) = i % 2 ? -v(i + 1, j) : v(i - 1, j);
      const int row = i % 2 ? i + 1 : i - 1;
      lu.L(i - 1, j - 1) = j % 2 ? v(j, row) : -v(j, row);
    }
  }
  return lu;
}

bool has_block_structure(const RMatrix& V) {
  const int dim = V.rows();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Rational want;
      if (j / 2 < i / 2)
        want = Rational(0);
      else if (j / 2 == i / 2)
        want = (i == j) ? Rational(0) : (i < j ? Rational(1) : Rational(-1));
      else
        continue;
      if (V(i, j) != want) return false;
    }
  return true;
}

}  // namespace pfq
