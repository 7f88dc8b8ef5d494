#pragma once

#include <vector>

#include "pfq/skewpf.hpp"

namespace pfq {

using RMatrix = Matrix<Rational>;
using RSkew = SkewMatrix<Rational>;

// P as a row permutation: row i of P*A is row perm[i] of A (0-based).
struct LUDecomposition {
  std::vector<int> perm;
  RMatrix L;
  std::vector<Rational> D;
  RMatrix U;
};

// A = tV T V with T = diag(t_i J2) and V block upper unitriangular.
struct PfDecomposition {
  std::vector<Rational> t;  // t_1..t_n
  RMatrix V;                // 2n x 2n
  int blocks() const { return static_cast<int>(t.size()); }
};

RMatrix permutation_matrix(const std::vector<int>& perm);
RMatrix permuted_rows(const RMatrix& A, const std::vector<int>& perm);
// (12)(34)... on 2n points.
std::vector<int> pair_swap_permutation(int dim);
RMatrix block_j(int dim);  // direct sum of J2
RMatrix block_t(const std::vector<Rational>& t);

// d_i, l^i_j, u^i_j as quotients of minors of P*A.
LUDecomposition lu_by_minors(const RMatrix& A, const std::vector<int>& perm);

// Reference route from subpfaffian quotients; gated to 2n <= 20.
PfDecomposition pf_decompose_by_subpf(const RSkew& A);
// Default route: 2x2 block elimination without pivoting.
PfDecomposition pf_decompose_elimination(const RSkew& A);

RSkew reconstruct(const PfDecomposition& d);
Rational pf_from_decomp(const PfDecomposition& d);

// Matrix products: P = (12)(34)..., U = tJ V, D = P tJ T J, L = P tV J P.
LUDecomposition lu_from_pf_decomp(const PfDecomposition& d);
// The same from the parity formulas for u^i_j, d_i and l^i_j.
LUDecomposition lu_from_pf_decomp_entrywise(const PfDecomposition& d);

// P*A == L*D*U.
bool lu_reconstructs(const RMatrix& A, const LUDecomposition& lu);

// Diagonal J2 blocks, zero below them.
bool has_block_structure(const RMatrix& V);

}  // namespace pfq
