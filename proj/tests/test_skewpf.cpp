#include <gtest/gtest.h>

#include "pfq/skewpf.hpp"
#include "support.hpp"

using namespace pfq;

namespace {

RSkew skew4(const Rational& a12, const Rational& a13, const Rational& a14, const Rational& a23,
            const Rational& a24, const Rational& a34) {
  return RSkew::from_upper(4, Rational(0), [&](int i, int j) {
    if (i == 1) return j == 2 ? a12 : j == 3 ? a13 : a14;
    if (i == 2) return j == 3 ? a23 : a24;
    return a34;
  });
}

// All three routes, asserting they agree.
Rational pf3(const RSkew& A) {
  Rational c = pf_combinatorial(A);
  EXPECT_EQ(pf_expansion(A), c);
  EXPECT_EQ(pf_elimination(A), c);
  return c;
}

}  // namespace

TEST(SkewMatrix, RejectsNonSkewWithCoordinates) {
  RMatrix m(3, 3, Rational(0));
  m(0, 2) = Rational(1);
  m(2, 0) = Rational(1);
  try {
    RSkew s(m);
    FAIL() << "accepted a non-skew matrix";
  } catch (const SkewViolation& e) {
    EXPECT_EQ(e.row, 1);
    EXPECT_EQ(e.col, 3);
  }
  RMatrix d(2, 2, Rational(0));
  d(1, 1) = Rational(2);
  EXPECT_THROW(RSkew{d}, SkewViolation);
}

TEST(Pfaffian, SmallCases) {
  EXPECT_EQ(pf3(RSkew(RMatrix(0, 0, Rational(0)))), Rational(1));
  const Rational x = rat(7, 3);
  EXPECT_EQ(pf3(RSkew::from_upper(2, Rational(0), [&](int, int) { return x; })), x);
  const Rational a12 = 2, a13 = 3, a14 = 5, a23 = 7, a24 = 11, a34 = 13;
  EXPECT_EQ(pf3(skew4(a12, a13, a14, a23, a24, a34)), a12 * a34 - a13 * a24 + a14 * a23);
}

TEST(Pfaffian, OddDimensionRejected) {
  RSkew A(RMatrix(3, 3, Rational(0)));
  EXPECT_THROW(pf_combinatorial(A), DomainError);
  EXPECT_THROW(pf_expansion(A), DomainError);
  EXPECT_THROW(pf_elimination(A), DomainError);
}

TEST(Pfaffian, CombinatorialGuard) {
  EXPECT_THROW(pf_combinatorial(RSkew(RMatrix(14, 14, Rational(0)))), GuardError);
}

TEST(Pfaffian, BlockJIsOne) {
  for (int n = 1; n <= 5; ++n) {
    auto J = RSkew::from_upper(2 * n, Rational(0),
                               [](int i, int j) { return (i % 2 == 1 && j == i + 1) ? Rational(1) : Rational(0); });
    EXPECT_EQ(pf_expansion(J), Rational(1));
    EXPECT_EQ(pf_elimination(J), Rational(1));
  }
}

TEST(Pfaffian, ZeroPivotNeedsSwap) {
  // a12 = 0 forces the elimination route to swap.
  const Rational a13 = 3, a14 = 5, a23 = 7, a24 = 11, a34 = 13;
  EXPECT_EQ(pf3(skew4(Rational(0), a13, a14, a23, a24, a34)), -a13 * a24 + a14 * a23);
}

TEST(Pfaffian, SingularGivesZero) {
  // Rank 2: a_ij = u_i v_j - u_j v_i.
  std::vector<Rational> u{1, 2, 3, 4, 5, 6}, v{2, -1, 4, 0, 3, 1};
  auto A = RSkew::from_upper(6, Rational(0), [&](int i, int j) {
    return u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1];
  });
  EXPECT_EQ(pf3(A), Rational(0));
}

TEST(Pfaffian, SwappingPairedIndicesNegates) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    RSkew A = test::random_skew(rng, 4);
    RMatrix P(4, 4, Rational(0));
    std::vector<int> perm{1, 0, 2, 3};
    for (int i = 0; i < 4; ++i) P(i, perm[i]) = 1;
    RSkew B(P * A.matrix() * P.transpose());
    EXPECT_EQ(pf_elimination(B), -pf_elimination(A));
  }
}

TEST(PfaffianProperties, ThreeRoutesAgree) {
  Rng rng(100);
  for (int n : {2, 4, 6, 8})
    for (int t = 0; t < 100; ++t) pf3(test::random_skew(rng, n));
}

TEST(PfaffianProperties, SquareIsDeterminant) {
  Rng rng(101);
  for (int n : {2, 4, 6})
    for (int t = 0; t < 50; ++t) {
      RSkew A = test::random_skew(rng, n);
      Rational p = pf_elimination(A);
      EXPECT_EQ(p * p, det_gauss(A.matrix()));
      EXPECT_EQ(det_laplace(A.matrix()), det_gauss(A.matrix()));
    }
}

TEST(PfaffianProperties, CongruenceScalesByDet) {
  Rng rng(102);
  for (int n : {2, 4})
    for (int t = 0; t < 50; ++t) {
      RSkew A = test::random_skew(rng, n);
      RMatrix B = test::random_matrix(rng, n, n);
      RSkew C(B.transpose() * A.matrix() * B);
      EXPECT_EQ(pf_elimination(C), det(B) * pf_elimination(A));
    }
}

TEST(Subpfaffian, Basics) {
  Rng rng(4);
  RSkew A = test::random_skew(rng, 6);
  EXPECT_EQ(subpfaffian(A, IndexSet{}), Rational(1));
  EXPECT_EQ(subpfaffian(A, IndexSet{2, 5}), A.at1(2, 5));
  EXPECT_EQ(subpfaffian(A, IndexSet::range(1, 6)), pf_combinatorial(A));
  EXPECT_THROW(subpfaffian(A, IndexSet{1, 2, 3}), DomainError);
  EXPECT_THROW(IndexSet({3, 2}), DomainError);
  EXPECT_THROW(subpfaffian(A, IndexSet{1, 7}), DomainError);
}

TEST(DesnanotJacobi, Pfaffian) {
  Rng rng(5);
  for (int n : {4, 6, 8})
    for (int t = 0; t < 50; ++t) EXPECT_TRUE(check_pf_desnanot_jacobi(test::random_skew(rng, n)));
  EXPECT_TRUE(check_pf_desnanot_jacobi(RSkew(RMatrix(4, 4, Rational(0)))));
  EXPECT_THROW(check_pf_desnanot_jacobi(test::random_skew(rng, 2)), DomainError);
}

TEST(DesnanotJacobi, Determinant) {
  Rng rng(6);
  for (int n : {2, 3, 4, 5})
    for (int t = 0; t < 50; ++t) EXPECT_TRUE(check_det_desnanot_jacobi(test::random_matrix(rng, n, n)));
  EXPECT_TRUE(check_det_desnanot_jacobi(RMatrix::identity(3)));
}

TEST(MinorSummation, SingleSubset) {
  Rng rng(7);
  RMatrix T = test::random_matrix(rng, 4, 4);
  RSkew B = test::random_skew(rng, 4);
  auto s = minor_summation_sides(T, B);
  EXPECT_EQ(s.lhs, pf_elimination(B) * det(T));
  EXPECT_TRUE(s.equal());
}

TEST(MinorSummation, RandomInstances) {
  Rng rng(8);
  for (auto [n, N] : std::vector<std::pair<int, int>>{{2, 4}, {2, 6}, {4, 6}, {4, 8}})
    for (int t = 0; t < 50; ++t)
      EXPECT_TRUE(minor_summation_check(test::random_matrix(rng, n, N), test::random_skew(rng, N)))
          << n << "x" << N;
}

TEST(MinorSummation, Guards) {
  Rng rng(9);
  EXPECT_THROW(minor_summation_check(test::random_matrix(rng, 3, 4), test::random_skew(rng, 4)),
               DomainError);
  EXPECT_THROW(minor_summation_check(test::random_matrix(rng, 2, 12), test::random_skew(rng, 12)),
               GuardError);
}

TEST(Tridiagonal, ClosedFormExamples) {
  std::function<Rational(int)> alpha = [](int i) { return Rational(i + 1); };
  EXPECT_EQ(tridiagonal_subpf(alpha, IndexSet{1, 2, 3, 4}, Rational(0)), alpha(1) * alpha(3));
  EXPECT_EQ(tridiagonal_subpf(alpha, IndexSet{1, 3, 4, 5}, Rational(0)), Rational(0));
}

TEST(Tridiagonal, MatchesEveryEvenSubset) {
  std::function<Rational(int)> alpha = [](int i) { return rat(2 * i + 1, i + 3); };
  const int N = 6;
  RSkew B = tridiagonal_matrix<Rational>(N, alpha, Rational(0));
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    std::vector<int> idx;
    for (int i = 0; i < N; ++i)
      if (mask & (1u << i)) idx.push_back(i + 1);
    IndexSet I(idx);
    EXPECT_EQ(subpfaffian(B, I), tridiagonal_subpf(alpha, I, Rational(0))) << I.str();
  }
}

TEST(Tridiagonal, MinorSummationWithTridiagonalB) {
  Rng rng(10);
  std::function<Rational(int)> alpha = [&](int i) { return rat(i, 7) + 1; };
  RSkew B = tridiagonal_matrix<Rational>(6, alpha, Rational(0));
  for (int t = 0; t < 10; ++t) {
    RMatrix T = test::random_matrix(rng, 4, 6);
    Rational closed(0);
    // Sum over even subsets using the closed form.
    for (unsigned mask = 0; mask < 64u; ++mask) {
      if (__builtin_popcount(mask) != 4) continue;
      std::vector<int> idx, cols;
      for (int i = 0; i < 6; ++i)
        if (mask & (1u << i)) {
          idx.push_back(i + 1);
          cols.push_back(i);
        }
      closed += tridiagonal_subpf(alpha, IndexSet(idx), Rational(0)) *
                det(T.submatrix({0, 1, 2, 3}, cols));
    }
    auto s = minor_summation_sides(T, B);
    EXPECT_EQ(s.lhs, closed);
    EXPECT_TRUE(s.equal());
  }
}

TEST(SeriesPfaffian, ExpansionOverRing) {
  // Pf over truncated series agrees with the rational route after evaluation
  // of a polynomial-entry matrix.
  const int K = 12;
  auto entry = [&](int i, int j) {
    return QSeries::monomial(Rational(i + j), i, K) + QSeries::constant(Rational(j - i), K);
  };
  auto A = SkewMatrix<QSeries>::from_upper(4, QSeries::zero(K), entry);
  QSeries p = pf_expansion(A);
  const Rational q0 = rat(1, 2);
  auto eval = [&](const QSeries& f) {
    Rational v(0);
    for (int t = K; t >= 0; --t) v = v * q0 + f[t];
    return v;
  };
  auto Ar = RSkew::from_upper(4, Rational(0), [&](int i, int j) { return eval(entry(i, j)); });
  EXPECT_EQ(eval(p), pf_elimination(Ar));
}
