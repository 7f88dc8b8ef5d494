#include <gtest/gtest.h>

#include "pfq/qkit.hpp"
#include "pfq/sequences.hpp"
#include "support.hpp"

using namespace pfq;

namespace {

std::vector<Rational> first(const SequenceKind& s, int count) {
  std::vector<Rational> v;
  for (int n = 0; n < count; ++n) v.push_back(moment(s, n));
  return v;
}

std::vector<Rational> ints(std::initializer_list<long> xs) {
  return std::vector<Rational>(xs.begin(), xs.end());
}

}  // namespace

TEST(Moments, IntegerSequences) {
  EXPECT_EQ(first(SequenceKind::plain(SeqKind::Catalan), 5), ints({1, 1, 2, 5, 14}));
  EXPECT_EQ(first(SequenceKind::plain(SeqKind::Motzkin), 4), ints({1, 1, 2, 4}));
  EXPECT_EQ(first(SequenceKind::plain(SeqKind::CentralDelannoy), 3), ints({1, 3, 13}));
  EXPECT_EQ(first(SequenceKind::plain(SeqKind::Schroeder), 3), ints({1, 2, 6}));
  EXPECT_EQ(first(SequenceKind::plain(SeqKind::CentralBinomial), 4), ints({1, 2, 6, 20}));
  EXPECT_EQ(moment(SequenceKind::plain(SeqKind::Hermite), 1), Rational(3));
  EXPECT_EQ(moment(SequenceKind::plain(SeqKind::ThreeHalvesCatalan), 1), Rational(1));
}

TEST(Moments, ParametricSequences) {
  const Rational a = rat(3, 4), b = rat(-2, 5), q = rat(1, 3), alpha = rat(5, 2);
  EXPECT_EQ(moment(SequenceKind::narayana(a), 2), a + a * a);
  EXPECT_EQ(moment(SequenceKind::narayana(a), 0), Rational(1));
  EXPECT_EQ(moment(SequenceKind::al_salam_carlitz(a, q), 1), 1 + a);
  EXPECT_EQ(moment(SequenceKind::al_salam_carlitz(a, q), -1), Rational(0));
  EXPECT_EQ(moment(SequenceKind::little_q_jacobi(a, b, q), 0), Rational(1));
  EXPECT_EQ(moment(SequenceKind::laguerre(alpha), 2), (alpha + 1) * (alpha + 2));
}

TEST(Moments, UndefinedIndices) {
  EXPECT_THROW(moment(SequenceKind::plain(SeqKind::Catalan), -1), DomainError);
  EXPECT_THROW(moment(SequenceKind::plain(SeqKind::Motzkin), -1), DomainError);
  EXPECT_THROW(moment(SequenceKind::narayana(Rational(2)), -1), DomainError);
  EXPECT_THROW(moment(SequenceKind::al_salam_carlitz(Rational(2), rat(1, 2)), -2), DomainError);
}

TEST(Moments, LittleQJacobiNegativeIndex) {
  const Rational a = rat(3, 4), b = rat(-2, 5), q = rat(1, 3);
  EXPECT_EQ(moment(SequenceKind::little_q_jacobi(a, b, q), -1),
            qpoch(a * q, q, -1) / qpoch(a * b * q * q, q, -1));
}

TEST(Moments, NamesRoundTrip) {
  for (const auto& name : kind_names()) {
    auto k = kind_from_name(name);
    ASSERT_TRUE(k.has_value()) << name;
    EXPECT_EQ(kind_name(*k), name);
  }
  EXPECT_FALSE(kind_from_name("fibonacci").has_value());
}

TEST(MomentProperties, CatalanConvolution) {
  auto C = SequenceKind::plain(SeqKind::Catalan);
  for (int n = 0; n <= 8; ++n) {
    Rational s(0);
    for (int k = 0; k <= n; ++k) s += moment(C, k) * moment(C, n - k);
    EXPECT_EQ(moment(C, n + 1), s);
  }
}

TEST(MomentProperties, NarayanaSpecializations) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(moment(SequenceKind::narayana(Rational(1)), n),
              moment(SequenceKind::plain(SeqKind::Catalan), n));
    EXPECT_EQ(moment(SequenceKind::narayana(Rational(2)), n),
              moment(SequenceKind::plain(SeqKind::Schroeder), n));
  }
}

TEST(MomentProperties, MotzkinRecurrence) {
  // M_{n+1} = M_n + sum_{k=0}^{n-1} M_k M_{n-1-k}
  auto M = SequenceKind::plain(SeqKind::Motzkin);
  for (int n = 1; n <= 8; ++n) {
    Rational s = moment(M, n);
    for (int k = 0; k <= n - 1; ++k) s += moment(M, k) * moment(M, n - 1 - k);
    EXPECT_EQ(moment(M, n + 1), s);
  }
}

TEST(MomentProperties, AlSalamCarlitzAtOne) {
  for (int n = 0; n <= 8; ++n)
    EXPECT_EQ(moment(SequenceKind::al_salam_carlitz(Rational(1), Rational(1)), n),
              pow(Rational(2), n));
}

TEST(MomentProperties, LittleQJacobiDefinition) {
  Rng rng(17);
  for (int t = 0; t < 30; ++t) {
    const Rational a = test::generic_rational(rng), b = test::generic_rational(rng),
                   q = test::generic_rational(rng);
    const int n = static_cast<int>(rng.uniform(0, 6));
    try {
      EXPECT_EQ(moment(SequenceKind::little_q_jacobi(a, b, q), n) * qpoch(a * b * q * q, q, n),
                qpoch(a * q, q, n));
    } catch (const PoleError&) {
    }
  }
}

TEST(MomentMatrix, Examples) {
  auto C = moment_matrix(SequenceKind::plain(SeqKind::Catalan), 2, 0, OffsetRule::IPlusJPlusRMinus2,
                         WeightRule::JMinusI);
  EXPECT_EQ(C.at1(1, 2), Rational(1));
  EXPECT_EQ(pf_elimination(C), Rational(1));
  auto M = moment_matrix(SequenceKind::plain(SeqKind::Motzkin), 2, 0, OffsetRule::IPlusJMinus3,
                         WeightRule::JMinusI);
  EXPECT_EQ(M.at1(1, 2), Rational(1));
  const Rational a = rat(2, 7), b = rat(3, 5), q = rat(-1, 4);
  auto L = moment_matrix(SequenceKind::little_q_jacobi(a, b, q), 2, 0,
                         OffsetRule::IPlusJPlusRMinus2, WeightRule::QPowerDiff);
  EXPECT_EQ(L.at1(1, 2), (1 - q) * (1 - a * q) / (1 - a * b * q * q));
}

TEST(MomentMatrix, SkewAndErrors) {
  auto S = moment_matrix(SequenceKind::plain(SeqKind::Schroeder), 6, 1, OffsetRule::IPlusJMinus2,
                         WeightRule::JMinusI);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) EXPECT_EQ(S.at1(i, j), -S.at1(j, i));
  EXPECT_THROW(moment_matrix(SequenceKind::plain(SeqKind::Catalan), 4, -3,
                             OffsetRule::IPlusJPlusRMinus2, WeightRule::JMinusI),
               DomainError);
  EXPECT_THROW(moment_matrix(SequenceKind::plain(SeqKind::Catalan), 2, 0,
                             OffsetRule::IPlusJPlusRMinus2, WeightRule::QPowerDiff),
               DomainError);
}
