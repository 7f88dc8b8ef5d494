#include <gtest/gtest.h>

#include "pfq/error.hpp"
#include "pfq/qseries.hpp"
#include "pfq/random.hpp"
#include "pfq/rational.hpp"
#include "support.hpp"

using namespace pfq;
using pfq::test::series_of;

TEST(Rational, Normalizes) {
  EXPECT_EQ(rat(2, 4).str(), "1/2");
  EXPECT_EQ(rat(-3, -6).str(), "1/2");
  EXPECT_EQ(rat(0, 5).str(), "0");
  EXPECT_EQ(rat(0, 5).den(), 1);
  EXPECT_EQ(rat(3, -6).str(), "-1/2");
  EXPECT_THROW(rat(1, 0), Error);
}

TEST(Rational, ParsesStrings) {
  EXPECT_EQ(Rational::from_string("6/4"), rat(3, 2));
  EXPECT_EQ(Rational::from_string("-7"), Rational(-7));
  EXPECT_THROW(Rational::from_string("1/0"), Error);
  EXPECT_THROW(Rational::from_string("abc"), Error);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), Error);
  EXPECT_THROW(inverse(Rational(0)), Error);
}

TEST(Rational, IntegerPowers) {
  EXPECT_EQ(pow(rat(2, 3), 3), rat(8, 27));
  EXPECT_EQ(pow(rat(2, 3), -2), rat(9, 4));
  EXPECT_EQ(pow(rat(5, 7), 0), Rational(1));
}

TEST(QSeries, MultiplyExamples) {
  EXPECT_EQ(series_mul(series_of({1, 1, 0}), series_of({1, -1, 0})), series_of({1, 0, -1}));
  EXPECT_EQ(series_mul(series_of({1, 1, 1}), series_of({1, 1, 1})), series_of({1, 2, 3}));
  auto f = series_of({3, -1, 4, 1});
  EXPECT_EQ(series_mul(f, QSeries::one(3)), f);
}

TEST(QSeries, MultiplyRequiresEqualOrder) {
  EXPECT_THROW(series_mul(series_of({1, 1}), series_of({1, 1, 1})), OrderMismatch);
}

TEST(QSeries, InvertExamples) {
  EXPECT_EQ(series_invert(series_of({1, -1, 0, 0})), series_of({1, 1, 1, 1}));
  EXPECT_EQ(series_invert(QSeries::one(0)), QSeries::one(0));
  EXPECT_EQ(series_invert(series_of({2, 0})), QSeries::constant(rat(1, 2), 1));
  EXPECT_THROW(series_invert(series_of({0, 1, 2})), NotAUnit);
}

TEST(QSeries, MonomialAndShifts) {
  EXPECT_EQ(QSeries::monomial(Rational(3), 2, 4), series_of({0, 0, 3, 0, 0}));
  EXPECT_TRUE(QSeries::monomial(Rational(3), 5, 4).is_zero());
  EXPECT_THROW(QSeries::monomial(Rational(1), -1, 4), NonTruncatable);
  auto f = series_of({1, 2, 3});
  EXPECT_EQ(f.shifted(1), series_of({0, 1, 2}));
  EXPECT_EQ(series_of({0, 0, 5, 6}).unshifted(2), series_of({5, 6}));
  EXPECT_THROW(f.unshifted(1), Error);
  EXPECT_EQ(f.truncated(1), series_of({1, 2}));
  EXPECT_THROW(f.truncated(4), OrderMismatch);
  EXPECT_EQ(series_of({0, 0, 1}).valuation(), 2);
  EXPECT_EQ(QSeries::zero(3).valuation(), -1);
}

TEST(Sampling, DeterministicPerSeed) {
  Rng a(42), b(42);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(sample_rational(a, 5), sample_rational(b, 5));
  Rng c = Rng::for_trial(42, 3), d = Rng::for_trial(42, 3);
  EXPECT_EQ(sample_rational(c, 5), sample_rational(d, 5));
}

TEST(Sampling, RespectsBoundAndExclusion) {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational x = sample_rational(rng, 5, [](const Rational& v) { return v == Rational(1); });
    EXPECT_NE(x, Rational(1));
    EXPECT_FALSE(x.is_zero());
    EXPECT_LE(abs(x.num()), 5);
    EXPECT_LE(x.den(), 5);
  }
}

TEST(Sampling, ExhaustedBudgetThrows) {
  Rng rng(1);
  EXPECT_THROW(sample_rational(rng, 3, [](const Rational&) { return true; }, 10), Error);
}

TEST(SeriesProperties, RingAxioms) {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int K = static_cast<int>(rng.uniform(0, 8));
    auto f = test::random_series(rng, K), g = test::random_series(rng, K),
         h = test::random_series(rng, K);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f - f, QSeries::zero(K));
  }
}

TEST(SeriesProperties, InverseOfUnit) {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int K = static_cast<int>(rng.uniform(0, 10));
    auto f = test::random_series(rng, K);
    if (f[0].is_zero()) continue;
    EXPECT_EQ(series_mul(f, series_invert(f)), QSeries::one(K));
  }
}

TEST(RationalProperties, FieldAxioms) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Rational x = test::random_rational(rng), y = test::random_rational(rng),
             z = test::random_rational(rng);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * inverse(x), Rational(1));
    EXPECT_EQ((x / y) * y, x);
  }
}
