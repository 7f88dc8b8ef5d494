#pragma once

#include <vector>

#include "pfq/rational.hpp"

namespace pfq {

// Power series in q known modulo q^{K+1}. No negative powers.
class QSeries {
 public:
  QSeries() : c_(1) {}  // zero at order 0
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries zero(int K);
  static QSeries one(int K);
  static QSeries constant(const Rational& c, int K);
  // c * q^e; zero if e > K.
  static QSeries monomial(const Rational& c, int e, int K);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int t) const { return c_[static_cast<size_t>(t)]; }

  bool is_zero() const;
  // Lowest t with nonzero coefficient, or -1 when zero.
  int valuation() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  QSeries& operator/=(const QSeries& o);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  friend QSeries operator/(QSeries a, const QSeries& b) { return a /= b; }
  friend QSeries operator-(QSeries a);

  friend bool operator==(const QSeries& a, const QSeries& b) = default;

  // Multiply by q^e (e >= 0), dropping what falls past the order.
  QSeries shifted(int e) const;
  // Divide by q^e, leaving order K-e. Requires the first e coefficients to vanish.
  QSeries unshifted(int e) const;
  QSeries truncated(int K) const;

 private:
  std::vector<Rational> c_;
};

QSeries series_mul(const QSeries& f, const QSeries& g);
QSeries series_invert(const QSeries& f);

QSeries inverse(const QSeries& f);
QSeries pow(const QSeries& f, long e);

inline QSeries zero_like(const QSeries& f) { return QSeries::zero(f.order()); }
inline QSeries one_like(const QSeries& f) { return QSeries::one(f.order()); }

}  // namespace pfq
