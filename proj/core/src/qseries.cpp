#include "pfq/qseries.hpp"

#include <string>

#include "pfq/error.hpp"

namespace pfq {

namespace {

void require_same_order(const QSeries& a, const QSeries& b) {
  if (a.order() != b.order())
    throw OrderMismatch("series orders differ: " + std::to_string(a.order()) + " vs " +
                        std::to_string(b.order()));
}

}  // namespace

QSeries::QSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("QSeries needs at least one coefficient");
}

QSeries QSeries::zero(int K) {
  if (K < 0) throw DomainError("negative series order");
  return QSeries(std::vector<Rational>(static_cast<size_t>(K) + 1));
}

QSeries QSeries::one(int K) { return constant(Rational(1), K); }

QSeries QSeries::constant(const Rational& c, int K) {
  QSeries r = zero(K);
  r.c_[0] = c;
  return r;
}

QSeries QSeries::monomial(const Rational& c, int e, int K) {
  if (e < 0) throw NonTruncatable("negative q-power " + std::to_string(e));
  QSeries r = zero(K);
  if (e <= K) r.c_[static_cast<size_t>(e)] = c;
  return r;
}

bool QSeries::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

int QSeries::valuation() const {
  for (size_t t = 0; t < c_.size(); ++t)
    if (!c_[t].is_zero()) return static_cast<int>(t);
  return -1;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  require_same_order(*this, o);
  for (size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  require_same_order(*this, o);
  for (size_t t = 0; t < c_.size(); ++t) c_[t] -= o.c_[t];
  return *this;
}

QSeries& QSeries::operator*=(const QSeries& o) {
  require_same_order(*this, o);
  const size_t n = c_.size();
  std::vector<mpq_class> acc(n);
  for (size_t u = 0; u < n; ++u) {
    if (c_[u].is_zero()) continue;
    const mpq_class& fu = c_[u].raw();
    for (size_t v = 0; u + v < n; ++v) {
      if (o.c_[v].is_zero()) continue;
      acc[u + v] += fu * o.c_[v].raw();
    }
  }
  for (size_t t = 0; t < n; ++t) c_[t] = Rational(std::move(acc[t]));
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

QSeries& QSeries::operator/=(const QSeries& o) { return *this *= series_invert(o); }

QSeries operator-(QSeries a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

QSeries QSeries::shifted(int e) const {
  if (e < 0) throw NonTruncatable("negative shift " + std::to_string(e));
  QSeries r = zero(order());
  for (int t = 0; t + e <= order(); ++t) r.c_[static_cast<size_t>(t + e)] = c_[static_cast<size_t>(t)];
  return r;
}

QSeries QSeries::unshifted(int e) const {
  if (e < 0) throw DomainError("negative unshift");
  if (e > order()) throw NonTruncatable("unshift past the known order");
  for (int t = 0; t < e; ++t)
    if (!c_[static_cast<size_t>(t)].is_zero())
      throw NonTruncatable("coefficient of q^" + std::to_string(t) + " is nonzero");
  return QSeries(std::vector<Rational>(c_.begin() + e, c_.end()));
}

QSeries QSeries::truncated(int K) const {
  if (K > order()) throw OrderMismatch("cannot raise series order");
  return QSeries(std::vector<Rational>(c_.begin(), c_.begin() + K + 1));
}

QSeries series_mul(const QSeries& f, const QSeries& g) { return f * g; }

QSeries series_invert(const QSeries& f) {
  if (f[0].is_zero()) throw NotAUnit("series has zero constant term");
  const int K = f.order();
  std::vector<Rational> r(static_cast<size_t>(K) + 1);
  Rational inv0 = inverse(f[0]);
  r[0] = inv0;
  for (int t = 1; t <= K; ++t) {
    mpq_class s;
    for (int u = 1; u <= t; ++u) {
      if (f[u].is_zero()) continue;
      s += f[u].raw() * r[static_cast<size_t>(t - u)].raw();
    }
    r[static_cast<size_t>(t)] = -Rational(std::move(s)) * inv0;
  }
  return QSeries(std::move(r));
}

QSeries inverse(const QSeries& f) { return series_invert(f); }

QSeries pow(const QSeries& f, long e) {
  if (e < 0) return pow(series_invert(f), -e);
  QSeries result = QSeries::one(f.order());
  QSeries base = f;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

}  // namespace pfq
