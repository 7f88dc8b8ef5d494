#include "pfq/qkit.hpp"

#include <string>

namespace pfq {

std::vector<mpz_class> qbinom_coeffs(long n, long k) {
  if (k < 0 || k > n || n < 0) return {mpz_class(0)};
  // row[j] holds [i, j]_q as a coefficient list; q-Pascal:
  // [i, j] = [i-1, j-1] + q^j [i-1, j]
  std::vector<std::vector<mpz_class>> row(static_cast<size_t>(k) + 1);
  row[0] = {mpz_class(1)};
  for (long i = 1; i <= n; ++i) {
    for (long j = std::min(i, k); j >= 1; --j) {
      const auto& a = row[static_cast<size_t>(j - 1)];
      const auto& b = row[static_cast<size_t>(j)];
      std::vector<mpz_class> c(std::max(a.size(), b.size() + static_cast<size_t>(j)));
      for (size_t t = 0; t < a.size(); ++t) c[t] += a[t];
      for (size_t t = 0; t < b.size(); ++t) c[t + static_cast<size_t>(j)] += b[t];
      row[static_cast<size_t>(j)] = std::move(c);
    }
  }
  return row[static_cast<size_t>(k)];
}

QSeries mul_binomial(const QSeries& f, const Rational& c, long m) {
  if (c.is_zero()) return f;
  if (m < 0) throw NonTruncatable("factor (1 - c q^" + std::to_string(m) + ")");
  std::vector<Rational> r = f.coeffs();
  const long K = f.order();
  for (long t = K; t >= m; --t) r[static_cast<size_t>(t)] -= c * f[static_cast<int>(t - m)];
  return QSeries(std::move(r));
}

QSeries div_binomial(const QSeries& f, const Rational& c, long m) {
  if (c.is_zero()) return f;
  if (m < 0) throw NonTruncatable("denominator (1 - c q^" + std::to_string(m) + ")");
  std::vector<Rational> r = f.coeffs();
  if (m == 0) {
    Rational d = Rational(1) - c;
    if (d.is_zero()) throw PoleError("denominator (1 - q^0)");
    Rational inv = inverse(d);
    for (auto& x : r) x *= inv;
    return QSeries(std::move(r));
  }
  const long K = f.order();
  for (long t = m; t <= K; ++t) r[static_cast<size_t>(t)] += c * r[static_cast<size_t>(t - m)];
  return QSeries(std::move(r));
}

QSeries qpoch_mono(const Rational& c, long e, long n, int K) {
  QSeries r = QSeries::one(K);
  if (n >= 0) {
    for (long k = 0; k < n; ++k) {
      if (e + k > K && e + k >= 0) break;
      r = mul_binomial(r, c, e + k);
    }
    return r;
  }
  for (long k = n; k < 0; ++k) r = div_binomial(r, c, e + k);
  return r;
}

QSeries qpoch_inf_series(const Rational& c, long e, int K) {
  if (e <= 0) throw NonTruncatable("infinite product (c q^" + std::to_string(e) + ";q)_inf");
  QSeries r = QSeries::one(K);
  for (long k = e; k <= K; ++k) r = mul_binomial(r, c, k);
  return r;
}

bool check_q_binomial_theorem(const Rational& c, long a_exp, long x_exp, int K) {
  if (x_exp < 1) throw NonTruncatable("x must carry a positive q-power");
  if (a_exp < 0) throw NonTruncatable("a must carry a non-negative q-power");
  QSeries lhs = QSeries::zero(K);
  for (long k = 0; k * x_exp <= K; ++k) {
    QSeries t = qpoch_mono(c, a_exp, k, K);
    for (long i = 1; i <= k; ++i) t = div_binomial(t, Rational(1), i);
    lhs += t.shifted(static_cast<int>(k * x_exp));
  }
  QSeries rhs = qpoch_inf_series(c, a_exp + x_exp, K);
  for (long k = x_exp; k <= K; ++k) rhs = div_binomial(rhs, Rational(1), k);
  return lhs == rhs;
}

}  // namespace pfq
