#pragma once

#include <gmpxx.h>

#include <vector>

#include "pfq/error.hpp"
#include "pfq/ring.hpp"

namespace pfq {

template <RingScalar S>
S from_int(const S& like, long v) {
  return one_like(like) * Rational(v);
}

// (a;q)_n, including negative n: 1 / prod_{k=n}^{-1} (1 - a q^k).
template <RingScalar S>
S qpoch(const S& a, const S& q, long n) {
  S one = one_like(a);
  S r = one;
  if (n >= 0) {
    S aq = a;
    for (long k = 0; k < n; ++k) {
      r = r * (one - aq);
      if (k + 1 < n) aq = aq * q;
    }
    return r;
  }
  S den = one;
  S aq = a * pow(q, n);
  for (long k = n; k < 0; ++k) {
    S f = one - aq;
    if (f.is_zero()) throw PoleError("vanishing factor in negative-index q-Pochhammer");
    den = den * f;
    if (k + 1 < 0) aq = aq * q;
  }
  return inverse(den);
}

// (alpha)_n with (alpha)_{-n} = 1 / prod_{i=1}^{n} (alpha - i).
template <RingScalar S>
S rising(const S& alpha, long n) {
  S r = one_like(alpha);
  if (n >= 0) {
    for (long i = 1; i <= n; ++i) r = r * (alpha + from_int(alpha, i - 1));
    return r;
  }
  for (long i = 1; i <= -n; ++i) {
    S f = alpha + from_int(alpha, i + n - 1);
    if (f.is_zero()) throw PoleError("vanishing factor in negative-index rising factorial");
    r = r * f;
  }
  return inverse(r);
}

// Integer coefficients of the Gaussian binomial as a polynomial in q.
std::vector<mpz_class> qbinom_coeffs(long n, long k);

// Zero outside 0 <= k <= n. Evaluated by Horner so q = 1 is allowed.
template <RingScalar S>
S qbinom(long n, long k, const S& q) {
  S acc = zero_like(q);
  auto c = qbinom_coeffs(n, k);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + one_like(q) * Rational(*it);
  return acc;
}

// A numerator or denominator parameter of a basic hypergeometric series.
// A paired root stands for the two parameters +sqrt(value), -sqrt(value),
// contributing (value; q^2)_k, so no square roots are ever formed.
template <RingScalar S>
struct PochParam {
  S value;
  bool paired_root = false;
};

template <RingScalar S>
PochParam<S> plain(const S& v) {
  return {v, false};
}
template <RingScalar S>
PochParam<S> paired_root(const S& v) {
  return {v, true};
}

// sum_{k=0}^{terms} (a_1,...;q)_k / (q, b_1,...;q)_k z^k
// Vanishing factors are counted rather than multiplied in, so a zero that a later
// denominator cancels (a removable point such as a q^2 = 1 in a paired root) is
// handled exactly. A zero from a plain numerator parameter terminates the sum: it
// persists for every later k, so a coincident denominator zero must not cancel it.
template <RingScalar S>
S phi_terminating(const std::vector<PochParam<S>>& num, const std::vector<PochParam<S>>& den,
                  const S& q, const S& z, long terms) {
  S one = one_like(q);
  S term = one;  // nonzero part of the k-th term
  long order = 0;  // zeros minus poles accumulated in the k-th term
  S sum = one;
  S qk = one;  // q^k
  for (long k = 0; k < terms; ++k) {
    S qk2 = qk * qk;
    bool plain_zero = false;
    for (const auto& p : num)
      if (!p.paired_root && (one - p.value * qk).is_zero()) plain_zero = true;
    if (plain_zero) break;  // terminated
    auto take = [&](const S& f, int dir) {
      if (f.is_zero()) {
        order += dir;
        return;
      }
      term = dir > 0 ? term * f : term * inverse(f);
    };
    for (const auto& p : num) take(one - p.value * (p.paired_root ? qk2 : qk), 1);
    take(one - qk * q, -1);
    for (const auto& p : den) take(one - p.value * (p.paired_root ? qk2 : qk), -1);
    if (order < 0) throw PoleError("denominator vanishes before termination");
    term = term * z;
    if (order == 0) sum = sum + term;
    qk = qk * q;
  }
  return sum;
}

// ---- series specializations (q is the series variable) ----

// (c q^e; q)_n mod q^{K+1}; n may be negative.
QSeries qpoch_mono(const Rational& c, long e, long n, int K);
// (c q^e; q)_infinity mod q^{K+1}; needs e >= 1.
QSeries qpoch_inf_series(const Rational& c, long e, int K);
// f * (1 - c q^m) and f / (1 - c q^m) in O(K).
QSeries mul_binomial(const QSeries& f, const Rational& c, long m);
QSeries div_binomial(const QSeries& f, const Rational& c, long m);

// sum_k (a;q)_k/(q;q)_k x^k == (ax;q)_inf/(x;q)_inf with a = c q^{a_exp},
// x = q^{x_exp}.
bool check_q_binomial_theorem(const Rational& c, long a_exp, long x_exp, int K);
inline bool check_q_binomial_theorem(const Rational& a, long x_exp, int K) {
  return check_q_binomial_theorem(a, 0, x_exp, K);
}

}  // namespace pfq
