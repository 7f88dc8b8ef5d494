#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfq/matrix.hpp"
#include "pfq/qkit.hpp"
#include "pfq/report.hpp"

namespace pfq {

// lambda_1 > ... > lambda_n > 0.
class StrictPartition {
 public:
  StrictPartition() = default;
  // Throws DomainError unless strictly decreasing and positive.
  explicit StrictPartition(std::vector<int> parts);

  static StrictPartition staircase(int m, int len);

  int length() const { return static_cast<int>(p_.size()); }
  int operator[](int i) const { return p_[static_cast<size_t>(i)]; }  // 0-based
  const std::vector<int>& parts() const { return p_; }
  int cells() const;
  // n(lambda) = sum (i-1) lambda_i.
  int n_lambda() const;
  bool is_staircase() const;
  std::string str() const;

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

 private:
  std::vector<int> p_;
};

// n(lambda) of (m, m-1, ..., m-2n+1) in closed form.
long staircase_n_lambda(int m, int n);

// 0 <= nu_1 <= ... <= nu_n.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<int> values);

  int length() const { return static_cast<int>(v_.size()); }
  int operator[](int i) const { return v_[static_cast<size_t>(i)]; }  // 0-based
  const std::vector<int>& values() const { return v_; }
  int total() const;
  std::string str() const;

  // nu + (0, 1, ..., n-1).
  std::vector<int> plus_staircase() const;

  // Profile classes: P_n (length 2n, equal consecutive pairs), P'_n
  // (P_n + epsilon_2n) and Q^(t)_n (length 2n-1, pairs on either side of the
  // free coordinate 2t-1).
  bool in_P() const;
  static bool in_P_prime(const std::vector<int>& mu);
  bool in_Q(int t) const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<int> v_;
};

// First violated condition of a filling, 1-based coordinates in the shifted
// layout (row i occupies columns i .. i + lambda_i - 1).
struct RppViolation : DomainError {
  enum class Kind { Shape, Row, Column, Negative };
  RppViolation(Kind k, int i, int j, const std::string& what)
      : DomainError(what), kind(k), row(i), col(j) {}
  Kind kind;
  int row, col;
};

class ShiftedRPP {
 public:
  // Rows nondecreasing, columns nondecreasing; strictly increasing columns
  // when `strict` (a shifted tableau). Throws RppViolation.
  static ShiftedRPP validate(const StrictPartition& shape, std::vector<std::vector<long>> rows,
                             bool strict);

  const StrictPartition& shape() const { return shape_; }
  const std::vector<std::vector<long>>& rows() const { return rows_; }
  bool strict() const { return strict_; }
  long weight() const;
  std::vector<long> profile() const;

 private:
  StrictPartition shape_;
  std::vector<std::vector<long>> rows_;
  bool strict_ = false;
};

inline constexpr int kBruteCells = 16;
inline constexpr int kBruteOrder = 12;

// GF(R_{lambda,nu}) mod q^{K+1} by enumeration.
QSeries gf_rpp_bruteforce(const StrictPartition& shape, const Profile& nu, int K);
// GF(R_{lambda,nu}) / q^{sum lambda_i nu_i} to order E by enumeration; the
// guard is on the excess E.
QSeries gf_rpp_bruteforce_reduced(const StrictPartition& shape, const Profile& nu, int E);
// GF(T_{lambda,mu}) mod q^{K+1} by enumeration (column-strict); mu strictly
// increasing. Guarded on cells and on the excess over the minimal weight.
QSeries gf_tableaux_bruteforce(const StrictPartition& shape, const std::vector<int>& mu, int K);

// det( q^{lambda_i mu_j} / (q;q)_{lambda_i - 1} ) mod q^{K+1}.
QSeries gf_tableaux_det(const StrictPartition& shape, const std::vector<int>& mu, int K);

// Entries bounded by N: det( q^{lambda_i mu_j} [lambda_i - 1 + N - mu_j, lambda_i - 1]_q ).
template <RingScalar S>
S gf_tableaux_det_finiteN(const StrictPartition& shape, const std::vector<int>& mu, int N,
                          const S& q) {
  const int n = shape.length();
  if (static_cast<int>(mu.size()) != n) throw DomainError("profile length differs from shape");
  for (int j = 0; j < n; ++j) {
    if (mu[static_cast<size_t>(j)] > N) throw DomainError("N below a profile entry");
    if (j > 0 && mu[static_cast<size_t>(j)] <= mu[static_cast<size_t>(j - 1)])
      throw DomainError("tableau profile must be strictly increasing");
  }
  Matrix<S> M(n, n, zero_like(q));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const long l = shape[i], u = mu[static_cast<size_t>(j)];
      M(i, j) = pow(q, l * u) * qbinom(l - 1 + N - u, l - 1, q);
    }
  return det(M);
}

// GF(R_{lambda,nu}) mod q^{K+1} via the determinant at nu + epsilon.
QSeries gf_rpp_det(const StrictPartition& shape, const Profile& nu, int K);
// GF(R_{lambda,nu}) / q^{sum lambda_i nu_i} to order E via the determinant.
QSeries gf_rpp_det_reduced(const StrictPartition& shape, const Profile& nu, int E);

// GF(T_{lambda,nu+eps}) = q^{n(lambda)} GF(R_{lambda,nu}) to order K, the
// tableau side by determinant and the RPP side by enumeration.
bool check_gf_rel(const StrictPartition& shape, const Profile& nu, int K);
// Determinant against tableau enumeration.
bool check_stgf(const StrictPartition& shape, const std::vector<int>& mu, int K);
// Row reversal: det(q^{(m-i+1)mu_j}/(q)_{m-i}) = (-1)^n det(q^{(i+m-2n)mu_j}/(q)_{i+m-2n-1}).
bool check_gf_st(int m, int n, const std::vector<int>& mu, int K);

// Profile weights as series in q with a, b specialized. Each is multiplied by
// q^shift so callers can absorb a negative q-power; NonTruncatable if the
// net power is still negative.
QSeries omega_weight(const Profile& nu, int x, const Rational& a, const Rational& b, int K,
                     long shift = 0);
QSeries omega_prime_weight(const std::vector<int>& mu, int x, const Rational& a,
                           const Rational& b, int K, long shift = 0);
QSeries psi_weight(const Profile& nu, int t, int x, int y, const Rational& a, const Rational& b,
                   int K, long shift = 0);

enum class RppTheorem { GF, GF2, GF3, Odd, Odd2, Odd3 };

std::string rpp_theorem_name(RppTheorem t);
std::optional<RppTheorem> rpp_theorem_from_name(const std::string& name);
std::vector<RppTheorem> all_rpp_theorems();

struct RppParams {
  int m = 2, n = 1, l = 0, r = 0;
};

// The shape fixed by the theorem; checks the parameter ranges.
StrictPartition rpp_theorem_shape(RppTheorem t, const RppParams& p);

enum class GfRoute { Determinant, BruteForce };

// Sum over admissible profiles of weight * GF(R), mod q^{K+1}.
QSeries lhs_weighted_sum(RppTheorem t, const RppParams& p, const Rational& a, const Rational& b,
                         int K, GfRoute route = GfRoute::Determinant, bool reversed = false);
QSeries rhs_series(RppTheorem t, const RppParams& p, const Rational& a, const Rational& b, int K);

// f(i,j,r) as a series in q.
QSeries f_series(int i, int j, int r, const Rational& a, const Rational& b, int K);

// Sum over P'_n of omega' * GF(T) against the closed form with its constant
// a^{n(n-1)} q^{mn + n(n-2)(4n-1)/3 + n(n-1)r}; both sides are lifted by the
// same power of q when that exponent is negative.
bool check_shifted_tableaux_gf(int m, int n, int r, const Rational& a, const Rational& b, int K);

struct BinomExpansionSides {
  QSeries lhs;        // sum over paired mu
  QSeries subset_sum;  // sum_I Pf(B_I) det(T_I) over a truncated column range
  QSeries msf;         // Pf(T B tT) over the same range
  QSeries rhs;         // constant times Pf(a^i_j)
  bool msf_used = false;
  bool equal() const {
    return lhs == rhs && (!msf_used || (subset_sum == lhs && msf == lhs));
  }
};

// Both sides divided by q^{ns}. Needs n <= 2, s >= 1, r >= 0.
BinomExpansionSides binom_expansion_sides(int n, int s, int r, const Rational& a,
                                          const Rational& b, int K);
bool check_binom_expansion(int n, int s, int r, const Rational& a, const Rational& b, int K);

std::string series_str(const QSeries& f);

// One report per trial with (a, b) drawn unless pinned. The cross-check
// recomputes the left side with enumerated GF(R) when the shape is small.
std::vector<VerificationReport> verify_rpp_theorem(RppTheorem t, const RppParams& p, int K,
                                                   int trials, std::uint64_t seed,
                                                   std::optional<Rational> a = std::nullopt,
                                                   std::optional<Rational> b = std::nullopt);

}  // namespace pfq
