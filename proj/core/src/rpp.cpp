#include "pfq/rpp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "pfq/skewpf.hpp"

namespace pfq {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// (b q^e; q)_n / (q^e; q)_n, n may be negative.
QSeries poch_ratio(const Rational& b, long e, long n, int K) {
  QSeries r = QSeries::one(K);
  if (n >= 0) {
    for (long k = 0; k < n; ++k) {
      r = mul_binomial(r, b, e + k);
      r = div_binomial(r, Rational(1), e + k);
    }
  } else {
    for (long k = n; k < 0; ++k) {
      r = div_binomial(r, b, e + k);
      r = mul_binomial(r, Rational(1), e + k);
    }
  }
  return r;
}

long dot(const StrictPartition& lam, const std::vector<int>& v) {
  long s = 0;
  for (int i = 0; i < lam.length(); ++i) s += static_cast<long>(lam[i]) * v[static_cast<size_t>(i)];
  return s;
}

void check_lengths(const StrictPartition& shape, size_t len) {
  if (static_cast<int>(len) != shape.length())
    throw DomainError("profile length " + std::to_string(len) + " differs from shape length " +
                      std::to_string(shape.length()));
}

// Counts fillings with the given diagonal and total weight <= W; index is
// the weight.
std::vector<long> enumerate_fillings(const StrictPartition& shape, const std::vector<int>& diag,
                                     bool strict, long W) {
  const int n = shape.length();
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < i + shape[i]; ++j) cells.emplace_back(i, j);
  // Each cell is at least its row's diagonal value.
  std::vector<long> rest(cells.size() + 1, 0);
  for (size_t c = cells.size(); c-- > 0;) rest[c] = rest[c + 1] + diag[static_cast<size_t>(cells[c].first)];
  std::vector<long> counts(static_cast<size_t>(std::max<long>(W, -1) + 1), 0);
  if (rest[0] > W) return counts;
  const int width = n + shape[0];
  std::vector<std::vector<long>> val(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(width), 0));
  const long bump = strict ? 1 : 0;

  std::function<void(size_t, long)> rec = [&](size_t idx, long w) {
    if (idx == cells.size()) {
      ++counts[static_cast<size_t>(w)];
      return;
    }
    const auto [i, j] = cells[idx];
    auto& row = val[static_cast<size_t>(i)];
    if (j == i) {
      const long v = diag[static_cast<size_t>(i)];
      if (i > 0 && v < val[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + bump) return;
      row[static_cast<size_t>(j)] = v;
      rec(idx + 1, w + v);
      return;
    }
    long lo = row[static_cast<size_t>(j - 1)];
    if (i > 0) lo = std::max(lo, val[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + bump);
    for (long v = lo; w + v + rest[idx + 1] <= W; ++v) {
      row[static_cast<size_t>(j)] = v;
      rec(idx + 1, w + v);
    }
  };
  rec(0, 0);
  return counts;
}

QSeries counts_series(const std::vector<long>& counts, long from, int K) {
  QSeries r = QSeries::zero(K);
  std::vector<Rational> c(static_cast<size_t>(K) + 1, Rational(0));
  for (int t = 0; t <= K; ++t) {
    const long idx = from + t;
    if (idx >= 0 && idx < static_cast<long>(counts.size())) c[static_cast<size_t>(t)] = Rational(counts[static_cast<size_t>(idx)]);
  }
  return QSeries(std::move(c));
}

void brute_guard(const StrictPartition& shape, long excess) {
  if (shape.cells() > kBruteCells)
    throw GuardError("enumeration guard: " + std::to_string(shape.cells()) + " cells > " +
                     std::to_string(kBruteCells));
  if (excess > kBruteOrder)
    throw GuardError("enumeration guard: order " + std::to_string(excess) + " > " +
                     std::to_string(kBruteOrder));
}

void check_strict_mu(const std::vector<int>& mu) {
  for (size_t j = 0; j < mu.size(); ++j) {
    if (mu[j] < 0) throw DomainError("negative profile entry");
    if (j > 0 && mu[j] <= mu[j - 1]) throw DomainError("tableau profile must be strictly increasing");
  }
}

}  // namespace

// ---- StrictPartition ----

StrictPartition::StrictPartition(std::vector<int> parts) : p_(std::move(parts)) {
  if (p_.empty()) throw DomainError("empty shape");
  for (size_t i = 0; i < p_.size(); ++i) {
    if (p_[i] <= 0) throw DomainError("shape parts must be positive: " + join(p_));
    if (i > 0 && p_[i] >= p_[i - 1]) throw DomainError("shape must be strictly decreasing: " + join(p_));
  }
}

StrictPartition StrictPartition::staircase(int m, int len) {
  std::vector<int> v;
  for (int i = 0; i < len; ++i) v.push_back(m - i);
  return StrictPartition(std::move(v));
}

int StrictPartition::cells() const { return std::accumulate(p_.begin(), p_.end(), 0); }

int StrictPartition::n_lambda() const {
  int s = 0;
  for (int i = 0; i < length(); ++i) s += i * p_[static_cast<size_t>(i)];
  return s;
}

bool StrictPartition::is_staircase() const {
  for (size_t i = 1; i < p_.size(); ++i)
    if (p_[i] != p_[i - 1] - 1) return false;
  return true;
}

std::string StrictPartition::str() const { return "(" + join(p_) + ")"; }

long staircase_n_lambda(int m, int n) {
  const long M = m, N = n;
  return M * N * (2 * N - 1) - N * (2 * N - 1) * (4 * N - 1) / 3;
}

// ---- Profile ----

Profile::Profile(std::vector<int> values) : v_(std::move(values)) {
  for (size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] < 0) throw DomainError("profile entries must be non-negative: " + join(v_));
    if (i > 0 && v_[i] < v_[i - 1]) throw DomainError("profile must be nondecreasing: " + join(v_));
  }
}

int Profile::total() const { return std::accumulate(v_.begin(), v_.end(), 0); }

std::string Profile::str() const { return "(" + join(v_) + ")"; }

std::vector<int> Profile::plus_staircase() const {
  std::vector<int> r = v_;
  for (size_t i = 0; i < r.size(); ++i) r[i] += static_cast<int>(i);
  return r;
}

bool Profile::in_P() const {
  if (v_.size() % 2) return false;
  for (size_t k = 0; k < v_.size(); k += 2)
    if (v_[k] != v_[k + 1]) return false;
  return true;
}

bool Profile::in_P_prime(const std::vector<int>& mu) {
  if (mu.size() % 2) return false;
  std::vector<int> nu = mu;
  for (size_t i = 0; i < nu.size(); ++i) nu[i] -= static_cast<int>(i);
  for (size_t i = 0; i < nu.size(); ++i)
    if (nu[i] < 0 || (i > 0 && nu[i] < nu[i - 1])) return false;
  return Profile(nu).in_P();
}

bool Profile::in_Q(int t) const {
  if (v_.size() % 2 == 0) return false;
  const int n = (length() + 1) / 2;
  if (t < 1 || t > n) return false;
  for (int k = 1; k <= t - 1; ++k)
    if (v_[static_cast<size_t>(2 * k - 1)] != v_[static_cast<size_t>(2 * k - 2)]) return false;
  for (int k = t; k <= n - 1; ++k)
    if (v_[static_cast<size_t>(2 * k)] != v_[static_cast<size_t>(2 * k - 1)]) return false;
  return true;
}

// ---- ShiftedRPP ----

ShiftedRPP ShiftedRPP::validate(const StrictPartition& shape, std::vector<std::vector<long>> rows,
                                bool strict) {
  using K = RppViolation::Kind;
  if (static_cast<int>(rows.size()) != shape.length())
    throw RppViolation(K::Shape, static_cast<int>(rows.size()), 0,
                       "filling has " + std::to_string(rows.size()) + " rows, shape " +
                           shape.str() + " has " + std::to_string(shape.length()));
  for (int i = 0; i < shape.length(); ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (static_cast<int>(row.size()) != shape[i])
      throw RppViolation(K::Shape, i + 1, 0,
                         "row " + std::to_string(i + 1) + " has length " +
                             std::to_string(row.size()) + ", expected " + std::to_string(shape[i]));
  }
  for (int i = 0; i < shape.length(); ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    for (int c = 0; c < shape[i]; ++c) {
      const int col = i + c;  // shifted column, 0-based
      const long v = row[static_cast<size_t>(c)];
      auto where = [&] { return "(" + std::to_string(i + 1) + "," + std::to_string(col + 1) + ")"; };
      if (v < 0) throw RppViolation(K::Negative, i + 1, col + 1, "negative entry at " + where());
      if (c > 0 && v < row[static_cast<size_t>(c - 1)])
        throw RppViolation(K::Row, i + 1, col + 1, "row decreases at " + where());
      if (i > 0) {
        // the cell above is column col of row i-1, offset col-(i-1)
        const long above = rows[static_cast<size_t>(i - 1)][static_cast<size_t>(col - (i - 1))];
        if (strict ? v <= above : v < above)
          throw RppViolation(K::Column, i + 1, col + 1,
                             std::string(strict ? "column not strictly increasing" : "column decreases") +
                                 " at " + where());
      }
    }
  }
  ShiftedRPP r;
  r.shape_ = shape;
  r.rows_ = std::move(rows);
  r.strict_ = strict;
  return r;
}

long ShiftedRPP::weight() const {
  long s = 0;
  for (const auto& row : rows_) s = std::accumulate(row.begin(), row.end(), s);
  return s;
}

std::vector<long> ShiftedRPP::profile() const {
  std::vector<long> p;
  for (const auto& row : rows_) p.push_back(row.front());
  return p;
}

// ---- generating functions ----

QSeries gf_rpp_bruteforce(const StrictPartition& shape, const Profile& nu, int K) {
  check_lengths(shape, nu.values().size());
  brute_guard(shape, K);
  return counts_series(enumerate_fillings(shape, nu.values(), false, K), 0, K);
}

QSeries gf_rpp_bruteforce_reduced(const StrictPartition& shape, const Profile& nu, int E) {
  check_lengths(shape, nu.values().size());
  brute_guard(shape, E);
  const long base = dot(shape, nu.values());
  return counts_series(enumerate_fillings(shape, nu.values(), false, base + E), base, E);
}

QSeries gf_tableaux_bruteforce(const StrictPartition& shape, const std::vector<int>& mu, int K) {
  check_lengths(shape, mu.size());
  check_strict_mu(mu);
  brute_guard(shape, K - dot(shape, mu));
  return counts_series(enumerate_fillings(shape, mu, true, K), 0, K);
}

QSeries gf_tableaux_det(const StrictPartition& shape, const std::vector<int>& mu, int K) {
  check_lengths(shape, mu.size());
  check_strict_mu(mu);
  const int n = shape.length();
  Matrix<QSeries> M(n, n, QSeries::zero(K));
  for (int i = 0; i < n; ++i) {
    QSeries inv_fact = QSeries::one(K);
    for (int k = 1; k <= shape[i] - 1; ++k) inv_fact = div_binomial(inv_fact, Rational(1), k);
    for (int j = 0; j < n; ++j) {
      const long e = static_cast<long>(shape[i]) * mu[static_cast<size_t>(j)];
      M(i, j) = e > K ? QSeries::zero(K) : inv_fact.shifted(static_cast<int>(e));
    }
  }
  return det_laplace(M);
}

QSeries gf_rpp_det(const StrictPartition& shape, const Profile& nu, int K) {
  check_lengths(shape, nu.values().size());
  const int nl = shape.n_lambda();
  return gf_tableaux_det(shape, nu.plus_staircase(), K + nl).unshifted(nl);
}

QSeries gf_rpp_det_reduced(const StrictPartition& shape, const Profile& nu, int E) {
  check_lengths(shape, nu.values().size());
  const long lift = shape.n_lambda() + dot(shape, nu.values());
  return gf_tableaux_det(shape, nu.plus_staircase(), static_cast<int>(E + lift))
      .unshifted(static_cast<int>(lift));
}

bool check_gf_rel(const StrictPartition& shape, const Profile& nu, int K) {
  const int nl = shape.n_lambda();
  QSeries tab = gf_tableaux_det(shape, nu.plus_staircase(), K + nl);
  QSeries rpp = gf_rpp_bruteforce(shape, nu, K);
  return tab.unshifted(nl) == rpp;
}

bool check_stgf(const StrictPartition& shape, const std::vector<int>& mu, int K) {
  const int order = static_cast<int>(dot(shape, mu)) + K;
  return gf_tableaux_det(shape, mu, order) == gf_tableaux_bruteforce(shape, mu, order);
}

bool check_gf_st(int m, int n, const std::vector<int>& mu, int K) {
  if (m < 2 * n) throw DomainError("row reversal needs m >= 2n");
  const int N = 2 * n;
  if (static_cast<int>(mu.size()) != N) throw DomainError("profile length must be 2n");
  auto build = [&](auto&& row_exp) {
    Matrix<QSeries> M(N, N, QSeries::zero(K));
    for (int i = 1; i <= N; ++i) {
      const int e = row_exp(i);  // row i is q^{e mu_j} / (q;q)_{e-1}
      QSeries inv_fact = QSeries::one(K);
      for (int k = 1; k <= e - 1; ++k) inv_fact = div_binomial(inv_fact, Rational(1), k);
      for (int j = 0; j < N; ++j) {
        const long p = static_cast<long>(e) * mu[static_cast<size_t>(j)];
        M(i - 1, j) = p > K ? QSeries::zero(K) : inv_fact.shifted(static_cast<int>(p));
      }
    }
    return det_laplace(M);
  };
  QSeries lhs = build([&](int i) { return m - i + 1; });
  QSeries rhs = build([&](int i) { return i + m - N; });
  if (n % 2) rhs = -rhs;
  return lhs == rhs;
}

// ---- weights ----

QSeries omega_weight(const Profile& nu, int x, const Rational& a, const Rational& b, int K,
                     long shift) {
  if (!nu.in_P()) throw DomainError("omega weight needs a profile in P_n: " + nu.str());
  const long W = nu.total() / 2;
  const long e = x * W + shift;
  if (e < 0) throw NonTruncatable("omega weight has net q-power " + std::to_string(e));
  QSeries r = QSeries::monomial(pow(a, W), static_cast<int>(std::min<long>(e, K + 1)), K);
  for (int k = 1; 2 * k <= nu.length(); ++k) r *= poch_ratio(b, 2 * k - 1, nu[2 * k - 2], K);
  return r;
}

QSeries omega_prime_weight(const std::vector<int>& mu, int x, const Rational& a,
                           const Rational& b, int K, long shift) {
  if (!Profile::in_P_prime(mu)) throw DomainError("omega' needs a profile in P'_n: (" + join(mu) + ")");
  const long n = static_cast<long>(mu.size()) / 2;
  const long W = (std::accumulate(mu.begin(), mu.end(), 0L) - n) / 2;
  const long e = x * W + shift;
  if (e < 0) throw NonTruncatable("omega' weight has net q-power " + std::to_string(e));
  QSeries r = QSeries::monomial(pow(a, W), static_cast<int>(std::min<long>(e, K + 1)), K);
  for (long k = 1; k <= n; ++k) r *= poch_ratio(b, 1, mu[static_cast<size_t>(2 * k - 2)], K);
  return r;
}

QSeries psi_weight(const Profile& nu, int t, int x, int y, const Rational& a, const Rational& b,
                   int K, long shift) {
  if (!nu.in_Q(t))
    throw DomainError("psi weight needs a profile in Q^(" + std::to_string(t) + ")_n: " + nu.str());
  const int n = (nu.length() + 1) / 2;
  const long s = nu[2 * t - 2];
  const long W = (nu.total() - s) / 2;
  const long e = x * W + y * s + shift;
  if (e < 0) throw NonTruncatable("psi weight has net q-power " + std::to_string(e));
  QSeries r = QSeries::monomial(pow(a, W + s), static_cast<int>(std::min<long>(e, K + 1)), K);
  r *= poch_ratio(b, 2 * t - 1, s, K);
  for (int k = 1; k <= t - 1; ++k) r *= poch_ratio(b, 2 * k, nu[2 * k - 2] - 1, K);
  for (int k = t; k <= n - 1; ++k) r *= poch_ratio(b, 2 * k, nu[2 * k - 1], K);
  return r;
}

// ---- theorems ----

std::string rpp_theorem_name(RppTheorem t) {
  switch (t) {
    case RppTheorem::GF: return "rpp-gf";
    case RppTheorem::GF2: return "rpp-gf2";
    case RppTheorem::GF3: return "rpp-gf3";
    case RppTheorem::Odd: return "rpp-odd";
    case RppTheorem::Odd2: return "rpp-odd2";
    case RppTheorem::Odd3: return "rpp-odd3";
  }
  return "?";
}

std::vector<RppTheorem> all_rpp_theorems() {
  return {RppTheorem::GF, RppTheorem::GF2, RppTheorem::GF3,
          RppTheorem::Odd, RppTheorem::Odd2, RppTheorem::Odd3};
}

std::optional<RppTheorem> rpp_theorem_from_name(const std::string& name) {
  for (auto t : all_rpp_theorems())
    if (rpp_theorem_name(t) == name) return t;
  return std::nullopt;
}

namespace {

bool is_odd(RppTheorem t) {
  return t == RppTheorem::Odd || t == RppTheorem::Odd2 || t == RppTheorem::Odd3;
}

void need(bool ok, RppTheorem t, const std::string& what) {
  if (!ok) throw DomainError(rpp_theorem_name(t) + " requires " + what);
}

// A block of equal profile coordinates and its degree per unit.
struct Group {
  std::vector<int> idx;
  long slope;
};

std::vector<Group> make_groups(const StrictPartition& lam, const std::vector<std::vector<int>>& idx,
                               const std::vector<int>& add) {
  std::vector<Group> g;
  for (size_t k = 0; k < idx.size(); ++k) {
    long s = add[k];
    for (int i : idx[k]) s += lam[i];
    if (s <= 0)
      throw NonTruncatable("profile component " + std::to_string(k + 1) +
                           " has non-positive degree slope " + std::to_string(s));
    g.push_back({idx[k], s});
  }
  return g;
}

// Nondecreasing free coordinates whose minimal degree base + sum w*slope <= K.
std::vector<std::vector<int>> enumerate_profiles(const std::vector<Group>& groups, int len,
                                                 long base, int K) {
  std::vector<std::vector<int>> out;
  std::vector<long> tail(groups.size() + 1, 0);
  for (size_t k = groups.size(); k-- > 0;) tail[k] = tail[k + 1] + groups[k].slope;
  std::vector<int> ws;
  std::function<void(size_t, int, long)> rec = [&](size_t k, int prev, long e) {
    if (k == groups.size()) {
      std::vector<int> nu(static_cast<size_t>(len), 0);
      for (size_t g = 0; g < groups.size(); ++g)
        for (int i : groups[g].idx) nu[static_cast<size_t>(i)] = ws[g];
      out.push_back(std::move(nu));
      return;
    }
    for (int w = prev; e + w * tail[k] <= K; ++w) {
      ws.push_back(w);
      rec(k + 1, w, e + w * groups[k].slope);
      ws.pop_back();
    }
  };
  if (base <= K) rec(0, 0, base);
  return out;
}

QSeries reduced_gf(const StrictPartition& lam, const Profile& nu, int K, GfRoute route) {
  return route == GfRoute::Determinant ? gf_rpp_det_reduced(lam, nu, K)
                                       : gf_rpp_bruteforce_reduced(lam, nu, K);
}

}  // namespace

StrictPartition rpp_theorem_shape(RppTheorem t, const RppParams& p) {
  const int m = p.m, n = p.n, l = p.l;
  need(n >= 1, t, "n >= 1");
  std::vector<int> v;
  switch (t) {
    case RppTheorem::GF:
      need(m >= 2 * n, t, "m >= 2n");
      return StrictPartition::staircase(m, 2 * n);
    case RppTheorem::GF2:
      need(m >= 2 * n, t, "m >= 2n");
      need(l >= m, t, "l >= m");
      v.push_back(l);
      for (int i = 1; i < 2 * n; ++i) v.push_back(m - i);
      return StrictPartition(v);
    case RppTheorem::GF3:
      need(m >= 2 * n, t, "m >= 2n");
      need(l > m, t, "l > m");
      v = {l, m};
      for (int i = 2; i < 2 * n; ++i) v.push_back(m - i);
      return StrictPartition(v);
    case RppTheorem::Odd:
      need(m >= 2 * n - 1, t, "m >= 2n-1");
      return StrictPartition::staircase(m, 2 * n - 1);
    case RppTheorem::Odd2:
      need(n >= 2, t, "n >= 2");
      need(m >= 2 * n - 1, t, "m >= 2n-1");
      need(l >= m, t, "l >= m");
      v.push_back(l);
      for (int i = 1; i < 2 * n - 1; ++i) v.push_back(m - i);
      return StrictPartition(v);
    case RppTheorem::Odd3:
      need(n >= 2, t, "n >= 2");
      need(m >= 2 * n - 1, t, "m >= 2n-1");
      need(l > m, t, "l > m");
      v = {l, m};
      for (int i = 2; i < 2 * n - 1; ++i) v.push_back(m - i);
      return StrictPartition(v);
  }
  throw DomainError("unknown theorem");
}

QSeries lhs_weighted_sum(RppTheorem t, const RppParams& p, const Rational& a, const Rational& b,
                         int K, GfRoute route, bool reversed) {
  const StrictPartition lam = rpp_theorem_shape(t, p);
  const int n = p.n, r = p.r, d = p.m - 2 * n;
  QSeries total = QSeries::zero(K);

  auto accumulate = [&](std::vector<std::vector<int>> profiles, auto&& term) {
    if (reversed) std::reverse(profiles.begin(), profiles.end());
    QSeries s = QSeries::zero(K);
    for (const auto& v : profiles) s += term(Profile(v));
    return s;
  };

  if (!is_odd(t)) {
    const int x = r - 2 * d - 1;
    std::vector<std::vector<int>> idx;
    for (int k = 0; k < n; ++k) idx.push_back({2 * k, 2 * k + 1});
    auto groups = make_groups(lam, idx, std::vector<int>(static_cast<size_t>(n), x));
    return accumulate(enumerate_profiles(groups, 2 * n, 0, K), [&](const Profile& nu) {
      const long sh = dot(lam, nu.values());
      return omega_weight(nu, x, a, b, K, sh) * reduced_gf(lam, nu, K, route);
    });
  }

  const int x = r - 2 * d - 3, y = r - d - 1;
  for (int tt = 1; tt <= n; ++tt) {
    std::vector<std::vector<int>> idx;
    std::vector<int> add;
    for (int k = 1; k <= tt - 1; ++k) idx.push_back({2 * k - 2, 2 * k - 1}), add.push_back(x);
    idx.push_back({2 * tt - 2}), add.push_back(y);
    for (int k = tt; k <= n - 1; ++k) idx.push_back({2 * k - 1, 2 * k}), add.push_back(x);
    auto groups = make_groups(lam, idx, add);
    const long outer = static_cast<long>(r + 1) * (tt - 1);
    if (outer < 0)
      throw NonTruncatable("outer factor for t=" + std::to_string(tt) + " has q-power " +
                           std::to_string(outer));
    QSeries inner = accumulate(enumerate_profiles(groups, 2 * n - 1, outer, K), [&](const Profile& nu) {
      const long sh = dot(lam, nu.values()) + outer;
      return psi_weight(nu, tt, x, y, a, b, K, sh) * reduced_gf(lam, nu, K, route);
    });
    total += pow(a, tt - 1) * poch_ratio(b, 1, 2 * (tt - 1), K) * inner;
  }
  return total;
}

QSeries f_series(int i, int j, int r, const Rational& a, const Rational& b, int K) {
  if (i < 1) throw DomainError("f(i,j,r) series needs i >= 1");
  QSeries geo = QSeries::zero(K);  // (1 - q^{i-1}) / (1 - q)
  for (int k = 0; k <= i - 2; ++k) geo += QSeries::monomial(Rational(1), std::min(k, K + 1), K);
  QSeries t1 = mul_binomial(mul_binomial(geo, a, i + r - 1), a * b, i + j + r - 2);
  QSeries t2 = mul_binomial(QSeries::monomial(a * (Rational(1) - b), 2 * i + r - 3, K), Rational(1),
                            j - i + 1);
  return t1 + t2;
}

QSeries rhs_series(RppTheorem t, const RppParams& p, const Rational& a, const Rational& b, int K) {
  rpp_theorem_shape(t, p);  // range checks
  const int m = p.m, n = p.n, l = p.l, r = p.r;
  const Rational ab = a * b, one(1);
  auto Q = [&](const Rational& c, long e, long len) { return qpoch_mono(c, e, len, K); };
  auto fact = [&](long len) { return Q(one, 1, len); };  // (q;q)_len
  QSeries R = pow(qpoch_inf_series(ab, 2, K) / qpoch_inf_series(a, 1, K), n);

  switch (t) {
    case RppTheorem::GF:
      for (int k = 1; k <= 2 * n; ++k) R = R * fact(k - 1) / fact(k + m - 2 * n - 1);
      for (int k = 1; k <= n; ++k) R = R * Q(a, 1, 2 * k + r - 1) / Q(ab, 2, 2 * (k + n) + r - 3);
      return R;
    case RppTheorem::GF2:
      R = R * Q(one, l - m + 1, 2 * n - 1) / fact(l - 1) * Q(a, 1, l - m + 2 * n + r - 1) /
          Q(ab, 2, l - m + 4 * n + r - 3);
      for (int k = 1; k <= 2 * n - 1; ++k) R = R * fact(k - 1) / fact(k + m - 2 * n - 1);
      for (int k = 1; k <= n - 1; ++k) R = R * Q(a, 1, 2 * k + r - 1) / Q(ab, 2, 2 * (k + n) + r - 3);
      return R;
    case RppTheorem::GF3:
      R = R * Q(one, l - m, 1) * Q(one, l - m + 2, 2 * n - 2) / fact(l - 1) / fact(m - 1) *
          Q(a, 1, l - m + 2 * n + r - 1) * f_series(2 * n, l - m + 2 * n, r, a, b, K) /
          Q(ab, 4 * n + r - 3, 1) / Q(ab, 2, l - m + 4 * n + r - 2);
      for (int k = 1; k <= 2 * n - 1; ++k) R = R * fact(k - 1);
      for (int k = 1; k <= 2 * n - 2; ++k) R = R / fact(k + m - 2 * n - 1);
      for (int k = 1; k <= n - 1; ++k) R = R * Q(a, 1, 2 * k + r - 1) / Q(ab, 2, 2 * (k + n) + r - 3);
      return R;
    default:
      break;
  }

  // R_{n,r}(a,b;q)
  R = R * Q(a, 1, r) / Q(ab, 2, r);
  for (int k = 1; k <= n - 1; ++k)
    R = R * Q(a, 1, 2 * k + r) / Q(ab, 2, 4 * k + r - 1) / Q(ab, 2 * k + r, 2 * k - 1);

  switch (t) {
    case RppTheorem::Odd:
      for (int k = 1; k <= 2 * n - 1; ++k) R = R * fact(k - 1) / fact(k + m - 2 * n);
      return R;
    case RppTheorem::Odd2:
      R = R / fact(l - 1) * Q(one, l - m + 1, 2 * n - 2) * Q(a, 2 * n + r - 1, l - m) /
          fact(2 * n - 2) / Q(ab, 4 * n + r - 3, l - m);
      for (int k = 1; k <= 2 * n - 1; ++k) R = R * fact(k - 1);
      for (int k = 1; k <= 2 * n - 2; ++k) R = R / fact(k + m - 2 * n);
      return R;
    case RppTheorem::Odd3:
      R = R * f_series(2 * n - 1, l - m + 2 * n - 1, r, a, b, K) / fact(l - 1) / fact(m - 1) *
          Q(one, l - m, 1) * Q(one, l - m + 2, 2 * n - 3) * Q(a, 2 * n + r - 1, l - m) /
          fact(2 * n - 2) / Q(ab, 4 * n + r - 5, 1) / Q(ab, 4 * n + r - 3, l - m + 1);
      for (int k = 1; k <= 2 * n - 1; ++k) R = R * fact(k - 1);
      for (int k = 1; k <= 2 * n - 3; ++k) R = R / fact(k + m - 2 * n);
      return R;
    default:
      break;
  }
  throw DomainError("unknown theorem");
}

bool check_shifted_tableaux_gf(int m, int n, int r, const Rational& a, const Rational& b, int K) {
  if (m < 2 * n) throw DomainError("needs m >= 2n");
  const StrictPartition lam = StrictPartition::staircase(m, 2 * n);
  const int x = r - 2 * (m - 2 * n) - 1;
  const long C = static_cast<long>(m) * n + static_cast<long>(n) * (n - 2) * (4 * n - 1) / 3 +
                 static_cast<long>(n) * (n - 1) * r;
  const long lift = C < 0 ? -C : 0;

  // Left side: profiles mu = nu + eps with nu in P_n.
  std::vector<std::vector<int>> idx;
  for (int k = 0; k < n; ++k) idx.push_back({2 * k, 2 * k + 1});
  auto groups = make_groups(lam, idx, std::vector<int>(static_cast<size_t>(n), x));
  const long nl = lam.n_lambda();
  QSeries lhs = QSeries::zero(K);
  const long floor = nl + lift + static_cast<long>(x) * n * (n - 1);
  for (const auto& v : enumerate_profiles(groups, 2 * n, floor, K)) {
    Profile nu(v);
    std::vector<int> mu = nu.plus_staircase();
    const long base = dot(lam, mu);  // minimal degree of GF(T)
    QSeries w = omega_prime_weight(mu, x, a, b, K, base + lift);
    lhs += w * gf_tableaux_det(lam, mu, static_cast<int>(K + base)).unshifted(static_cast<int>(base));
  }

  const Rational ab = a * b, one(1);
  auto Q = [&](const Rational& c, long e, long len) { return qpoch_mono(c, e, len, K); };
  QSeries R = QSeries::monomial(pow(a, static_cast<long>(n) * (n - 1)),
                                static_cast<int>(std::min<long>(C + lift, K + 1)), K);
  R *= pow(qpoch_inf_series(ab, 2, K) / qpoch_inf_series(a, 1, K), n);
  for (int k = 1; k <= 2 * n; ++k) R = R / Q(one, 1, k + m - 2 * n - 1);
  for (int k = 1; k <= n - 1; ++k) R = R * Q(b, 1, 2 * k);
  for (int k = 1; k <= n; ++k)
    R = R * Q(one, 1, 2 * k - 1) * Q(a, 1, 2 * k + r - 1) / Q(ab, 2, 2 * (k + n) + r - 3);
  return lhs == R;
}

BinomExpansionSides binom_expansion_sides(int n, int s, int r, const Rational& a,
                                          const Rational& b, int K) {
  if (n < 1 || n > 2) throw DomainError("binomial expansion check needs 1 <= n <= 2");
  if (s < 1) throw DomainError("binomial expansion check needs s >= 1");
  if (r < 0) throw DomainError("binomial expansion check needs r >= 0");
  const int N2 = 2 * n;
  const Rational one(1);

  // t'_{i,j} = q^{(i-1) j} / (q;q)_{i+s-2}, the column factor q^{s mu_j} removed.
  std::vector<QSeries> inv_fact;
  for (int i = 1; i <= N2; ++i) {
    QSeries f = QSeries::one(K);
    for (int k = 1; k <= i + s - 2; ++k) f = div_binomial(f, one, k);
    inv_fact.push_back(f);
  }
  auto t_entry = [&](int i, long j) {
    const long e = static_cast<long>(i - 1) * j;
    return e > K ? QSeries::zero(K) : inv_fact[static_cast<size_t>(i - 1)].shifted(static_cast<int>(e));
  };
  // alpha'_j = (bq;q)_j/(q;q)_j (a q^{r+1})^j
  auto alpha = [&](long j) {
    const long e = static_cast<long>(r + 1) * j;
    if (e > K) return QSeries::zero(K);
    return QSeries::monomial(pow(a, j), static_cast<int>(e), K) * poch_ratio(b, 1, j, K);
  };

  BinomExpansionSides out;
  out.lhs = out.msf = out.subset_sum = out.rhs = QSeries::zero(K);

  // Direct sum over mu = (c1, c1+1, c2, c2+1, ...), c_{k+1} >= c_k + 2.
  std::vector<long> c;
  std::function<void(int, long)> rec = [&](int k, long lo) {
    if (k == n) {
      long deg = 0;
      for (long v : c) deg += (r + 1) * v;
      if (deg > K) return;
      std::vector<long> mu;
      for (long v : c) mu.push_back(v), mu.push_back(v + 1);
      Matrix<QSeries> M(N2, N2, QSeries::zero(K));
      for (int i = 1; i <= N2; ++i)
        for (int j = 0; j < N2; ++j) M(i - 1, j) = t_entry(i, mu[static_cast<size_t>(j)]);
      QSeries w = QSeries::one(K);
      for (long v : c) w *= alpha(v);
      out.lhs += w * det_laplace(M);
      return;
    }
    for (long v = lo; (r + 1) * v <= K; ++v) {
      c.push_back(v);
      rec(k + 1, v + 2);
      c.pop_back();
    }
  };
  rec(0, 0);

  // Minor summation over the columns 0..K+1; alpha'_j for j > K vanishes.
  const int cols = K + 2;
  if (cols <= 10) {
    Matrix<QSeries> T(N2, cols, QSeries::zero(K));
    for (int i = 1; i <= N2; ++i)
      for (int j = 0; j < cols; ++j) T(i - 1, j) = t_entry(i, j);
    auto B = tridiagonal_matrix<QSeries>(
        cols, [&](int i) { return alpha(i - 1); }, QSeries::zero(K));
    auto sides = minor_summation_sides(T, B);
    out.subset_sum = sides.lhs;
    out.msf = sides.rhs;
    out.msf_used = true;
  }

  // (-1)^n {(abq^2)_inf/(aq)_inf}^n prod 1/(q)_{k+s-2} Pf(a^i_j),
  // a^i_j = (q^{i-1} - q^{j-1}) (aq;q)_{i+j+r-2} / (abq^2;q)_{i+j+r-2}.
  auto A = SkewMatrix<QSeries>::from_upper(N2, QSeries::zero(K), [&](int i, int j) {
    QSeries d = QSeries::monomial(one, i - 1, K) - QSeries::monomial(one, j - 1, K);
    return d * qpoch_mono(a, 1, i + j + r - 2, K) / qpoch_mono(a * b, 2, i + j + r - 2, K);
  });
  QSeries rhs = pow(qpoch_inf_series(a * b, 2, K) / qpoch_inf_series(a, 1, K), n) * pf_expansion(A);
  for (int k = 1; k <= N2; ++k) rhs = rhs / qpoch_mono(one, 1, k + s - 2, K);
  if (n % 2) rhs = -rhs;
  out.rhs = rhs;
  return out;
}

bool check_binom_expansion(int n, int s, int r, const Rational& a, const Rational& b, int K) {
  return binom_expansion_sides(n, s, r, a, b, K).equal();
}

std::string series_str(const QSeries& f) {
  std::string s = "[";
  for (int t = 0; t <= f.order(); ++t) s += (t ? "," : "") + f[t].str();
  return s + "]";
}

std::vector<VerificationReport> verify_rpp_theorem(RppTheorem t, const RppParams& p, int K,
                                                   int trials, std::uint64_t seed,
                                                   std::optional<Rational> a,
                                                   std::optional<Rational> b) {
  const StrictPartition lam = rpp_theorem_shape(t, p);
  const bool uses_l = t == RppTheorem::GF2 || t == RppTheorem::GF3 || t == RppTheorem::Odd2 ||
                      t == RppTheorem::Odd3;
  Assignment ints;
  if (uses_l) ints.emplace_back("l", std::to_string(p.l));
  ints.emplace_back("m", std::to_string(p.m));
  ints.emplace_back("n", std::to_string(p.n));
  ints.emplace_back("r", std::to_string(p.r));
  ints.emplace_back("K", std::to_string(K));
  const std::vector<ScalarSpec> specs{{"a", a}, {"b", b}};
  const bool brute = lam.cells() <= kBruteCells && K <= kBruteOrder;
  const std::string id = rpp_theorem_name(t);
  std::vector<VerificationReport> out;
  for (int i = 0; i < trials; ++i) {
    out.push_back(run_trial(id, ints, specs, seed, i, [&](const Point& pt, VerificationReport& rep) {
      const Rational& av = pt["a"];
      const Rational& bv = pt["b"];
      QSeries lhs = lhs_weighted_sum(t, p, av, bv, K);
      QSeries rhs = rhs_series(t, p, av, bv, K);
      rep.lhs = series_str(lhs);
      rep.rhs = series_str(rhs);
      rep.equal = lhs == rhs;
      if (brute) {
        QSeries alt = lhs_weighted_sum(t, p, av, bv, K, GfRoute::BruteForce, true);
        rep.cross_check = alt == lhs;
        if (!rep.cross_check) rep.detail = "enumerated GF(R) disagrees with the determinant route";
      } else {
        rep.detail = "shape too large for the enumeration cross-check";
      }
    }));
  }
  return out;
}

}  // namespace pfq
