#include "pfq/telescope.hpp"

#include <array>
#include <utility>

#include "pfq/qkit.hpp"

namespace pfq {

namespace {

using R = Rational;

constexpr std::array<std::pair<AppendixCheck, const char*>, 4> kNames{{
    {AppendixCheck::Gosper, "appendix-gosper"},
    {AppendixCheck::Ratio, "appendix-ratio"},
    {AppendixCheck::Recurrence, "appendix-recurrence"},
    {AppendixCheck::Telescoped, "appendix-telescoped"},
}};

R qp(const R& a, const R& q, long n) { return qpoch(a, q, n); }

R one_minus(const R& x) { return R(1) - x; }

// The j-independent part of F(j,k) apart from q^{j(k-1)}.
R common(int k, const CertScalars& s) {
  const auto& [a, b, c, q] = s;
  return pow(a * c, k - 1) * q * qp(a * b * q * q, q, k - 2) * qp(b * q, q, k - 1) *
         qp(q / c, q, k - 1) / (qp(q, q, k) * qp(a * q, q, k) * qp(a * b * c * q, q, k));
}

}  // namespace

int parity_index(CertParity x, int k) { return x == CertParity::Odd ? 2 * k - 1 : 2 * k - 2; }

R h_eval(int k, int j, const CertScalars& s) {
  const auto& [a, b, c, q] = s;
  const R ab = a * b;
  return one_minus(pow(q, k)) * one_minus(a * pow(q, k)) *
             (pow(q, -k) * (R(1) + ab * pow(q, 2 * k)) * (R(1) + ab * c * pow(q, j - 1)) -
              ab * (R(1) + q) * (c / q + pow(q, j - 1))) +
         a * pow(q, k - 1) * (R(1) - b) * one_minus(c * pow(q, -k)) * one_minus(pow(q, j - k)) *
             one_minus(ab * pow(q, 2 * k + 1));
}

R F_eval(int j, int k, const CertScalars& s) {
  const auto& [a, b, c, q] = s;
  const R ab = a * b;
  return pow(a, k - 1) * pow(c, k - 1) * pow(q, static_cast<long>(j) * (k - 1) + 1) *
         qp(ab * pow(q, 2 * k), q, 1) * qp(ab * q * q, q, k - 2) * qp(b * q, q, k - 1) *
         qp(q / c, q, k - 1) * qp(pow(q, 1 - j), q, k - 1) /
         (qp(q, q, k) * qp(a * q, q, k) * qp(ab * c * q, q, k) * qp(ab * pow(q, j + 1), q, k)) *
         h_eval(k, j, s);
}

R rho(int j, const CertScalars& s) {
  const auto& [a, b, c, q] = s;
  return one_minus(a * pow(q, j)) * one_minus(a * b * c * pow(q, j)) /
         (one_minus(a * b * pow(q, j + 1)) * one_minus(a * c * pow(q, j - 1)));
}

R T_eval(int j, int k, const CertScalars& s) { return F_eval(j, k, s) - rho(j, s) * F_eval(j + 1, k, s); }

R T_factored(int j, int k, const CertScalars& s) {
  const auto& [a, b, c, q] = s;
  return common(k, s) * pow(q, static_cast<long>(j) * (k - 1)) * qp(pow(q, 1 - j), q, k - 2) *
         R_eval(j, k, s) / qp(a * b * pow(q, j + 1), q, k + 1);
}

R P_eval(int j, int k, const CertScalars& s) {
  const auto& [a, b, c, q] = s;
  const R ab = a * b;
  return a * a * c * c * pow(q, 2 * j) * one_minus(ab * pow(q, k)) * one_minus(ab * pow(q, k + 1)) *
         one_minus(b * pow(q, k)) * one_minus(b * pow(q, k + 1)) * one_minus(pow(q, k) / c) *
         one_minus(pow(q, k + 1) / c) * one_minus(pow(q, k - j - 1)) * one_minus(pow(q, k - j));
}

R Q_eval(int j, int k, const CertScalars& s) {
  const auto& [a, b, c, q] = s;
  const R abc = a * b * c, ab = a * b;
  return one_minus(pow(q, k + 1)) * one_minus(pow(q, k + 2)) * one_minus(a * pow(q, k + 1)) *
         one_minus(a * pow(q, k + 2)) * one_minus(abc * pow(q, k + 1)) * one_minus(abc * pow(q, k + 2)) *
         one_minus(ab * pow(q, j + k + 2)) * one_minus(ab * pow(q, j + k + 3));
}

R R_eval(int j, int k, const CertScalars& s) {
  const auto& [a, b, c, q] = s;
  const R ab = a * b;
  return one_minus(ab * pow(q, 2 * k)) *
         (one_minus(ab * pow(q, j + k + 1)) * one_minus(pow(q, k - j - 1)) * h_eval(k, j, s) -
          pow(q, k - 1) * rho(j, s) * one_minus(ab * pow(q, j + 1)) * one_minus(pow(q, -j)) *
              h_eval(k, j + 1, s));
}

R X_eval(int j, int k, const CertScalars& s) {
  return -pow(s.q, -k) / one_minus(s.a * s.c * pow(s.q, j - 1));
}

R X_literal(int j, int k, const CertScalars& s) {
  return inverse(pow(s.q, k) * (s.a * s.c * pow(s.q, j - 1) - R(1)));
}

namespace {

R X_maybe(int j, int k, const CertScalars& s, bool perturb) {
  R x = X_eval(j, k, s);
  return perturb ? x * s.q : x;
}

R lambda_impl(int j, int k, const CertScalars& s, CertParity x, bool perturb) {
  const int kk = parity_index(x, k);
  const R r = R_eval(j, kk, s);
  if (r.is_zero()) throw SkippedPoint("R vanishes where Lambda is formed");
  return Q_eval(j, parity_index(x, k - 1), s) * T_eval(j, kk, s) / r * X_maybe(j, kk, s, perturb);
}

}  // namespace

R Lambda_eval(int j, int k, const CertScalars& s, CertParity x) { return lambda_impl(j, k, s, x, false); }

bool check_gosper(const CertPoint& p, bool perturb) {
  const int k0 = parity_index(p.parity, p.k - 1), k1 = parity_index(p.parity, p.k),
            k2 = parity_index(p.parity, p.k + 1);
  return P_eval(p.j, k1, p.s) * X_maybe(p.j, k2, p.s, perturb) -
             Q_eval(p.j, k0, p.s) * X_maybe(p.j, k1, p.s, perturb) ==
         R_eval(p.j, k1, p.s);
}

bool check_ratio(const CertPoint& p) {
  const int k1 = parity_index(p.parity, p.k), k2 = parity_index(p.parity, p.k + 1);
  const R t1 = T_eval(p.j, k1, p.s), r1 = R_eval(p.j, k1, p.s);
  const R q1 = Q_eval(p.j, k1, p.s);
  if (t1.is_zero() || r1.is_zero() || q1.is_zero()) throw SkippedPoint("T, Q or R vanishes");
  return T_eval(p.j, k2, p.s) / t1 == P_eval(p.j, k1, p.s) / q1 * (R_eval(p.j, k2, p.s) / r1);
}

bool check_recurrence(const CertPoint& p, bool perturb) {
  const R t = T_eval(p.j, parity_index(p.parity, p.k), p.s);
  return t == lambda_impl(p.j, p.k + 1, p.s, p.parity, perturb) -
                  lambda_impl(p.j, p.k, p.s, p.parity, perturb);
}

bool check_lambda_base(int j, const CertScalars& s, CertParity x) {
  return Lambda_eval(j, 1, s, x).is_zero();
}

R telescoped_sum(int j, const CertScalars& s, CertParity x) {
  R sum;
  for (int k = 1; k <= j + 2; ++k) sum += F_eval(j, parity_index(x, k), s);
  return sum;
}

R telescoped_closed_form(int j, const CertScalars& s) {
  const auto& [a, b, c, q] = s;
  return qp(a * c, q, j - 1) * qp(a * b * q * q, q, j - 1) /
         (qp(a * q, q, j - 1) * qp(a * b * c * q, q, j - 1));
}

bool check_telescoped_identity(int j, const CertScalars& s, CertParity x) {
  return telescoped_sum(j, s, x) == telescoped_closed_form(j, s);
}

std::string appendix_name(AppendixCheck c) {
  for (const auto& [k, n] : kNames)
    if (k == c) return n;
  return "unknown";
}

std::optional<AppendixCheck> appendix_from_name(const std::string& name) {
  for (const auto& [k, n] : kNames)
    if (name == n) return k;
  return std::nullopt;
}

std::vector<AppendixCheck> all_appendix_checks() {
  std::vector<AppendixCheck> v;
  for (const auto& [k, n] : kNames) v.push_back(k);
  return v;
}

std::vector<VerificationReport> verify_appendix(AppendixCheck which, const AppendixParams& p,
                                                int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (p.max_j < 1 || p.max_k < 1) throw DomainError("max_j and max_k must be >= 1");
  const std::vector<ScalarSpec> specs{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"q", p.q}};
  const std::string name = appendix_name(which);
  std::vector<VerificationReport> out;
  for (int t = 0; t < trials; ++t) {
    const CertParity x = t % 2 ? CertParity::Even : CertParity::Odd;
    out.push_back(run_trial(name, {}, specs, seed, t,
                            [&](const Point& pt, VerificationReport& rep, Rng& rng) {
      CertPoint cp;
      cp.s = {pt["a"], pt["b"], pt["c"], pt["q"]};
      cp.parity = x;
      cp.j = static_cast<int>(rng.uniform(1, p.max_j));
      cp.k = static_cast<int>(rng.uniform(1, p.max_k));
      rep.params.emplace_back("j", std::to_string(cp.j));
      if (which != AppendixCheck::Telescoped) rep.params.emplace_back("k", std::to_string(cp.k));
      rep.params.emplace_back("parity", x == CertParity::Odd ? "o" : "e");
      const int kk = parity_index(x, cp.k);
      switch (which) {
        case AppendixCheck::Gosper: {
          const int k0 = parity_index(x, cp.k - 1), k2 = parity_index(x, cp.k + 1);
          const R xm = p.perturb ? cp.s.q : R(1);
          R lhs = P_eval(cp.j, kk, cp.s) * X_eval(cp.j, k2, cp.s) * xm -
                  Q_eval(cp.j, k0, cp.s) * X_eval(cp.j, kk, cp.s) * xm;
          R rhs = R_eval(cp.j, kk, cp.s);
          rep.lhs = lhs.str();
          rep.rhs = rhs.str();
          rep.equal = lhs == rhs;
          rep.cross_check = X_eval(cp.j, kk, cp.s) == X_literal(cp.j, kk, cp.s);
          if (!rep.cross_check) rep.detail = "two transcriptions of X disagree";
          break;
        }
        case AppendixCheck::Ratio: {
          const bool ok = check_ratio(cp);
          const int k2 = parity_index(x, cp.k + 1);
          R lhs = T_eval(cp.j, k2, cp.s) * Q_eval(cp.j, kk, cp.s) * R_eval(cp.j, kk, cp.s);
          R rhs = T_eval(cp.j, kk, cp.s) * P_eval(cp.j, kk, cp.s) * R_eval(cp.j, k2, cp.s);
          rep.lhs = lhs.str();
          rep.rhs = rhs.str();
          rep.equal = ok;
          rep.cross_check = T_eval(cp.j, kk, cp.s) == T_factored(cp.j, kk, cp.s);
          if (!rep.cross_check) rep.detail = "factored T disagrees";
          break;
        }
        case AppendixCheck::Recurrence: {
          R lhs = T_eval(cp.j, kk, cp.s);
          R rhs = lambda_impl(cp.j, cp.k + 1, cp.s, x, p.perturb) -
                  lambda_impl(cp.j, cp.k, cp.s, x, p.perturb);
          rep.lhs = lhs.str();
          rep.rhs = rhs.str();
          rep.equal = lhs == rhs;
          rep.cross_check = check_lambda_base(cp.j, cp.s, x);
          if (!rep.cross_check) rep.detail = "Lambda(j,1) != 0";
          break;
        }
        case AppendixCheck::Telescoped: {
          R lhs = telescoped_sum(cp.j, cp.s, x);
          R rhs = telescoped_closed_form(cp.j, cp.s);
          rep.lhs = lhs.str();
          rep.rhs = rhs.str();
          rep.equal = lhs == rhs;
          rep.cross_check = lhs == rho(cp.j, cp.s) * telescoped_sum(cp.j + 1, cp.s, x);
          if (!rep.cross_check) rep.detail = "sum over F(j,.) is not rho(j) times sum over F(j+1,.)";
          break;
        }
      }
    }));
  }
  return out;
}

}  // namespace pfq
