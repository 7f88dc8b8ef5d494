#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfq/report.hpp"

namespace pfq {

enum class CertParity { Odd, Even };

struct CertScalars {
  Rational a, b, c, q;
};

// k is the parity-selected index: (o) reads raw index 2k-1, (e) reads 2k-2.
struct CertPoint {
  int j = 1;
  int k = 1;
  CertScalars s;
  CertParity parity = CertParity::Odd;
};

int parity_index(CertParity x, int k);

// Raw-index evaluators.
Rational h_eval(int k, int j, const CertScalars& s);
Rational F_eval(int j, int k, const CertScalars& s);
Rational T_eval(int j, int k, const CertScalars& s);
// T from the common factor of F(j,k) and F(j+1,k) times R(j,k).
Rational T_factored(int j, int k, const CertScalars& s);
Rational P_eval(int j, int k, const CertScalars& s);
Rational Q_eval(int j, int k, const CertScalars& s);
Rational R_eval(int j, int k, const CertScalars& s);
Rational X_eval(int j, int k, const CertScalars& s);
Rational X_literal(int j, int k, const CertScalars& s);
// Lambda(j,k) at parity-selected k.
Rational Lambda_eval(int j, int k, const CertScalars& s, CertParity x);

// The ratio between the two sums: sum F(j,.) = rho(j) sum F(j+1,.).
Rational rho(int j, const CertScalars& s);
Rational telescoped_sum(int j, const CertScalars& s, CertParity x);
Rational telescoped_closed_form(int j, const CertScalars& s);

// Checkers. ratio/recurrence throw SkippedPoint when a guard denominator
// vanishes. `perturb` multiplies X by q (negative control).
bool check_gosper(const CertPoint& p, bool perturb = false);
bool check_ratio(const CertPoint& p);
bool check_recurrence(const CertPoint& p, bool perturb = false);
bool check_lambda_base(int j, const CertScalars& s, CertParity x);
bool check_telescoped_identity(int j, const CertScalars& s, CertParity x);

enum class AppendixCheck { Gosper, Ratio, Recurrence, Telescoped };

std::string appendix_name(AppendixCheck c);
std::optional<AppendixCheck> appendix_from_name(const std::string& name);
std::vector<AppendixCheck> all_appendix_checks();

struct AppendixParams {
  int max_j = 8;
  int max_k = 10;
  bool perturb = false;
  std::optional<Rational> a, b, c, q;
};

// Per trial: (a,b,c,q), j in [1,max_j], k in [1,max_k]; parity alternates
// with the trial index.
std::vector<VerificationReport> verify_appendix(AppendixCheck which, const AppendixParams& p,
                                                int trials, std::uint64_t seed);

}  // namespace pfq
