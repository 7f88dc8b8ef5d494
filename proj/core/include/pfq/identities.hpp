#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfq/decomp.hpp"
#include "pfq/report.hpp"

namespace pfq {

// Pfaffian identities over A (1-based), over A-tilde (0-based, border a^0_j)
// and over A-check (0-based, the second border row).
enum class IdentityId {
  PfSpecial,
  PfGeneral1,
  PfGeneral2,
  PfByproduct,
  PfGeneral3,
  PfGeneral4,
  PfByproductB,
  PfGeneralB3,
  PfGeneralB4,
  RfVer,
  CatalanPf,
  CentralBinomialPf,
  LaguerrePf,
  HermitePf,
  ConjASC1,
  ConjASC2,
  ConjMotzkin,
  ConjDelannoy,
  ConjSchroeder,
  ConjNarayana,
  ConjASM,
  DecompClosedForm,
  DecompClosedFormTilde,
  QDougall,
  SumKOdd,
  SumKEven,
  SumAdd,
  SumSubtract,
  SumQV4,
};

std::string identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);
std::vector<IdentityId> all_identities();

// Scalars an identity is sampled over, e.g. {"a","b","q"}; empty for the
// integer-valued ones, which run a single exact trial.
std::vector<std::string> identity_scalars(IdentityId id);
// Integer parameters it reads from IdentityParams, in report order.
std::vector<std::string> identity_integers(IdentityId id);

struct IdentityParams {
  int n = 1, r = 0, m = 0, l = 0, i = 1, j = 1;
  // Pinned scalars; anything unset is sampled.
  std::optional<Rational> a, b, q, c, d, alpha, beta;
};

enum class Parity { A, ATilde };

// Matrix entries.
Rational entry_a(int i, int j, const Rational& a, const Rational& b, const Rational& q, int r);
Rational entry_a0(int j, const Rational& a, const Rational& b, const Rational& q, int r);
// 0-based entries of A-tilde and A-check.
Rational entry_tilde(int i, int j, const Rational& a, const Rational& b, const Rational& q, int r);
Rational entry_check(int i, int j, const Rational& a, const Rational& b, const Rational& q, int r);

// f(i,j,r) as two summands, and as a division-free polynomial in q.
Rational f_poly(int i, int j, int r, const Rational& a, const Rational& b, const Rational& q);
Rational f_poly_expanded(int i, int j, int r, const Rational& a, const Rational& b,
                         const Rational& q);

Rational t_formula(int i, const Rational& a, const Rational& b, const Rational& q, int r);
Rational o_formula(int i, int j, const Rational& a, const Rational& b, const Rational& q, int r);
Rational e_formula(int i, int j, const Rational& a, const Rational& b, const Rational& q, int r);
// A: odd i -> o, even i -> e, 1-based. ATilde: even i -> o, odd i -> e,
// 0-based, with the diagonal blocks and everything below them fixed to the
// J2 pattern and 0 (the formulas are 0/0 in column 0).
Rational v_formula(int i, int j, const Rational& a, const Rational& b, const Rational& q, int r,
                   Parity rule);

Rational rhs_closed_form(IdentityId id, const IdentityParams& p);
// Independent second transcription (decomposition products, rising-factorial
// forms, case-split exponents).
Rational rhs_alternate(IdentityId id, const IdentityParams& p);
RSkew lhs_matrix(IdentityId id, const IdentityParams& p);
Rational lhs_pfaffian(IdentityId id, const IdentityParams& p);

// Builds T and V from the closed forms on the leading window and compares
// tV T V with the matrix entrywise; also checks the block structure of V.
VerificationReport verify_decomposition_closed_form(Parity variant, int n, const Rational& a,
                                                    const Rational& b, const Rational& q, int r);

// g_k as printed and in the rearranged form used for the q-Dougall step.
Rational g_k(int k, int i, int j, const Rational& a, const Rational& b, const Rational& q);
Rational g_k_rearranged(int k, int i, int j, const Rational& a, const Rational& b,
                        const Rational& q);
Rational sum_term(int k, int i, int j, const Rational& a, const Rational& b, const Rational& q);
Rational sum_rhs(int i, int j, const Rational& a, const Rational& b, const Rational& q);

VerificationReport verify_sum_identity(IdentityId id, int i, int j, const Rational& a,
                                       const Rational& b, const Rational& q);
VerificationReport verify_qdougall(int i, int j, int m, const Rational& a, const Rational& b,
                                   const Rational& q);

Rational qv4_term(int k, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                  const Rational& q);
Rational qv4_rhs(int m, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                 const Rational& q);
VerificationReport verify_qv4(int m, const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d, const Rational& q);

// One report per trial; integer-valued identities run one trial.
std::vector<VerificationReport> verify(IdentityId id, const IdentityParams& p, int trials,
                                       std::uint64_t seed);

}  // namespace pfq
