#include "pfq/sequences.hpp"

#include <array>
#include <utility>

#include "pfq/qkit.hpp"

namespace pfq {

namespace {

constexpr std::array<std::pair<SeqKind, const char*>, 11> kNames{{
    {SeqKind::LittleQJacobi, "little-q-jacobi"},
    {SeqKind::Catalan, "catalan"},
    {SeqKind::CentralBinomial, "central-binomial"},
    {SeqKind::Laguerre, "laguerre"},
    {SeqKind::Hermite, "hermite"},
    {SeqKind::Motzkin, "motzkin"},
    {SeqKind::CentralDelannoy, "central-delannoy"},
    {SeqKind::Schroeder, "schroeder"},
    {SeqKind::Narayana, "narayana"},
    {SeqKind::AlSalamCarlitz, "al-salam-carlitz"},
    {SeqKind::ThreeHalvesCatalan, "three-halves-catalan"},
}};

void require_nonneg(const SequenceKind& s, long n) {
  if (n < 0)
    throw DomainError(kind_name(s.kind) + " is undefined at index " + std::to_string(n));
}

Rational catalan(long k) { return binomial(2 * k, k) / Rational(k + 1); }

}  // namespace

SequenceKind SequenceKind::little_q_jacobi(Rational a, Rational b, Rational q) {
  SequenceKind s;
  s.kind = SeqKind::LittleQJacobi;
  s.a = std::move(a);
  s.b = std::move(b);
  s.q = std::move(q);
  return s;
}

SequenceKind SequenceKind::laguerre(Rational alpha) {
  SequenceKind s;
  s.kind = SeqKind::Laguerre;
  s.alpha = std::move(alpha);
  return s;
}

SequenceKind SequenceKind::narayana(Rational a) {
  SequenceKind s;
  s.kind = SeqKind::Narayana;
  s.a = std::move(a);
  return s;
}

SequenceKind SequenceKind::al_salam_carlitz(Rational a, Rational q) {
  SequenceKind s;
  s.kind = SeqKind::AlSalamCarlitz;
  s.a = std::move(a);
  s.q = std::move(q);
  return s;
}

SequenceKind SequenceKind::plain(SeqKind k) {
  SequenceKind s;
  s.kind = k;
  return s;
}

std::string kind_name(SeqKind k) {
  for (const auto& [kind, name] : kNames)
    if (kind == k) return name;
  return "unknown";
}

std::optional<SeqKind> kind_from_name(const std::string& name) {
  for (const auto& [kind, n] : kNames)
    if (name == n) return kind;
  return std::nullopt;
}

std::vector<std::string> kind_names() {
  std::vector<std::string> v;
  for (const auto& [kind, name] : kNames) v.emplace_back(name);
  return v;
}

Rational binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational moment(const SequenceKind& s, long n) {
  switch (s.kind) {
    case SeqKind::LittleQJacobi:
      return qpoch(s.a * s.q, s.q, n) / qpoch(s.a * s.b * s.q * s.q, s.q, n);
    case SeqKind::Catalan:
      require_nonneg(s, n);
      return catalan(n);
    case SeqKind::CentralBinomial:
      require_nonneg(s, n);
      return binomial(2 * n, n);
    case SeqKind::Laguerre:
      return rising(s.alpha + Rational(1), n);
    case SeqKind::Hermite: {
      require_nonneg(s, n);
      Rational p(1);
      for (long k = 0; k <= n; ++k) p *= Rational(2 * k + 1);
      return p;
    }
    case SeqKind::Motzkin: {
      require_nonneg(s, n);
      Rational sum;
      for (long k = 0; 2 * k <= n; ++k) sum += binomial(n, 2 * k) * catalan(k);
      return sum;
    }
    case SeqKind::CentralDelannoy: {
      require_nonneg(s, n);
      Rational sum;
      for (long k = 0; k <= n; ++k) sum += binomial(n, k) * binomial(n + k, k);
      return sum;
    }
    case SeqKind::Schroeder: {
      require_nonneg(s, n);
      Rational sum;
      for (long k = 0; k <= n; ++k) sum += binomial(n + k, 2 * k) * catalan(k);
      return sum;
    }
    case SeqKind::Narayana: {
      require_nonneg(s, n);
      if (n == 0) return Rational(1);
      Rational sum;
      for (long k = 1; k <= n; ++k)
        sum += binomial(n, k) * binomial(n, k - 1) * pow(s.a, k) / Rational(n);
      return sum;
    }
    case SeqKind::AlSalamCarlitz: {
      if (n == -1) return Rational(0);
      require_nonneg(s, n);
      Rational sum;
      for (long k = 0; k <= n; ++k) sum += qbinom(n, k, s.q) * pow(s.a, k);
      return sum;
    }
    case SeqKind::ThreeHalvesCatalan:
      require_nonneg(s, n);
      return binomial(3 * n, n) / Rational(2 * n + 1);
  }
  throw DomainError("unknown sequence kind");
}

RSkew moment_matrix(const SequenceKind& s, int size, int r, OffsetRule offset, WeightRule weight) {
  if (weight == WeightRule::QPowerDiff && !s.has_q())
    throw DomainError("q-power weight needs a sequence with a q parameter");
  int shift = 0;
  switch (offset) {
    case OffsetRule::IPlusJPlusRMinus2: shift = r - 2; break;
    case OffsetRule::IPlusJMinus3: shift = -3; break;
    case OffsetRule::IPlusJMinus2: shift = -2; break;
    case OffsetRule::IPlusJMinus1: shift = -1; break;
  }
  return RSkew::from_upper(size, Rational(0), [&](int i, int j) {
    Rational w = weight == WeightRule::JMinusI ? Rational(j - i)
                                               : pow(s.q, i - 1) - pow(s.q, j - 1);
    try {
      return w * moment(s, i + j + shift);
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " at (i,j,r) = (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(r) + ")");
    }
  });
}

}  // namespace pfq
