#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfq/decomp.hpp"

namespace pfq {

enum class SeqKind {
  LittleQJacobi,
  Catalan,
  CentralBinomial,
  Laguerre,
  Hermite,
  Motzkin,
  CentralDelannoy,
  Schroeder,
  Narayana,
  AlSalamCarlitz,
  ThreeHalvesCatalan,
};

// Tagged sequence with the scalar parameters its kind uses; unused ones stay 0.
struct SequenceKind {
  SeqKind kind = SeqKind::Catalan;
  Rational a, b, q, alpha;

  static SequenceKind little_q_jacobi(Rational a, Rational b, Rational q);
  static SequenceKind laguerre(Rational alpha);
  static SequenceKind narayana(Rational a);
  static SequenceKind al_salam_carlitz(Rational a, Rational q);
  static SequenceKind plain(SeqKind k);

  bool has_q() const { return kind == SeqKind::LittleQJacobi || kind == SeqKind::AlSalamCarlitz; }
};

std::string kind_name(SeqKind k);
std::optional<SeqKind> kind_from_name(const std::string& name);
std::vector<std::string> kind_names();

Rational binomial(long n, long k);  // 0 outside 0 <= k <= n

Rational moment(const SequenceKind& s, long n);

enum class OffsetRule { IPlusJPlusRMinus2, IPlusJMinus3, IPlusJMinus2, IPlusJMinus1 };
enum class WeightRule { JMinusI, QPowerDiff };

// Entry (i,j), i<j: weight(i,j) * moment(i + j + offset). The q-weight uses
// the sequence's own q.
RSkew moment_matrix(const SequenceKind& s, int size, int r, OffsetRule offset, WeightRule weight);

}  // namespace pfq
