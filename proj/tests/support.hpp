#pragma once

#include <vector>

#include "pfq/decomp.hpp"
#include "pfq/qseries.hpp"
#include "pfq/random.hpp"
#include "pfq/report.hpp"

namespace pfq::test {

inline QSeries series_of(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QSeries(std::move(v));
}

inline QSeries random_series(Rng& rng, int K, long bound = 9) {
  std::vector<Rational> v;
  for (int t = 0; t <= K; ++t) v.push_back(rat(rng.uniform(-bound, bound), rng.uniform(1, 4)));
  return QSeries(std::move(v));
}

// Nonzero-ish random rational, any sign.
inline Rational random_rational(Rng& rng, long bound = 9) { return sample_rational(rng, bound); }

// Avoids 0 and +-1 like the verification drivers do.
inline Rational generic_rational(Rng& rng) {
  return sample_rational(rng, kSampleBound, degenerate_scalar);
}

inline RSkew random_skew(Rng& rng, int n, long bound = 9) {
  return RSkew::from_upper(n, Rational(0), [&](int, int) {
    return rat(rng.uniform(-bound, bound), rng.uniform(1, 3));
  });
}

inline RMatrix random_matrix(Rng& rng, int rows, int cols, long bound = 9) {
  RMatrix m(rows, cols, Rational(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rat(rng.uniform(-bound, bound), rng.uniform(1, 3));
  return m;
}

}  // namespace pfq::test
