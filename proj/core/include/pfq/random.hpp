#pragma once

#include <cstdint>
#include <functional>

#include "pfq/rational.hpp"

namespace pfq {

// splitmix64; trial streams are derived from (seed, index) so any trial can be
// replayed on its own.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng for_trial(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  // Uniform in [lo, hi], rejection sampled so results do not depend on the
  // standard library implementation.
  long uniform(long lo, long hi);

 private:
  std::uint64_t state_;
};

// p/s with 1 <= |p| <= bound, 1 <= s <= bound, not rejected by `exclude`.
Rational sample_rational(Rng& rng, long bound,
                         const std::function<bool(const Rational&)>& exclude = {},
                         int budget = 1000);

}  // namespace pfq
