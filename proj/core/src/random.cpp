#include "pfq/random.hpp"

#include "pfq/error.hpp"

namespace pfq {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng Rng::for_trial(std::uint64_t seed, std::uint64_t index) {
  return Rng(mix(seed ^ mix(index + 0x632be59bd9b4e019ULL)));
}

std::uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Rational sample_rational(Rng& rng, long bound, const std::function<bool(const Rational&)>& exclude,
                         int budget) {
  if (bound < 2) throw DomainError("sample bound must be >= 2");
  for (int attempt = 0; attempt < budget; ++attempt) {
    long p = rng.uniform(1, bound);
    if (rng.uniform(0, 1)) p = -p;
    long s = rng.uniform(1, bound);
    Rational x = rat(p, s);
    if (!exclude || !exclude(x)) return x;
  }
  throw Error("sample_rational: retry budget exhausted");
}

}  // namespace pfq
