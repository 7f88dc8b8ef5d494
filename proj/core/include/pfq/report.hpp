#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pfq/error.hpp"
#include "pfq/random.hpp"

namespace pfq {

using Assignment = std::vector<std::pair<std::string, std::string>>;

struct VerificationReport {
  std::string id;
  Assignment params;  // integers and sampled scalars, as strings
  std::string lhs, rhs;
  bool equal = false;        // lhs - rhs == 0 exactly
  bool cross_check = true;   // secondary routes agree (true when there are none)
  std::string detail;        // which secondary check failed, or a boundary note
  long trial = 0;
  bool skipped = false;      // every retry hit a pole
  int resampled = 0;         // points redrawn because of a pole or a vanishing guard
  double elapsed_ms = 0;

  bool passed() const { return !skipped && equal && cross_check; }
};

// A named scalar drawn per trial unless pinned.
struct ScalarSpec {
  std::string name;
  std::optional<Rational> fixed;
};

// Values of the scalars for one trial, in ScalarSpec order.
class Point {
 public:
  void set(const std::string& name, Rational v) { v_.emplace_back(name, std::move(v)); }
  const Rational& operator[](const std::string& name) const;
  const std::vector<std::pair<std::string, Rational>>& values() const { return v_; }

 private:
  std::vector<std::pair<std::string, Rational>> v_;
};

inline constexpr long kSampleBound = 7;
inline constexpr int kPoleRetries = 200;

// Rejects 0 and +-1, which make most q-products degenerate.
bool degenerate_scalar(const Rational& x);

Point draw_point(Rng& rng, const std::vector<ScalarSpec>& specs);

// Runs `eval(point, report)` at a point drawn from Rng::for_trial(seed, index),
// redrawing while the evaluation hits a pole. With every scalar pinned the
// trial is reported as skipped instead. An eval taking a third Rng& argument
// may draw further (integer) coordinates from the same stream.
template <class Eval>
VerificationReport run_trial(const std::string& id, const Assignment& ints,
                             const std::vector<ScalarSpec>& specs, std::uint64_t seed,
                             long index, Eval&& eval) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(index));
  bool all_fixed = true;
  for (const auto& s : specs) all_fixed = all_fixed && s.fixed.has_value();
  const int budget = all_fixed ? 1 : kPoleRetries;
  int resampled = 0;
  for (int attempt = 0;; ++attempt) {
    Point p = draw_point(rng, specs);
    rep = VerificationReport{};
    rep.id = id;
    rep.trial = index;
    rep.params = ints;
    for (const auto& [name, v] : p.values()) rep.params.emplace_back(name, v.str());
    try {
      if constexpr (std::is_invocable_v<Eval, const Point&, VerificationReport&, Rng&>)
        eval(p, rep, rng);
      else
        eval(p, rep);
      break;
    } catch (const PoleError& e) {
      ++resampled;
      if (attempt + 1 >= budget) {
        if (!all_fixed) throw Error(id + ": pole-avoidance retry budget exhausted");
        rep.skipped = true;
        rep.detail = e.what();
        break;
      }
    }
  }
  rep.resampled = resampled;
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace pfq
