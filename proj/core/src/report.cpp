#include "pfq/report.hpp"

namespace pfq {

const Rational& Point::operator[](const std::string& name) const {
  for (const auto& [n, v] : v_)
    if (n == name) return v;
  throw DomainError("point has no scalar named " + name);
}

bool degenerate_scalar(const Rational& x) {
  return x.is_zero() || x == Rational(1) || x == Rational(-1);
}

Point draw_point(Rng& rng, const std::vector<ScalarSpec>& specs) {
  Point p;
  for (const auto& s : specs)
    p.set(s.name, s.fixed ? *s.fixed : sample_rational(rng, kSampleBound, degenerate_scalar));
  return p;
}

}  // namespace pfq
