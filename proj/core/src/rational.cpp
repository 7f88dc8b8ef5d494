#include "pfq/rational.hpp"

#include "pfq/error.hpp"

namespace pfq {

namespace {

mpz_class parse_int(std::string_view s) {
  if (s.empty()) throw ParseError("empty integer");
  size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("bad integer '" + std::string(s) + "'");
  for (size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer '" + std::string(s) + "'");
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rational Rational::from_string(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  return rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PoleError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational rat(long num, long den) { return rat(mpz_class(num), mpz_class(den)); }

Rational rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(mpq_class(num, den));
}

Rational inverse(const Rational& x) {
  if (x.is_zero()) throw PoleError("inverse of zero");
  return Rational(1) / x;
}

Rational pow(const Rational& x, long e) {
  if (e < 0) return pow(inverse(x), -e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), x.raw().get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.raw().get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

}  // namespace pfq
