#include "quadlie/rational.hpp"

#include <cctype>
#include <ostream>

namespace quadlie {

Rational::Rational(long n, long d) {
  if (d == 0) throw InputError("zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

bool is_int_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  if (!is_int_literal(num, true))
    throw InputError("not a rational: \"" + std::string(s) + "\"");
  mpz_class p(std::string(num), 10);
  if (slash == std::string_view::npos) return Rational(mpq_class(p));
  std::string_view den = s.substr(slash + 1);
  if (!is_int_literal(den, false))
    throw InputError("not a rational: \"" + std::string(s) + "\"");
  mpz_class q(std::string(den), 10);
  if (q == 0) throw InputError("zero denominator in \"" + std::string(s) + "\"");
  return Rational(mpq_class(p, q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace quadlie
