#include "tropmech/rational.hpp"

#include <cctype>

#include "tropmech/errors.hpp"

namespace tropmech {

Rational rat(long num, long den) {
  if (den == 0) throw InvariantError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool looks_like_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace

Rational parse_rational(const std::string& s) {
  if (!looks_like_rational(s)) throw ParseError("malformed rational: \"" + s + "\"");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("malformed rational: \"" + s + "\"");
  if (sgn(Rational(q.get_den())) == 0) throw ParseError("rational with zero denominator: \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string integer_to_string(const Integer& z) { return z.get_str(); }

Rational rat_pow(const Rational& base, unsigned exp) {
  Rational r(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InvariantError("dot: dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) throw InvariantError("dot: dimension mismatch");
  Integer s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const QVec& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw InvariantError("dot: dimension mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace tropmech
