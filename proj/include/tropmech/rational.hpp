#pragma once

// Exact scalar arithmetic. Every geometric predicate in this library is an
// exact equality or inequality over the rationals; no floating point anywhere.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tropmech {

using Rational = mpq_class;
using Integer = mpz_class;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;

// num/den in lowest terms, den > 0.
Rational rat(long num, long den = 1);

// Accepts "num" or "num/den" with an optional leading minus sign.
Rational parse_rational(const std::string& s);

// Lowest-terms string, "num/den" or plain "num" when den == 1.
std::string rational_to_string(const Rational& q);
std::string integer_to_string(const Integer& z);

Rational rat_pow(const Rational& base, unsigned exp);

Rational dot(const QVec& a, const QVec& b);
Integer dot(const ZVec& a, const ZVec& b);
Rational dot(const QVec& a, const std::vector<int>& b);

}  // namespace tropmech
