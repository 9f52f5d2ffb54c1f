#pragma once

// Small dense exact linear algebra used by the geometric predicates.

#include <optional>
#include <vector>

#include "tropmech/rational.hpp"

namespace tropmech {

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
  SolveStatus status;
  QVec x;  // valid iff status == Unique
};

// Solves A x = b over the rationals. A is row-major, possibly non-square.
SolveResult solve_linear(QMat a, QVec b);

int rank(QMat a);
int int_rank(ZMat a);

// Inverse of a square matrix; nullopt when singular.
std::optional<QMat> inverse(const QMat& a);

// Fraction-free determinant (Bareiss).
Integer det_bareiss(ZMat a);

// Vector orthogonal to the rows of an r x (r+1) matrix, computed from signed
// maximal minors. All zeros when the rows do not have full rank.
ZVec cross_normal(const ZMat& m);

// Strips common content so gcd of entries is 1 (zero vector stays zero).
void normalize_primitive(ZVec& v);

}  // namespace tropmech
