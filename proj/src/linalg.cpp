#include "tropmech/linalg.hpp"

#include "tropmech/errors.hpp"

namespace tropmech {

SolveResult solve_linear(QMat a, QVec b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) throw InvariantError("solve_linear: dimension mismatch");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(b[i]) != 0) return {SolveStatus::Inconsistent, {}};
  if (pivot_col.size() < cols) return {SolveStatus::Underdetermined, {}};
  QVec x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return {SolveStatus::Unique, x};
}

int rank(QMat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

int int_rank(ZMat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      // Row operation without division: a_i <- a_rr * a_i - a_ic * a_r.
      Integer f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[r][c] * a[i][j] - f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<QMat> inverse(const QMat& a) {
  const std::size_t n = a.size();
  QMat aug(n, QVec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InvariantError("inverse: not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(aug[p][c]) == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(aug[p], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (std::size_t j = 0; j < 2 * n; ++j) aug[c][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(aug[i][c]) == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  QMat inv(n, QVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Integer det_bareiss(ZMat a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if (row.size() != n) throw InvariantError("det: not square");
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a[p][k]) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

ZVec cross_normal(const ZMat& m) {
  const std::size_t r = m.size();
  if (r == 0) throw InvariantError("cross_normal: empty matrix");
  const std::size_t c = m[0].size();
  if (c != r + 1) throw InvariantError("cross_normal: need r x (r+1) matrix");
  ZVec n(c);
  for (std::size_t skip = 0; skip < c; ++skip) {
    ZMat sub(r, ZVec(r));
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < c; ++j) {
        if (j == skip) continue;
        sub[i][jj++] = m[i][j];
      }
    }
    Integer d = det_bareiss(std::move(sub));
    n[skip] = (skip % 2 == 0) ? d : Integer(-d);
  }
  return n;
}

void normalize_primitive(ZVec& v) {
  Integer g(0);
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (sgn(g) == 0 || g == 1) return;
  for (auto& z : v) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
}

}  // namespace tropmech
