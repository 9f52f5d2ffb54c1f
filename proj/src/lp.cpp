#include "tropmech/lp.hpp"

#include <algorithm>

#include "tropmech/errors.hpp"

namespace tropmech {

namespace {

// Standard-form tableau: minimize c.y subject to A y = b, y >= 0, b >= 0.
// Columns are laid out as [x+ | x- | slacks]; artificials are appended for
// phase 1 and barred from re-entering in phase 2.
struct Tableau {
  int rows = 0;
  int cols = 0;  // structural columns (no rhs)
  QMat a;        // rows x (cols + 1), last column is rhs
  std::vector<int> basis;
  QVec zrow;  // reduced costs, length cols + 1; last entry is -objective

  void build_zrow(const QVec& cost) {
    zrow.assign(cols + 1, Rational(0));
    for (int j = 0; j < cols; ++j) zrow[j] = cost[j];
    for (int i = 0; i < rows; ++i) {
      const Rational& cb = cost[basis[i]];
      if (sgn(cb) == 0) continue;
      for (int j = 0; j <= cols; ++j) zrow[j] -= cb * a[i][j];
    }
  }

  void pivot(int r, int c) {
    Rational inv = 1 / a[r][c];
    for (int j = 0; j <= cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    if (sgn(zrow[c]) != 0) {
      Rational f = zrow[c];
      for (int j = 0; j <= cols; ++j) zrow[j] -= f * a[r][j];
    }
    basis[r] = c;
  }

  // Bland's rule. Returns Optimal or Unbounded; `allowed` masks columns that
  // may enter (artificials are disabled in phase 2).
  LpStatus run(const std::vector<char>& allowed, int* unbounded_col) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols; ++j) {
        if (allowed[j] && sgn(zrow[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows; ++i) {
        if (sgn(a[i][enter]) <= 0) continue;
        Rational ratio = a[i][cols] / a[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) {
        if (unbounded_col) *unbounded_col = enter;
        return LpStatus::Unbounded;
      }
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
  const int n = lp.num_vars;
  if (n < 0 || static_cast<int>(lp.objective.size()) != n)
    throw InvariantError("malformed-program: objective length != variable count");
  for (const auto& con : lp.constraints)
    if (static_cast<int>(con.coeffs.size()) != n)
      throw InvariantError("malformed-program: constraint length != variable count");

  const int m = static_cast<int>(lp.constraints.size());
  int num_slack = 0;
  for (const auto& con : lp.constraints)
    if (con.rel == Relation::GreaterEq) ++num_slack;

  // x_j = y_j - y_{n+j}; one surplus column per inequality; artificials last.
  Tableau t;
  t.rows = m;
  t.cols = 2 * n + num_slack + m;
  t.a.assign(m, QVec(t.cols + 1, Rational(0)));
  t.basis.resize(m);

  int slack_at = 2 * n;
  for (int i = 0; i < m; ++i) {
    const auto& con = lp.constraints[i];
    int row_sign = sgn(con.rhs) < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) {
      t.a[i][j] = row_sign * con.coeffs[j];
      t.a[i][n + j] = -row_sign * con.coeffs[j];
    }
    if (con.rel == Relation::GreaterEq) {
      t.a[i][slack_at] = Rational(-row_sign);
      ++slack_at;
    }
    t.a[i][t.cols] = row_sign * con.rhs;
    int art = 2 * n + num_slack + i;
    t.a[i][art] = 1;
    t.basis[i] = art;
  }

  // Phase 1: minimize the sum of artificials.
  QVec phase1_cost(t.cols, Rational(0));
  for (int i = 0; i < m; ++i) phase1_cost[2 * n + num_slack + i] = 1;
  std::vector<char> allowed(t.cols, 1);
  t.build_zrow(phase1_cost);
  t.run(allowed, nullptr);
  Rational art_sum = -t.zrow[t.cols];
  if (sgn(art_sum) > 0) return {LpStatus::Infeasible, Rational(0), {}};

  // Remove artificials from the basis (all at value zero now).
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < 2 * n + num_slack) continue;
    int col = -1;
    for (int j = 0; j < 2 * n + num_slack; ++j) {
      if (sgn(t.a[i][j]) != 0) {
        col = j;
        break;
      }
    }
    if (col >= 0) t.pivot(i, col);
    // Otherwise the row is redundant; the artificial stays basic at zero,
    // which is harmless once artificial columns are barred from entering.
  }
  for (int i = 0; i < m; ++i) allowed[2 * n + num_slack + i] = 0;

  // Phase 2.
  QVec cost(t.cols, Rational(0));
  for (int j = 0; j < n; ++j) {
    Rational c = lp.objective[j];
    if (lp.sense == Sense::Maximize) c = -c;
    cost[j] = c;
    cost[n + j] = -c;
  }
  t.build_zrow(cost);
  int unbounded_col = -1;
  LpStatus st = t.run(allowed, &unbounded_col);

  if (st == LpStatus::Unbounded) {
    QVec ray_std(t.cols, Rational(0));
    ray_std[unbounded_col] = 1;
    for (int i = 0; i < t.rows; ++i) ray_std[t.basis[i]] -= t.a[i][unbounded_col];
    QVec ray(n);
    for (int j = 0; j < n; ++j) ray[j] = ray_std[j] - ray_std[n + j];
    return {LpStatus::Unbounded, Rational(0), ray};
  }

  QVec y(t.cols, Rational(0));
  for (int i = 0; i < t.rows; ++i) y[t.basis[i]] = t.a[i][t.cols];
  QVec x(n);
  for (int j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
  Rational opt = -t.zrow[t.cols];
  if (lp.sense == Sense::Maximize) opt = -opt;
  return {LpStatus::Optimal, opt, x};
}

StrictOutcome lp_feasible_strict(const StrictSystem& sys) {
  if (sys.constraints.empty()) throw InvariantError("malformed-program: empty strict system");
  LinearProgram lp;
  lp.num_vars = sys.num_vars + 1;  // trailing variable is the slack
  const int eps = sys.num_vars;
  for (const auto& con : sys.constraints) {
    if (static_cast<int>(con.coeffs.size()) != sys.num_vars)
      throw InvariantError("malformed-program: constraint length != variable count");
    LinearConstraint c;
    c.coeffs = con.coeffs;
    c.coeffs.push_back(con.strict && con.rel == Relation::GreaterEq ? Rational(-1) : Rational(0));
    c.rel = con.rel;
    c.rhs = con.rhs;
    lp.constraints.push_back(std::move(c));
  }
  {
    LinearConstraint bound;  // eps <= 1 keeps the program bounded
    bound.coeffs.assign(lp.num_vars, Rational(0));
    bound.coeffs[eps] = -1;
    bound.rhs = -1;
    lp.constraints.push_back(std::move(bound));
    LinearConstraint nonneg;
    nonneg.coeffs.assign(lp.num_vars, Rational(0));
    nonneg.coeffs[eps] = 1;
    nonneg.rhs = 0;
    lp.constraints.push_back(std::move(nonneg));
  }
  lp.objective.assign(lp.num_vars, Rational(0));
  lp.objective[eps] = 1;
  lp.sense = Sense::Maximize;

  LpOutcome out = lp_solve(lp);
  if (out.status != LpStatus::Optimal || sgn(out.optimum) <= 0) return {false, {}, Rational(0)};
  QVec witness(out.witness.begin(), out.witness.begin() + sys.num_vars);
  return {true, std::move(witness), out.optimum};
}

}  // namespace tropmech
