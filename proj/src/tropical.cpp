#include "tropmech/tropical.hpp"

#include <algorithm>
#include <set>

#include "tropmech/errors.hpp"
#include "tropmech/linalg.hpp"
#include "tropmech/lp.hpp"

namespace tropmech {

Evaluation evaluate(const TropicalPolynomial& p, const QVec& x) {
  if (static_cast<int>(x.size()) != p.vars())
    throw InvariantError("evaluate: dimension mismatch");
  if (p.support.size() != p.coeffs.size())
    throw InvariantError("evaluate: support/coefficient length mismatch");
  Evaluation ev;
  bool have = false;
  for (std::size_t i = 0; i < p.support.size(); ++i) {
    if (!p.coeffs[i]) continue;
    Rational v = *p.coeffs[i] + dot(x, p.support[i]);
    if (!have || v > ev.value) {
      ev.value = v;
      ev.argmax.assign(1, static_cast<int>(i));
      have = true;
    } else if (v == ev.value) {
      ev.argmax.push_back(static_cast<int>(i));
    }
  }
  if (!have) throw InvariantError("evaluate: polynomial has no finite coefficient");
  return ev;
}

bool Polyhedron::feasible(QVec* witness) const {
  LinearProgram lp;
  lp.num_vars = dim();
  for (std::size_t i = 0; i < normals.size(); ++i)
    lp.constraints.push_back({normals[i], Relation::GreaterEq, offsets[i]});
  lp.objective.assign(lp.num_vars, Rational(0));
  auto out = lp_solve(lp);
  if (out.status != LpStatus::Optimal) return false;
  if (witness) *witness = out.witness;
  return true;
}

bool Polyhedron::full_dimensional(QVec* witness) const {
  StrictSystem sys;
  sys.num_vars = dim();
  for (std::size_t i = 0; i < normals.size(); ++i)
    sys.constraints.push_back({normals[i], Relation::GreaterEq, offsets[i], true});
  if (sys.constraints.empty()) return true;
  auto out = lp_feasible_strict(sys);
  if (out.feasible && witness) *witness = out.witness;
  return out.feasible;
}

bool Polyhedron::contains(const QVec& x) const {
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (dot(normals[i], x) < offsets[i]) return false;
  return true;
}

DualSubdivision dual_subdivision(const TropicalPolynomial& p) {
  if (p.support.size() != p.coeffs.size())
    throw InvariantError("dual_subdivision: support/coefficient length mismatch");
  DualSubdivision out;
  std::vector<std::vector<int>> pts;
  QVec heights;
  for (std::size_t i = 0; i < p.support.size(); ++i) {
    if (!p.coeffs[i]) continue;
    pts.push_back(p.support[i]);
    heights.push_back(*p.coeffs[i]);
    out.support_index.push_back(static_cast<int>(i));
  }
  if (pts.empty()) throw InvariantError("dual_subdivision: empty finite support");
  out.config = custom_config(p.vars(), std::move(pts));
  Lifting lift{std::move(heights)};
  out.subdivision = regular_subdivision(out.config, lift);
  return out;
}

Polyhedron region(const TropicalPolynomial& p, int support_index) {
  if (support_index < 0 || support_index >= static_cast<int>(p.support.size()) ||
      !p.coeffs[support_index])
    throw InvariantError("region: index is not a finite support point");
  Polyhedron poly;
  const auto& u = p.support[support_index];
  for (std::size_t v = 0; v < p.support.size(); ++v) {
    if (static_cast<int>(v) == support_index || !p.coeffs[v]) continue;
    QVec normal(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) normal[j] = u[j] - p.support[v][j];
    poly.normals.push_back(std::move(normal));
    poly.offsets.push_back(*p.coeffs[v] - *p.coeffs[support_index]);
  }
  return poly;
}

QVec dual_vertex(const TropicalPolynomial& p, const std::vector<int>& cell) {
  if (cell.size() < 2) throw InvariantError("dual_vertex: cell too small");
  const int m = p.vars();
  QMat a;
  QVec b;
  const auto& u0 = p.support[cell[0]];
  for (std::size_t k = 1; k < cell.size(); ++k) {
    const auto& u = p.support[cell[k]];
    QVec row(m);
    for (int j = 0; j < m; ++j) row[j] = u0[j] - u[j];
    a.push_back(std::move(row));
    b.push_back(*p.coeffs[cell[k]] - *p.coeffs[cell[0]]);
  }
  auto res = solve_linear(std::move(a), std::move(b));
  if (res.status == SolveStatus::Underdetermined)
    throw InvariantError("dual_vertex: cell not full-dimensional (underdetermined system)");
  if (res.status == SolveStatus::Inconsistent)
    throw InvariantError("dual_vertex: no point equalizes the cell");
  return res.x;
}

TightSpan tight_span(const TropicalPolynomial& p) {
  DualSubdivision dual = dual_subdivision(p);
  TightSpan ts;
  const int d = dual.config.affine_dim;
  if (d != p.vars()) return ts;  // no zero-dimensional dual vertices exist

  for (const auto& cell : dual.subdivision.cells) {
    std::vector<int> in_support;
    in_support.reserve(cell.size());
    for (int idx : cell) in_support.push_back(dual.support_index[idx]);
    ts.vertices.push_back(dual_vertex(p, in_support));
    ts.cells.push_back(std::move(in_support));
  }
  const auto& cells = dual.subdivision.cells;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      std::vector<int> shared;
      std::set_intersection(cells[i].begin(), cells[i].end(), cells[j].begin(), cells[j].end(),
                            std::back_inserter(shared));
      if (shared.size() < static_cast<std::size_t>(d)) continue;
      ZMat diffs;
      auto p0 = dual.config.chart(shared[0]);
      for (std::size_t k = 1; k < shared.size(); ++k) {
        ZVec row(d);
        auto pk = dual.config.chart(shared[k]);
        for (int t = 0; t < d; ++t) row[t] = pk[t] - p0[t];
        diffs.push_back(std::move(row));
      }
      if (int_rank(diffs) == d - 1)
        ts.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return ts;
}

}  // namespace tropmech
