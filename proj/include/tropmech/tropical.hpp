#pragma once

// Max-plus tropical polynomials, their hypersurface regions, and the duality
// with regular subdivisions of the support. Convention is max-plus with
// upper faces throughout; there is no min-plus mode.

#include <optional>
#include <vector>

#include "tropmech/point_config.hpp"
#include "tropmech/rational.hpp"
#include "tropmech/subdivision.hpp"

namespace tropmech {

struct TropicalPolynomial {
  std::vector<std::vector<int>> support;        // integer exponent vectors
  std::vector<std::optional<Rational>> coeffs;  // nullopt encodes -infinity

  int vars() const { return support.empty() ? 0 : static_cast<int>(support[0].size()); }
};

struct Evaluation {
  Rational value;
  std::vector<int> argmax;  // indices into the support, sorted
};

// Exact maximum of coeff + x . u over the finite support; x lies on the
// hypersurface iff at least two terms attain it.
Evaluation evaluate(const TropicalPolynomial& p, const QVec& x);

// H-representation { x : normal . x >= offset per row }.
struct Polyhedron {
  QMat normals;
  QVec offsets;
  int dim() const { return normals.empty() ? 0 : static_cast<int>(normals[0].size()); }

  bool feasible(QVec* witness = nullptr) const;         // closed polyhedron nonempty
  bool full_dimensional(QVec* witness = nullptr) const; // interior nonempty
  bool contains(const QVec& x) const;
};

// Support points with -infinity coefficient are dropped before lifting.
// Cell indices refer to the returned configuration, whose point order is the
// order of the finite support entries.
struct DualSubdivision {
  PointConfiguration config;
  std::vector<int> support_index;  // config point -> index into p.support
  Subdivision subdivision;
};
DualSubdivision dual_subdivision(const TropicalPolynomial& p);

// Closed region where term u is maximal; empty or lower-dimensional iff u is
// a vertex of no cell of the dual subdivision.
Polyhedron region(const TropicalPolynomial& p, int support_index);

// Unique point where all terms of a full-dimensional maximal cell agree (and
// dominate). Cell entries are indices into p.support.
QVec dual_vertex(const TropicalPolynomial& p, const std::vector<int>& cell);

struct TightSpan {
  QMat vertices;                          // dual vertex per maximal cell
  std::vector<std::vector<int>> cells;    // the corresponding cells (support indices)
  std::vector<std::pair<int, int>> edges; // pairs of vertex ids sharing a wall
};

// 0- and 1-skeleton of the bounded part of the hypersurface complex: one
// vertex per full-dimensional maximal cell, one edge per shared facet.
TightSpan tight_span(const TropicalPolynomial& p);

}  // namespace tropmech
