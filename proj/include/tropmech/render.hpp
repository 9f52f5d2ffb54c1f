#pragma once

// Deterministic SVG rendering of two-dimensional pictures: difference-set
// diagrams, dual subdivisions, and tight spans. Coordinates are printed with
// exactly six decimal digits, rounded half to even, and elements are emitted
// in a fixed order, so identical inputs give byte-identical documents.

#include <string>

#include "tropmech/affine.hpp"
#include "tropmech/mechanism.hpp"
#include "tropmech/rational.hpp"
#include "tropmech/tropical.hpp"

namespace tropmech {

enum class RenderTarget { DifferenceSets, DualSubdivision, TightSpan };

struct RenderSpec {
  QVec viewport;  // x0, y0, x1, y1 with x0 < x1 and y0 < y1
  RenderTarget target = RenderTarget::DifferenceSets;
  bool labels = true;
  Rational stroke = rat(3, 2);

  void validate() const;
};

// Exact rational -> fixed six-decimal string, ties to even.
std::string svg_number(const Rational& v);

// Difference sets of a two-item mechanism clipped to the viewport.
std::string render_difference_sets(const Mechanism& mech, const RenderSpec& spec);

// Difference sets of a lineality-reduced maximizer (m*n must be 3).
std::string render_affine_difference_sets(const AffineMaximizer& am, const RenderSpec& spec);

// Dual subdivision of a two-variable polynomial: support marks and cells.
std::string render_dual_subdivision(const TropicalPolynomial& p, const RenderSpec& spec);

// Tight span of a two-variable polynomial: dual vertices and edges.
std::string render_tight_span(const TropicalPolynomial& p, const RenderSpec& spec);

}  // namespace tropmech
