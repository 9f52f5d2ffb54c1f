#pragma once

// Affine maximizers for n players and m items: allocation matrices score
// c_A + sum_i w_i theta_i . A_i and the winner maximizes. Their indifference
// complexes are regular subdivisions of the product-of-simplices vertex set;
// player weights act by an invertible diagonal scaling, which leaves the cell
// structure unchanged.

#include <vector>

#include "tropmech/mechanism.hpp"
#include "tropmech/point_config.hpp"
#include "tropmech/rational.hpp"
#include "tropmech/subdivision.hpp"

namespace tropmech {

struct AffineMaximizer {
  int players = 0;
  int items = 0;
  QVec weights;  // per player, all nonzero
  QVec biases;   // per allocation, in simplex_product_config point order
};

void check_affine_maximizer(const AffineMaximizer& am);

// Type matrices are indexed row-major: theta[item * players + player].
struct AffineEvaluation {
  Rational value;
  std::vector<int> argmax;  // allocation indices, sorted
};
AffineEvaluation affine_evaluate(const AffineMaximizer& am, const QVec& theta);

struct AffineGeometry {
  PointConfiguration config;  // simplex_product_config(n, m)
  Subdivision subdivision;
  IndifferenceComplex complex;
  bool nondegenerate = false;
};
AffineGeometry affine_geometry(const AffineMaximizer& am);
IndifferenceComplex affine_indifference_complex(const AffineMaximizer& am);

// Worst within-cell change of any single player's bundle size.
int multiplayer_cardinality_sensitivity(const Subdivision& s);

// For two players, biases -|bundle of player 1|^2 give sensitivity 1; for
// more players, biases -(max_j |bundle_j|)^2 give sensitivity <= ceil(m/2).
AffineMaximizer construct_multiplayer_robust(int n, int m);

// All difference sets share the lineality direction with entry 1/w_j for
// player j in every item row; adding multiples of it never changes the
// argmax. Normalizing the last coordinate to zero drops one dimension while
// preserving every intersection pattern.
struct LinealityReduction {
  QVec direction;                 // length m*n
  std::vector<int> kept_coords;   // all coordinates except the last
  QVec project(const QVec& theta) const;  // representative with last coord 0
};
LinealityReduction lineality_reduce(const AffineMaximizer& am);

// Region of one allocation in the reduced coordinates (dimension m*n - 1).
Polyhedron affine_reduced_region(const AffineMaximizer& am, int allocation_index);

}  // namespace tropmech
