#include "tropmech/affine.hpp"

#include <algorithm>

#include "tropmech/errors.hpp"

namespace tropmech {

void check_affine_maximizer(const AffineMaximizer& am) {
  if (am.players < 2) throw InvariantError("affine maximizer: need at least 2 players");
  if (am.items < 1) throw InvariantError("affine maximizer: need at least 1 item");
  if (static_cast<int>(am.weights.size()) != am.players)
    throw InvariantError("affine maximizer: one weight per player");
  for (const auto& w : am.weights)
    if (sgn(w) == 0) throw InvariantError("affine maximizer: zero player weight");
  long total = 1;
  for (int i = 0; i < am.items; ++i) total *= am.players;
  if (static_cast<long>(am.biases.size()) != total)
    throw InvariantError("affine maximizer: one bias per allocation");
}

namespace {

// Score of allocation `point` (a 0/1 row-major matrix) at type theta.
Rational score(const AffineMaximizer& am, const std::vector<int>& point, const Rational& bias,
               const QVec& theta) {
  Rational s = bias;
  const int n = am.players;
  for (std::size_t k = 0; k < point.size(); ++k) {
    if (!point[k]) continue;
    int player = static_cast<int>(k) % n;
    s += am.weights[player] * theta[k];
  }
  return s;
}

}  // namespace

AffineEvaluation affine_evaluate(const AffineMaximizer& am, const QVec& theta) {
  check_affine_maximizer(am);
  if (static_cast<int>(theta.size()) != am.items * am.players)
    throw InvariantError("affine_evaluate: type dimension mismatch");
  PointConfiguration cfg = simplex_product_config(am.players, am.items);
  AffineEvaluation ev;
  bool have = false;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    Rational v = score(am, cfg.points[i], am.biases[i], theta);
    if (!have || v > ev.value) {
      ev.value = v;
      ev.argmax.assign(1, static_cast<int>(i));
      have = true;
    } else if (v == ev.value) {
      ev.argmax.push_back(static_cast<int>(i));
    }
  }
  return ev;
}

AffineGeometry affine_geometry(const AffineMaximizer& am) {
  check_affine_maximizer(am);
  AffineGeometry geo;
  geo.config = simplex_product_config(am.players, am.items);
  Lifting lift{am.biases};
  geo.subdivision = regular_subdivision(geo.config, lift);
  geo.complex.ground = geo.config.labels;
  geo.complex.facets = geo.subdivision.cells;
  geo.nondegenerate = geo.subdivision.is_triangulation();
  return geo;
}

IndifferenceComplex affine_indifference_complex(const AffineMaximizer& am) {
  return affine_geometry(am).complex;
}

int multiplayer_cardinality_sensitivity(const Subdivision& s) {
  if (s.config.kind != ConfigKind::SimplexProduct)
    throw InvariantError("multiplayer sensitivity: simplex-product configuration required");
  const int n = s.config.players;
  const int m = s.config.items;
  auto bundle_size = [&](int point, int player) {
    int c = 0;
    for (int i = 0; i < m; ++i) c += s.config.points[point][i * n + player];
    return c;
  };
  int best = 0;
  for (const auto& cell : s.cells)
    for (std::size_t i = 0; i < cell.size(); ++i)
      for (std::size_t j = i + 1; j < cell.size(); ++j)
        for (int pl = 0; pl < n; ++pl)
          best = std::max(best, std::abs(bundle_size(cell[i], pl) - bundle_size(cell[j], pl)));
  return best;
}

AffineMaximizer construct_multiplayer_robust(int n, int m) {
  AffineMaximizer am;
  am.players = n;
  am.items = m;
  am.weights.assign(n, Rational(1));
  PointConfiguration cfg = simplex_product_config(n, m);
  am.biases.resize(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    long size_of = 0;
    if (n == 2) {
      for (int it = 0; it < m; ++it) size_of += cfg.points[i][it * n];  // player 1's bundle
    } else {
      for (int pl = 0; pl < n; ++pl) {
        long c = 0;
        for (int it = 0; it < m; ++it) c += cfg.points[i][it * n + pl];
        size_of = std::max(size_of, c);
      }
    }
    am.biases[i] = Rational(-size_of * size_of);
  }
  return am;
}

LinealityReduction lineality_reduce(const AffineMaximizer& am) {
  check_affine_maximizer(am);
  LinealityReduction red;
  const int n = am.players;
  const int mn = am.items * n;
  red.direction.resize(mn);
  for (int k = 0; k < mn; ++k) red.direction[k] = 1 / am.weights[k % n];
  for (int k = 0; k + 1 < mn; ++k) red.kept_coords.push_back(k);
  return red;
}

QVec LinealityReduction::project(const QVec& theta) const {
  const int mn = static_cast<int>(direction.size());
  if (static_cast<int>(theta.size()) != mn)
    throw InvariantError("lineality projection: dimension mismatch");
  // Subtract the multiple of the direction that zeroes the last coordinate.
  Rational t = theta[mn - 1] / direction[mn - 1];
  QVec out;
  out.reserve(kept_coords.size());
  for (int k : kept_coords) out.push_back(theta[k] - t * direction[k]);
  return out;
}

Polyhedron affine_reduced_region(const AffineMaximizer& am, int allocation_index) {
  check_affine_maximizer(am);
  PointConfiguration cfg = simplex_product_config(am.players, am.items);
  if (allocation_index < 0 || allocation_index >= static_cast<int>(cfg.size()))
    throw InvariantError("affine_reduced_region: allocation index out of range");
  const int n = am.players;
  const int mn = am.items * n;

  // Exponent vector of an allocation: weight of the receiving player per
  // item coordinate. Restricting to the subspace where the last coordinate
  // vanishes just drops that coordinate.
  auto exponent = [&](int idx) {
    QVec e(mn, Rational(0));
    for (int k = 0; k < mn; ++k)
      if (cfg.points[idx][k]) e[k] = am.weights[k % n];
    return e;
  };
  QVec eu = exponent(allocation_index);
  Polyhedron poly;
  for (std::size_t v = 0; v < cfg.size(); ++v) {
    if (static_cast<int>(v) == allocation_index) continue;
    QVec ev = exponent(static_cast<int>(v));
    QVec normal(mn - 1);
    for (int k = 0; k + 1 < mn; ++k) normal[k] = eu[k] - ev[k];
    poly.normals.push_back(std::move(normal));
    poly.offsets.push_back(am.biases[v] - am.biases[allocation_index]);
  }
  return poly;
}

}  // namespace tropmech
