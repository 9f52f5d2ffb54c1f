#pragma once

// Shared fixtures: the worked example mechanisms and polynomials used across
// the suites, and the random-mechanism generator for the property tests.

#include <bit>
#include <random>

#include "tropmech/mechanism.hpp"
#include "tropmech/tropical.hpp"

namespace tropmech::testing {

// Three items priced by bundle size: 0, 1/4, 2/3, 5/6. Its subdivision is
// the parity triangulation with the big cell on the odd vertices.
inline Mechanism bundle_size_mechanism() {
  Mechanism mech;
  mech.items = 3;
  mech.payments.resize(8);
  for (unsigned a = 0; a < 8; ++a) {
    switch (std::popcount(a)) {
      case 0: mech.payments[a] = rat(0); break;
      case 1: mech.payments[a] = rat(1, 4); break;
      case 2: mech.payments[a] = rat(2, 3); break;
      default: mech.payments[a] = rat(5, 6); break;
    }
  }
  return mech;
}

// Its maximal cells, computed independently by equalizing utilities per cell
// and checking domination by hand: the odd-parity tetrahedron plus the four
// cornered simplices at the even vertices.
inline CellList bundle_size_cells() {
  return {{0, 1, 2, 4}, {1, 2, 3, 7}, {1, 2, 4, 7}, {1, 4, 5, 7}, {2, 4, 6, 7}};
}

// Seven-term polynomial in two variables:
// max{0, x+1, y+1, 2x, x+y, 2y-1, 2x+y-2}.
inline TropicalPolynomial plane_curve() {
  TropicalPolynomial p;
  p.support = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}};
  for (long c : {0L, 1L, 1L, 0L, 0L, -1L, -2L}) p.coeffs.emplace_back(Rational(c));
  return p;
}

// Twelve-term polynomial over the 2x3 lattice box:
// max{0, x-2, y-2, 2x-11, x+y-6, 2y-9, 2x+y-15, x+2y-15, 3y-14, 2x+2y-19,
//     x+3y-22, 2x+3y-32}.
inline TropicalPolynomial box_curve() {
  TropicalPolynomial p;
  p.support = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2},
               {2, 1}, {1, 2}, {0, 3}, {2, 2}, {1, 3}, {2, 3}};
  for (long c : {0L, -2L, -2L, -11L, -6L, -9L, -15L, -15L, -14L, -19L, -22L, -32L})
    p.coeffs.emplace_back(Rational(c));
  return p;
}

// Payments drawn as uniform rationals with denominators up to 60.
inline Mechanism random_mechanism(int m, std::mt19937_64& rng) {
  Mechanism mech;
  mech.items = m;
  std::uniform_int_distribution<long> den(1, 60), num(0, 180);
  for (unsigned a = 0; a < (1u << m); ++a) mech.payments.push_back(rat(num(rng), den(rng)));
  return mech;
}

}  // namespace tropmech::testing
