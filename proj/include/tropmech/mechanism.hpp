#pragma once

// One-player mechanisms given by bundle payments: the utility polynomial,
// the indifference complex and its LP cross-check, allocation-network arc
// lengths and cycle certificates, sensitivity metrics, and the robust
// constructions.

#include <optional>
#include <vector>

#include "tropmech/point_config.hpp"
#include "tropmech/rational.hpp"
#include "tropmech/subdivision.hpp"
#include "tropmech/tropical.hpp"

namespace tropmech {

struct Mechanism {
  int items = 0;
  QVec payments;  // one per bundle, indexed by the bundle's binary value
};

struct IndifferenceComplex {
  std::vector<std::string> ground;          // bundle labels
  std::vector<std::vector<int>> facets;     // sorted bundle indices, sorted list
  std::vector<std::vector<std::string>> facet_labels() const;
  bool has_face(const std::vector<int>& subset) const;  // subset sorted
};

// Utility u(theta) = max over bundles of theta . a - p_a; support is the
// vertex set of the unit cube in binary order.
TropicalPolynomial utility_polynomial(const Mechanism& mech);

// Facets are the maximal cells of the dual subdivision of the utility
// polynomial. The subdivision is returned alongside since most callers need
// both.
struct MechanismGeometry {
  Subdivision subdivision;       // over cube_config(m)
  IndifferenceComplex complex;
  bool nondegenerate = false;    // subdivision is a triangulation
};
MechanismGeometry mechanism_geometry(const Mechanism& mech);
IndifferenceComplex indifference_complex(const Mechanism& mech);

// LP test: do the closed regions of all bundles in the subset intersect?
bool bundle_regions_intersect(const Mechanism& mech, const std::vector<unsigned>& subset);

// For every subset O of bundles, checks that the LP test "the regions of all
// bundles in O intersect" agrees with "O is a face of the indifference
// complex". Supersets of failing subsets are consistent by monotonicity and
// are skipped.
bool verify_complex_by_intersection(const Mechanism& mech);  // m <= 4

struct ArcLength {
  std::optional<Rational> value;  // nullopt encodes +infinity (empty region)
  bool region_full_dim = false;   // flagged when only the closed region is nonempty
};

// l(a, b) = exact minimum of theta . (b - a) over the closed region of b.
ArcLength arc_length(const Mechanism& mech, unsigned a, unsigned b);

struct AllocationNetwork {
  int items = 0;
  std::vector<std::vector<ArcLength>> arc;  // [from][to]
};
AllocationNetwork allocation_network(const Mechanism& mech);

struct CycleCheck {
  std::optional<Rational> length;  // nullopt when some arc is +infinity
  bool adjacent = false;           // consecutive regions all intersect
};
// Cycle is a closed bundle sequence (first == last).
CycleCheck verify_zero_cycles(const Mechanism& mech, const std::vector<unsigned>& cycle);

// Distances between bundles seen as 0/1 vectors.
int cardinality_distance(unsigned a, unsigned b);
int hamming_distance(unsigned a, unsigned b);

// Worst within-cell distance over all maximal cells (cube configurations).
int cardinality_sensitivity(const Subdivision& s);
int hamming_sensitivity(const Subdivision& s);
int cardinality_sensitivity(const Mechanism& mech);
int hamming_sensitivity(const Mechanism& mech);

enum class SensitivityMetric { Cardinality, Hamming };

struct SensitivityBound {
  int lower = 0;
  int upper = 0;
  bool exact = false;  // true iff settled by exhaustive enumeration (m <= 3)
};

// Best achievable sensitivity over all implementable complexes on m items.
// Exact by exhaustion over all triangulations for m <= 3 (refining a
// subdivision cannot increase the within-cell maximum, so triangulations
// suffice; see docs/sensitivity.md); a bracket from the explicit
// constructions and the general lower bounds otherwise.
SensitivityBound optimal_sensitivity(int m, SensitivityMetric metric);

struct RobustConstruction {
  Mechanism mech;
  Lifting lifting;          // heights -p
  Subdivision subdivision;  // certified cells of the lifting
};

// Prices p(a) = |a|^2; the cells are the consecutive coordinate-sum slabs,
// so the cardinality sensitivity is exactly 1.
RobustConstruction construct_cardinality_robust(int m);  // m >= 1

// Parity lifting for odd m (heights 0 on even bundles, -1 on odd ones, giving
// one big even cell plus a cornered simplex at every odd vertex); prisms over
// the (m-1)-construction for even m. No cell contains an antipodal pair.
RobustConstruction construct_hamming_robust(int m);  // m >= 3

// Normalized volume of { x in [0,1]^m : k-1 <= sum x_i <= k }, via the
// descent-count recurrence; used for the volume audit of the slab cells.
Integer coordinate_sum_slab_volume(int m, int k);

}  // namespace tropmech
