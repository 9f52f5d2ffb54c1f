#pragma once

// Regular subdivisions of point configurations: computing them from liftings,
// deciding regularity of a given subdivision, refining to triangulations,
// exhaustive triangulation enumeration, and canonicalization modulo a
// symmetry group.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropmech/point_config.hpp"
#include "tropmech/rational.hpp"

namespace tropmech {

struct Lifting {
  QVec heights;  // one per configuration point
};

using Cell = std::vector<int>;       // sorted point indices
using CellList = std::vector<Cell>;  // sorted lexicographically

struct Subdivision {
  PointConfiguration config;
  CellList cells;  // maximal cells only

  bool is_triangulation() const;
};

// Maximal cells are the full on-sets of the upper facets of the lifted
// configuration, found by enumerating (d+1)-subsets that span a non-vertical
// hyperplane and keeping those with every lifted point on or below. Points
// strictly below every kept hyperplane end up in no cell.
Subdivision regular_subdivision(const PointConfiguration& config, const Lifting& lifting,
                                std::size_t subset_guard = 6000000);

// Subdivision invariant checks: valid full-dimensional cells, no nested
// cells, pairwise proper intersections (certified by a separating hyperplane
// found by LP), and normalized cell volumes summing to the hull volume.
// Returns human-readable violations; empty means valid.
std::vector<std::string> validate_subdivision(const Subdivision& s);

// True iff conv(A) and conv(B) meet in the common face spanned by the shared
// points, witnessed by a hyperplane that is tight exactly on A∩B.
bool cells_intersect_properly(const PointConfiguration& cfg, const Cell& a, const Cell& b);

struct RegularityResult {
  bool regular = false;
  Lifting witness;  // valid iff regular
};

// Throws InvariantError (with the violated pair) on invalid input.
RegularityResult is_regular(const PointConfiguration& config, const Subdivision& s);

// Refines a regular subdivision to a regular triangulation on the same point
// set by perturbing the witness with a deterministic lexicographic tie-break
// (point index i gets weight eps^(i+1), with eps shrunk until the result is a
// simplicial refinement of the input).
Subdivision refine_to_triangulation(const PointConfiguration& config, const Subdivision& s,
                                    const Lifting& witness);

// Lexicographically minimal image of the sorted cell list over the group.
Subdivision canonicalize(const Subdivision& s, const SymmetryGroup& group);
CellList canonical_cells(const CellList& cells, const SymmetryGroup& group);

// Normalized volumes measured in the configuration's chart (d! times the
// Euclidean volume there); exact integers throughout.
Integer simplex_norm_volume(const PointConfiguration& cfg, const Cell& cell);
Integer pointset_norm_volume(const PointConfiguration& cfg, const std::vector<int>& subset);
Integer hull_norm_volume(const PointConfiguration& cfg);

// Certifies that `cells` are exactly the maximal cells of the regular
// subdivision induced by `lifting`: a per-cell strict LP finds an affine
// function agreeing with the lifting on the cell and strictly above it
// elsewhere, and the given exact volumes must sum to the hull volume.
bool verify_cells_of_lifting(const PointConfiguration& cfg, const Lifting& lifting,
                             const CellList& cells, const std::vector<Integer>& cell_volumes,
                             const Integer& hull_volume);

struct EnumerateOptions {
  bool regular_only = false;
  const SymmetryGroup* group = nullptr;
  bool long_running = false;
  int threads = 1;
  unsigned long long order_seed = 0;  // shuffles the candidate order; results must not change
  std::size_t max_representatives = 1u << 20;
};

struct EnumerateResult {
  unsigned long long total = 0;     // all triangulations found
  unsigned long long matching = 0;  // after the regular-only filter
  unsigned long long orbit_count = 0;
  std::vector<CellList> representatives;                  // canonical forms
  std::map<CellList, unsigned long long> orbit_sizes;     // canonical form -> members
};

// Exhaustive backtracking over full-dimensional simplices with exact volume
// accounting; completeness does not depend on flip connectivity.
EnumerateResult enumerate_triangulations(const PointConfiguration& config,
                                         const EnumerateOptions& opts = {});

}  // namespace tropmech
