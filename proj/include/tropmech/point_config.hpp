#pragma once

// Point configurations the rest of the library subdivides: unit-cube vertex
// sets, vertex sets of products of simplices (allocation matrices), and
// integer boxes for multi-unit allocation spaces. Also the symmetry groups
// acting on them, stored as explicit index permutations.

#include <map>
#include <string>
#include <vector>

#include "tropmech/rational.hpp"

namespace tropmech {

enum class ConfigKind { Cube, SimplexProduct, Box, Custom };

struct PointConfiguration {
  int dimension = 0;  // ambient dimension
  std::vector<std::vector<int>> points;
  std::vector<std::string> labels;
  ConfigKind kind = ConfigKind::Custom;
  int players = 0;  // SimplexProduct only
  int items = 0;    // Cube and SimplexProduct
  std::vector<int> bounds;  // Box only

  // Affine chart: projection onto a coordinate subset that is injective on
  // the affine span. All volumes and hyperplane computations run in chart
  // coordinates, so they are consistent across cells of one configuration.
  std::vector<int> chart_cols;
  int affine_dim = 0;

  std::vector<int> chart(int point_index) const;
  int index_of(const std::vector<int>& point) const;  // -1 when absent

  std::size_t size() const { return points.size(); }

  // Validates invariants (distinct points, label count) and computes the
  // chart. Must be called after the point list is final.
  void finalize();

 private:
  std::map<std::vector<int>, int> point_index_;
};

PointConfiguration cube_config(int m);                       // 1 <= m <= 10
PointConfiguration simplex_product_config(int n, int m);     // n >= 2, n^m <= 1e5
PointConfiguration box_lattice_config(std::vector<int> bounds);
PointConfiguration custom_config(int dimension, std::vector<std::vector<int>> points);

// Bundle <-> bitstring helpers (most significant item first).
std::string bundle_label(unsigned bundle, int m);
unsigned bundle_from_label(const std::string& label);

enum class SymmetryKind {
  ItemPermutations,  // Sym(m) on coordinates; cube and box configs
  FullCube,          // coordinate permutations and reflections; cube only
  PlayerItem,        // simultaneous Sym(n) x Sym(m); simplex products only
  FullProduct,       // per-item player permutations with item permutations
};

struct GroupElement {
  std::vector<int> index_perm;  // image of each point index
};

struct SymmetryGroup {
  SymmetryKind kind = SymmetryKind::ItemPermutations;
  std::vector<GroupElement> elements;
  std::size_t size() const { return elements.size(); }
};

SymmetryGroup symmetry_group(const PointConfiguration& config, SymmetryKind kind);

}  // namespace tropmech
