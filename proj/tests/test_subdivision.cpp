#include <algorithm>
#include <bit>

#include "doctest.h"
#include "helpers.hpp"
#include "tropmech/errors.hpp"
#include "tropmech/subdivision.hpp"

using namespace tropmech;
using namespace tropmech::testing;

namespace {

Lifting negated_payments(const Mechanism& mech) {
  Lifting l;
  for (const auto& p : mech.payments) l.heights.push_back(-p);
  return l;
}

// Outer triangle with a rotated inner triangle: the smallest configuration
// with non-regular triangulations.
PointConfiguration nested_triangles() {
  return custom_config(2, {{4, 0}, {0, 4}, {0, 0}, {2, 1}, {1, 2}, {1, 1}});
}

CellList spiral_a() {
  return {{0, 1, 3}, {0, 2, 5}, {0, 3, 5}, {1, 2, 4}, {1, 3, 4}, {2, 4, 5}, {3, 4, 5}};
}
CellList spiral_b() {
  return {{0, 1, 4}, {0, 2, 3}, {0, 3, 4}, {1, 2, 5}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
}

}  // namespace

TEST_CASE("bundle-size mechanism heights produce the parity triangulation") {
  auto cube = cube_config(3);
  Subdivision s = regular_subdivision(cube, negated_payments(bundle_size_mechanism()));
  CHECK(s.cells == bundle_size_cells());
  CHECK(s.is_triangulation());
  CHECK(validate_subdivision(s).empty());
}

TEST_CASE("affine heights give the trivial subdivision") {
  auto cube = cube_config(3);
  Lifting affine;
  for (const auto& p : cube.points) affine.heights.push_back(rat(2 * p[0] - p[1] + 3 * p[2] + 1));
  Subdivision s = regular_subdivision(cube, affine);
  REQUIRE(s.cells.size() == 1);
  CHECK(s.cells[0].size() == cube.size());  // every point lies on the single upper facet

  // Same on a box, where interior lattice points join the cell's on-set.
  auto box = box_lattice_config({2, 3});
  Lifting flat;
  flat.heights.assign(box.size(), rat(0));
  Subdivision t = regular_subdivision(box, flat);
  REQUIRE(t.cells.size() == 1);
  CHECK(t.cells[0].size() == box.size());
}

TEST_CASE("degenerate configurations are rejected") {
  auto cube = cube_config(2);
  Lifting wrong;
  wrong.heights.assign(3, rat(0));
  CHECK_THROWS_AS(regular_subdivision(cube, wrong), InvariantError);
}

TEST_CASE("regularity of the trivial subdivision") {
  auto cube = cube_config(2);
  Subdivision s;
  s.config = cube;
  s.cells = {{0, 1, 2, 3}};
  auto reg = is_regular(cube, s);
  REQUIRE(reg.regular);
  CHECK(regular_subdivision(cube, reg.witness).cells == s.cells);
}

TEST_CASE("regularity with recoverable witness on the parity triangulation") {
  auto cube = cube_config(3);
  Subdivision s;
  s.config = cube;
  s.cells = bundle_size_cells();
  auto reg = is_regular(cube, s);
  REQUIRE(reg.regular);
  CHECK(regular_subdivision(cube, reg.witness).cells == s.cells);
  // The negated payments themselves are a witness.
  CHECK(regular_subdivision(cube, negated_payments(bundle_size_mechanism())).cells == s.cells);
}

TEST_CASE("invalid subdivisions are reported with the violated pair") {
  auto cube = cube_config(2);
  Subdivision bad;
  bad.config = cube;
  bad.cells = {{0, 1, 3}, {0, 1, 2}};  // overlapping triangles
  auto violations = validate_subdivision(bad);
  REQUIRE(!violations.empty());
  CHECK(violations.front().find("0 and 1") != std::string::npos);
  CHECK_THROWS_AS(is_regular(cube, bad), InvariantError);

  Subdivision hole;
  hole.config = cube_config(3);
  hole.cells = bundle_size_cells();
  hole.cells.erase(hole.cells.begin() + 2);  // drop the big cell
  auto missing = validate_subdivision(hole);
  REQUIRE(!missing.empty());
  CHECK(missing.front().find("volume") != std::string::npos);

  Subdivision nested;
  nested.config = cube_config(2);
  nested.cells = {{0, 1, 2, 3}, {0, 1, 2}};
  CHECK(!validate_subdivision(nested).empty());
}

TEST_CASE("non-regular triangulations exist and are detected") {
  auto cfg = nested_triangles();
  CHECK(hull_norm_volume(cfg) == 16);

  Subdivision a;
  a.config = cfg;
  a.cells = spiral_a();
  CHECK(validate_subdivision(a).empty());
  Subdivision b;
  b.config = cfg;
  b.cells = spiral_b();
  CHECK(validate_subdivision(b).empty());

  bool a_reg = is_regular(cfg, a).regular;
  bool b_reg = is_regular(cfg, b).regular;
  CHECK((!a_reg || !b_reg));  // at least one spiral admits no lifting

  EnumerateOptions all;
  auto res_all = enumerate_triangulations(cfg, all);
  EnumerateOptions reg;
  reg.regular_only = true;
  auto res_reg = enumerate_triangulations(cfg, reg);
  CHECK(res_all.total > res_reg.matching);
}

TEST_CASE("refinement of the trivial square subdivision") {
  auto cube = cube_config(2);
  Subdivision s;
  s.config = cube;
  s.cells = {{0, 1, 2, 3}};
  Lifting witness;
  witness.heights.assign(4, rat(0));
  Subdivision t = refine_to_triangulation(cube, s, witness);
  CHECK(t.is_triangulation());
  CHECK(t.cells.size() == 2);
  bool diag_a = t.cells == CellList{{0, 1, 2}, {1, 2, 3}};
  bool diag_b = t.cells == CellList{{0, 1, 3}, {0, 2, 3}};
  CHECK((diag_a || diag_b));
}

TEST_CASE("a triangulation refines to itself") {
  auto cube = cube_config(3);
  Subdivision s;
  s.config = cube;
  s.cells = bundle_size_cells();
  auto reg = is_regular(cube, s);
  REQUIRE(reg.regular);
  Subdivision t = refine_to_triangulation(cube, s, reg.witness);
  CHECK(t.cells == s.cells);
}

TEST_CASE("refining the slab subdivision preserves the slabs") {
  auto rc = construct_cardinality_robust(3);
  auto reg = is_regular(rc.subdivision.config, rc.subdivision);
  REQUIRE(reg.regular);
  Subdivision t = refine_to_triangulation(rc.subdivision.config, rc.subdivision, reg.witness);
  CHECK(t.is_triangulation());
  for (const auto& cell : t.cells) {
    int lo = 99, hi = -1;
    for (int v : cell) {
      int s = std::popcount(static_cast<unsigned>(v));
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    // Every refined cell spans at most two consecutive coordinate-sum levels.
    CHECK(hi - lo <= 1);
  }
}

TEST_CASE("canonicalization") {
  auto cube = cube_config(2);
  SymmetryGroup identity;
  identity.elements.push_back({{0, 1, 2, 3}});
  Subdivision s;
  s.config = cube;
  s.cells = {{1, 2, 3}, {0, 1, 2}};
  Subdivision c = canonicalize(s, identity);
  CHECK(c.cells == CellList{{0, 1, 2}, {1, 2, 3}});  // just sorted

  // The two square triangulations agree up to the full symmetry group.
  auto full = symmetry_group(cube, SymmetryKind::FullCube);
  Subdivision t1;
  t1.config = cube;
  t1.cells = {{0, 1, 2}, {1, 2, 3}};
  Subdivision t2;
  t2.config = cube;
  t2.cells = {{0, 1, 3}, {0, 2, 3}};
  CHECK(canonicalize(t1, full).cells == canonicalize(t2, full).cells);

  // The parity triangulation is fixed as an orbit under the all-coordinate
  // flip: apply the flip, re-canonicalize, compare.
  auto cube3 = cube_config(3);
  auto full3 = symmetry_group(cube3, SymmetryKind::FullCube);
  Subdivision parity;
  parity.config = cube3;
  parity.cells = bundle_size_cells();
  Subdivision flipped;
  flipped.config = cube3;
  for (const auto& cell : parity.cells) {
    Cell image;
    for (int v : cell) image.push_back(7 - v);
    std::sort(image.begin(), image.end());
    flipped.cells.push_back(image);
  }
  std::sort(flipped.cells.begin(), flipped.cells.end());
  CHECK(flipped.cells != parity.cells);
  CHECK(canonicalize(parity, full3).cells == canonicalize(flipped, full3).cells);

  SymmetryGroup wrong;
  wrong.elements.push_back({{0, 1}});
  CHECK_THROWS_AS(canonicalize(parity, wrong), InvariantError);
}

TEST_CASE("volumes") {
  auto cube = cube_config(3);
  CHECK(hull_norm_volume(cube) == 6);
  CHECK(simplex_norm_volume(cube, {0, 1, 2, 4}) == 1);
  CHECK(simplex_norm_volume(cube, {1, 2, 4, 7}) == 2);
  CHECK(pointset_norm_volume(cube, {1, 2, 3, 4, 5, 6}) == 4);  // middle slab

  // Slab volumes from the descent recurrence match direct triangulation.
  for (int m = 1; m <= 4; ++m) {
    auto c = cube_config(m);
    Integer total(0);
    for (int k = 1; k <= m; ++k) {
      std::vector<int> slab;
      for (unsigned a = 0; a < (1u << m); ++a) {
        int s = std::popcount(a);
        if (s == k - 1 || s == k) slab.push_back(static_cast<int>(a));
      }
      Integer direct = pointset_norm_volume(c, slab);
      CHECK(direct == coordinate_sum_slab_volume(m, k));
      total += direct;
    }
    CHECK(total == hull_norm_volume(c));
  }
}

TEST_CASE("lifting certification rejects wrong cell lists") {
  auto cube = cube_config(2);
  Lifting flat;
  flat.heights.assign(4, rat(0));
  // The flat lifting has the single trivial cell, not two triangles.
  CellList wrong = {{0, 1, 2}, {1, 2, 3}};
  std::vector<Integer> vols{Integer(1), Integer(1)};
  CHECK_FALSE(verify_cells_of_lifting(cube, flat, wrong, vols, Integer(2)));

  Lifting diag;
  diag.heights = {rat(0), rat(0), rat(0), rat(-1)};
  CellList right = {{0, 1, 2}, {1, 2, 3}};
  CHECK(verify_cells_of_lifting(cube, diag, right, vols, Integer(2)));
  // A missing cell fails the volume audit.
  CHECK_FALSE(verify_cells_of_lifting(cube, diag, {{0, 1, 2}}, {Integer(1)}, Integer(2)));
}

TEST_CASE("size guards and bad witnesses") {
  auto big = cube_config(6);
  Lifting flat;
  flat.heights.assign(64, rat(0));
  CHECK_THROWS_AS(regular_subdivision(big, flat), SizeGuardError);

  auto cube = cube_config(2);
  Subdivision s;
  s.config = cube;
  s.cells = {{0, 1, 2}, {1, 2, 3}};
  Lifting not_a_witness;
  not_a_witness.heights.assign(4, rat(0));  // induces the trivial cell instead
  CHECK_THROWS_AS(refine_to_triangulation(cube, s, not_a_witness), InvariantError);
}

TEST_CASE("round trip: subdivision of a lifting is regular with equal cells") {
  std::mt19937_64 rng(7);
  auto cube = cube_config(3);
  std::uniform_int_distribution<long> den(1, 60), num(-120, 120);
  for (int t = 0; t < 25; ++t) {
    Lifting l;
    for (int i = 0; i < 8; ++i) l.heights.push_back(rat(num(rng), den(rng)));
    Subdivision s = regular_subdivision(cube, l);
    CHECK(validate_subdivision(s).empty());
    auto reg = is_regular(cube, s);
    REQUIRE(reg.regular);
    CHECK(regular_subdivision(cube, reg.witness).cells == s.cells);
  }
}
