#include <bit>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "tropmech/errors.hpp"
#include "tropmech/mechanism.hpp"

using namespace tropmech;
using namespace tropmech::testing;

namespace {

Mechanism independent_sale() {  // two items priced 1 each
  Mechanism mech;
  mech.items = 2;
  mech.payments = {rat(0), rat(1), rat(1), rat(2)};
  return mech;
}

}  // namespace

TEST_CASE("utility polynomial") {
  Mechanism one;
  one.items = 1;
  one.payments = {rat(0), rat(1)};
  auto p = utility_polynomial(one);
  CHECK(p.support == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(*p.coeffs[0] == rat(0));
  CHECK(*p.coeffs[1] == rat(-1));

  auto q = utility_polynomial(independent_sale());
  CHECK(q.support.size() == 4);
  CHECK(*q.coeffs[3] == rat(-2));

  auto r = utility_polynomial(bundle_size_mechanism());
  CHECK(r.support.size() == 8);
  CHECK(*r.coeffs[7] == rat(-5, 6));

  Mechanism bad;
  bad.items = 2;
  bad.payments = {rat(0)};
  CHECK_THROWS_AS(utility_polynomial(bad), InvariantError);
}

TEST_CASE("indifference complexes") {
  auto tri = indifference_complex(bundle_size_mechanism());
  CHECK(tri.facets == bundle_size_cells());
  CHECK(tri.facet_labels()[0] == std::vector<std::string>{"000", "001", "010", "100"});

  auto ind = indifference_complex(independent_sale());
  REQUIRE(ind.facets.size() == 1);
  CHECK(ind.facets[0] == std::vector<int>{0, 1, 2, 3});  // all four regions meet

  Mechanism one;
  one.items = 1;
  one.payments = {rat(0), rat(1)};
  auto single = indifference_complex(one);
  REQUIRE(single.facets.size() == 1);
  CHECK(single.facets[0] == std::vector<int>{0, 1});

  CHECK(mechanism_geometry(bundle_size_mechanism()).nondegenerate);
  CHECK_FALSE(mechanism_geometry(independent_sale()).nondegenerate);
}

TEST_CASE("complex agrees with the LP intersection oracle") {
  CHECK(verify_complex_by_intersection(bundle_size_mechanism()));

  Mechanism one;
  one.items = 1;
  one.payments = {rat(5, 7), rat(-2)};
  CHECK(verify_complex_by_intersection(one));

  std::mt19937_64 rng(0xFACADE);
  for (int t = 0; t < 50; ++t) CHECK(verify_complex_by_intersection(random_mechanism(3, rng)));
}

TEST_CASE("intersection oracle size guard") {
  Mechanism big;
  big.items = 5;
  big.payments.assign(32, rat(0));
  CHECK_THROWS_AS(verify_complex_by_intersection(big), SizeGuardError);
}

TEST_CASE("arc lengths") {
  auto ind = independent_sale();
  auto a = arc_length(ind, 0b00, 0b10);
  REQUIRE(a.value.has_value());
  CHECK(*a.value == rat(1));
  CHECK(a.region_full_dim);

  auto b = arc_length(ind, 0b10, 0b00);
  REQUIRE(b.value.has_value());
  CHECK(*b.value == rat(-1));

  for (unsigned v = 0; v < 4; ++v) {
    auto self = arc_length(ind, v, v);
    REQUIRE(self.value.has_value());
    CHECK(*self.value == rat(0));
  }
  CHECK_THROWS_AS(arc_length(ind, 0, 9), InvariantError);
}

TEST_CASE("zero cycles") {
  auto ind = independent_sale();
  auto two = verify_zero_cycles(ind, {0b00, 0b10, 0b00});
  REQUIRE(two.length.has_value());
  CHECK(*two.length == rat(0));
  CHECK(two.adjacent);

  // The all-or-nothing pair shares no cell in the parity mechanism.
  auto tri = verify_zero_cycles(bundle_size_mechanism(), {0, 7, 0});
  CHECK_FALSE(tri.adjacent);

  auto self = verify_zero_cycles(ind, {2, 2});
  REQUIRE(self.length.has_value());
  CHECK(*self.length == rat(0));
  CHECK(self.adjacent);

  CHECK_THROWS_AS(verify_zero_cycles(ind, {0, 1}), InvariantError);  // not closed
}

TEST_CASE("zero-cycle law and arc/price identity on random mechanisms") {
  std::mt19937_64 rng(0xBEEF);
  for (int t = 0; t < 10; ++t) {
    Mechanism mech = random_mechanism(3, rng);
    auto geo = mechanism_geometry(mech);
    const unsigned nb = 8;
    std::vector<std::vector<ArcLength>> arc(nb, std::vector<ArcLength>(nb));
    std::vector<std::vector<char>> adj(nb, std::vector<char>(nb, 0));
    for (unsigned a = 0; a < nb; ++a)
      for (unsigned b = 0; b < nb; ++b) {
        arc[a][b] = arc_length(mech, a, b);
        if (a != b) adj[a][b] = bundle_regions_intersect(mech, {a, b}) ? 1 : 0;
      }
    for (unsigned a = 0; a < nb; ++a)
      for (unsigned b = 0; b < nb; ++b) {
        if (!adj[a][b]) continue;
        // Adjacent arcs equal the payment difference...
        REQUIRE(arc[a][b].value.has_value());
        CHECK(*arc[a][b].value == mech.payments[b] - mech.payments[a]);
        // ...and all two-cycles close at zero.
        CHECK(*arc[a][b].value + *arc[b][a].value == rat(0));
      }
    // Adjacency by LP matches adjacency by shared cells.
    for (unsigned a = 0; a < nb; ++a)
      for (unsigned b = a + 1; b < nb; ++b) {
        std::vector<int> pair{static_cast<int>(a), static_cast<int>(b)};
        CHECK(static_cast<bool>(adj[a][b]) == geo.complex.has_face(pair));
      }
  }
}

TEST_CASE("sensitivities of fixed subdivisions") {
  auto slabs = construct_cardinality_robust(3);
  CHECK(cardinality_sensitivity(slabs.subdivision) == 1);

  Mechanism flat;
  flat.items = 3;
  flat.payments.assign(8, rat(0));
  auto geo = mechanism_geometry(flat);
  REQUIRE(geo.subdivision.cells.size() == 1);
  CHECK(cardinality_sensitivity(geo.subdivision) == 3);
  CHECK(hamming_sensitivity(geo.subdivision) == 3);

  CHECK(cardinality_sensitivity(bundle_size_mechanism()) == 2);
  CHECK(hamming_sensitivity(bundle_size_mechanism()) == 2);
}

TEST_CASE("optimal sensitivity") {
  auto c3 = optimal_sensitivity(3, SensitivityMetric::Cardinality);
  CHECK(c3.exact);
  CHECK(c3.lower == 1);
  CHECK(c3.upper == 1);

  auto h3 = optimal_sensitivity(3, SensitivityMetric::Hamming);
  CHECK(h3.exact);
  CHECK(h3.lower == 2);
  CHECK(h3.upper == 2);

  auto h2 = optimal_sensitivity(2, SensitivityMetric::Hamming);
  CHECK(h2.exact);
  CHECK(h2.lower == 2);

  auto c1 = optimal_sensitivity(1, SensitivityMetric::Cardinality);
  CHECK(c1.lower == 1);

  auto h4 = optimal_sensitivity(4, SensitivityMetric::Hamming);
  CHECK_FALSE(h4.exact);
  CHECK(h4.lower == 2);
  CHECK(h4.upper <= 3);

  auto c4 = optimal_sensitivity(4, SensitivityMetric::Cardinality);
  CHECK_FALSE(c4.exact);
  CHECK(c4.lower == 1);
  CHECK(c4.upper == 1);
}

TEST_CASE("every cell of every three-cube triangulation spans two levels") {
  auto cube = cube_config(3);
  EnumerateOptions opts;
  auto res = enumerate_triangulations(cube, opts);
  REQUIRE(res.total == 74);
  for (const auto& cells : res.representatives) {
    Subdivision s;
    s.config = cube;
    s.cells = cells;
    CHECK(cardinality_sensitivity(s) >= 1);
  }
}

TEST_CASE("cardinality-robust constructions") {
  auto m1 = construct_cardinality_robust(1);
  CHECK(m1.mech.payments == QVec{rat(0), rat(1)});
  CHECK(m1.subdivision.cells == CellList{{0, 1}});
  CHECK(cardinality_sensitivity(m1.subdivision) == 1);

  auto m2 = construct_cardinality_robust(2);
  CHECK(m2.mech.payments == QVec{rat(0), rat(1), rat(1), rat(4)});
  CHECK(m2.subdivision.cells == CellList{{0, 1, 2}, {1, 2, 3}});

  auto m3 = construct_cardinality_robust(3);
  REQUIRE(m3.subdivision.cells.size() == 3);
  for (int k = 1; k <= 3; ++k) {
    for (int v : m3.subdivision.cells[k - 1]) {
      int s = std::popcount(static_cast<unsigned>(v));
      CHECK((s == k - 1 || s == k));
    }
  }
}

TEST_CASE("hamming-robust constructions") {
  auto m3 = construct_hamming_robust(3);
  // Big cell on the even bundles plus a cornered simplex at each odd vertex.
  CellList expected = {{0, 1, 3, 5}, {0, 2, 3, 6}, {0, 3, 5, 6}, {0, 4, 5, 6}, {3, 5, 6, 7}};
  CHECK(m3.subdivision.cells == expected);
  CHECK(hamming_sensitivity(m3.subdivision) == 2);

  auto m4 = construct_hamming_robust(4);
  for (const auto& cell : m4.subdivision.cells)
    for (std::size_t i = 0; i < cell.size(); ++i)
      for (std::size_t j = i + 1; j < cell.size(); ++j)
        CHECK((static_cast<unsigned>(cell[i]) ^ static_cast<unsigned>(cell[j])) != 15u);

  auto m5 = construct_hamming_robust(5);
  CHECK(hamming_sensitivity(m5.subdivision) <= 4);

  CHECK_THROWS_AS(construct_hamming_robust(2), InvariantError);
}
