#include <random>

#include "doctest.h"
#include "tropmech/errors.hpp"
#include "tropmech/lp.hpp"
#include "tropmech/rational.hpp"

using namespace tropmech;

TEST_CASE("rational parsing and printing") {
  CHECK(rational_to_string(parse_rational("3/6")) == "1/2");
  CHECK(rational_to_string(parse_rational("-4/8")) == "-1/2");
  CHECK(rational_to_string(parse_rational("7")) == "7");
  CHECK(rational_to_string(rat(0, 5)) == "0");
  CHECK(parse_rational("5/6").get_den() == 6);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK(rat_pow(rat(1, 2), 10) == rat(1, 1024));
}

TEST_CASE("one-constraint program") {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.constraints.push_back({{rat(1)}, Relation::GreaterEq, rat(1)});
  lp.objective = {rat(1)};
  auto out = lp_solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.optimum == rat(1));
  CHECK(out.witness[0] == rat(1));
}

TEST_CASE("unbounded ray") {
  LinearProgram lp;
  lp.num_vars = 1;
  lp.constraints.push_back({{rat(1)}, Relation::GreaterEq, rat(0)});
  lp.objective = {rat(-1)};
  auto out = lp_solve(lp);
  REQUIRE(out.status == LpStatus::Unbounded);
  // The ray must stay feasible and strictly improve the objective.
  CHECK(out.witness[0] > 0);
}

TEST_CASE("minimum over a two-item difference region") {
  // min t1 over the region of bundle 10 for payments 0,1,1,2; the optimum is
  // the item price, matching the hand reduction t1 >= 1, t1 >= t2, t2 <= 1.
  LinearProgram lp;
  lp.num_vars = 2;
  lp.constraints.push_back({{rat(1), rat(0)}, Relation::GreaterEq, rat(1)});    // t1 - 1 >= 0
  lp.constraints.push_back({{rat(1), rat(-1)}, Relation::GreaterEq, rat(0)});   // t1 >= t2
  lp.constraints.push_back({{rat(0), rat(-1)}, Relation::GreaterEq, rat(-1)});  // t2 <= 1
  lp.objective = {rat(1), rat(0)};
  auto out = lp_solve(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.optimum == rat(1));
}

TEST_CASE("strict feasibility") {
  StrictSystem open_interval;
  open_interval.num_vars = 1;
  open_interval.constraints.push_back({{rat(1)}, Relation::GreaterEq, rat(0), true});    // x > 0
  open_interval.constraints.push_back({{rat(-1)}, Relation::GreaterEq, rat(-1), true});  // x < 1
  auto out = lp_feasible_strict(open_interval);
  REQUIRE(out.feasible);
  CHECK(out.witness[0] > 0);
  CHECK(out.witness[0] < 1);

  StrictSystem empty;
  empty.num_vars = 1;
  empty.constraints.push_back({{rat(1)}, Relation::GreaterEq, rat(0), true});   // x > 0
  empty.constraints.push_back({{rat(-1)}, Relation::GreaterEq, rat(0), true});  // x < 0
  CHECK_FALSE(lp_feasible_strict(empty).feasible);
}

TEST_CASE("malformed programs are rejected") {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.constraints.push_back({{rat(1)}, Relation::GreaterEq, rat(0)});  // wrong width
  lp.objective = {rat(1), rat(0)};
  CHECK_THROWS_AS(lp_solve(lp), InvariantError);
}

namespace {

LinearProgram random_program(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nv(1, 4), nc(2, 8), coeff(-5, 5), den(1, 10);
  std::uniform_int_distribution<int> rel(0, 4);
  LinearProgram lp;
  lp.num_vars = nv(rng);
  int rows = nc(rng);
  for (int i = 0; i < rows; ++i) {
    LinearConstraint con;
    for (int j = 0; j < lp.num_vars; ++j) con.coeffs.push_back(rat(coeff(rng), den(rng)));
    con.rhs = rat(coeff(rng), den(rng));
    con.rel = rel(rng) == 0 ? Relation::Eq : Relation::GreaterEq;
    lp.constraints.push_back(con);
  }
  // Duplicated constraints keep the solver honest about degeneracy.
  lp.constraints.push_back(lp.constraints.front());
  for (int j = 0; j < lp.num_vars; ++j) lp.objective.push_back(rat(coeff(rng), den(rng)));
  return lp;
}

}  // namespace

TEST_CASE("random programs: exact witnesses and min/max duality") {
  std::mt19937_64 rng(20240817);
  int optimal_seen = 0;
  for (int t = 0; t < 100; ++t) {
    LinearProgram lp = random_program(rng);
    auto out = lp_solve(lp);
    if (out.status == LpStatus::Optimal) {
      ++optimal_seen;
      // Substitution reproduces every constraint exactly.
      for (const auto& con : lp.constraints) {
        Rational lhs = dot(con.coeffs, out.witness);
        if (con.rel == Relation::Eq)
          CHECK(lhs == con.rhs);
        else
          CHECK(lhs >= con.rhs);
      }
      CHECK(dot(lp.objective, out.witness) == out.optimum);
    } else if (out.status == LpStatus::Unbounded) {
      // The ray is feasible for the homogenized system and improves.
      for (const auto& con : lp.constraints) {
        Rational lhs = dot(con.coeffs, out.witness);
        if (con.rel == Relation::Eq)
          CHECK(lhs == 0);
        else
          CHECK(lhs >= 0);
      }
      CHECK(dot(lp.objective, out.witness) < 0);
    }

    LinearProgram flipped = lp;
    flipped.sense = Sense::Maximize;
    for (auto& c : flipped.objective) c = -c;
    auto out2 = lp_solve(flipped);
    CHECK(out2.status == out.status);
    if (out.status == LpStatus::Optimal) CHECK(out2.optimum == -out.optimum);
  }
  CHECK(optimal_seen > 10);  // the generator must exercise the optimal path
}
