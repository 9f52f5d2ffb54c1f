#include "tropmech/mechanism.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "tropmech/errors.hpp"
#include "tropmech/lp.hpp"

namespace tropmech {

namespace {

void check_mechanism(const Mechanism& mech) {
  if (mech.items < 1 || mech.items > 10)
    throw InvariantError("mechanism: item count out of range [1,10]");
  if (mech.payments.size() != (1u << mech.items))
    throw InvariantError("mechanism: need exactly 2^m payments");
}

}  // namespace

std::vector<std::vector<std::string>> IndifferenceComplex::facet_labels() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& f : facets) {
    std::vector<std::string> lbl;
    for (int idx : f) lbl.push_back(ground[idx]);
    out.push_back(std::move(lbl));
  }
  return out;
}

bool IndifferenceComplex::has_face(const std::vector<int>& subset) const {
  for (const auto& f : facets)
    if (std::includes(f.begin(), f.end(), subset.begin(), subset.end())) return true;
  return false;
}

TropicalPolynomial utility_polynomial(const Mechanism& mech) {
  check_mechanism(mech);
  TropicalPolynomial p;
  PointConfiguration cube = cube_config(mech.items);
  for (std::size_t a = 0; a < cube.size(); ++a) {
    p.support.push_back(cube.points[a]);
    p.coeffs.push_back(-mech.payments[a]);
  }
  return p;
}

MechanismGeometry mechanism_geometry(const Mechanism& mech) {
  check_mechanism(mech);
  MechanismGeometry geo;
  PointConfiguration cube = cube_config(mech.items);
  Lifting lift;
  for (const auto& p : mech.payments) lift.heights.push_back(-p);
  geo.subdivision = regular_subdivision(cube, lift);
  geo.complex.ground = cube.labels;
  geo.complex.facets = geo.subdivision.cells;
  geo.nondegenerate = geo.subdivision.is_triangulation();
  return geo;
}

IndifferenceComplex indifference_complex(const Mechanism& mech) {
  return mechanism_geometry(mech).complex;
}

// The regions of all bundles in `subset` intersect iff some type makes all
// of them simultaneously utility-maximizing.
bool bundle_regions_intersect(const Mechanism& mech, const std::vector<unsigned>& subset) {
  const int m = mech.items;
  const unsigned nb = 1u << m;
  LinearProgram lp;
  lp.num_vars = m + 1;  // type and the common maximum t
  std::set<unsigned> members(subset.begin(), subset.end());
  for (unsigned v = 0; v < nb; ++v) {
    LinearConstraint con;
    con.coeffs.assign(m + 1, Rational(0));
    for (int j = 0; j < m; ++j)
      if (v & (1u << (m - 1 - j))) con.coeffs[j] = 1;
    con.coeffs[m] = -1;
    con.rhs = mech.payments[v];
    if (members.count(v)) {
      con.rel = Relation::Eq;  // theta . v - p_v = t
    } else {
      // theta . v - p_v <= t
      for (auto& c : con.coeffs) c = -c;
      con.rhs = -con.rhs;
      con.rel = Relation::GreaterEq;
    }
    lp.constraints.push_back(std::move(con));
  }
  lp.objective.assign(lp.num_vars, Rational(0));
  return lp_solve(lp).status == LpStatus::Optimal;
}

bool verify_complex_by_intersection(const Mechanism& mech) {
  check_mechanism(mech);
  if (mech.items > 4) throw SizeGuardError("verify_complex_by_intersection: m <= 4 only");
  const unsigned nb = 1u << mech.items;
  IndifferenceComplex complex = indifference_complex(mech);
  std::vector<char> known_empty(1u << nb, 0);
  for (unsigned mask = 1; mask < (1u << nb); ++mask) {
    // If a subset already fails, every superset fails on both sides.
    bool skip = false;
    for (unsigned v = 0; v < nb && !skip; ++v)
      if ((mask & (1u << v)) && known_empty[mask & ~(1u << v)]) skip = true;
    if (skip) {
      known_empty[mask] = 1;
      continue;
    }
    std::vector<unsigned> subset;
    std::vector<int> subset_idx;
    for (unsigned v = 0; v < nb; ++v)
      if (mask & (1u << v)) {
        subset.push_back(v);
        subset_idx.push_back(static_cast<int>(v));
      }
    bool lp_says = bundle_regions_intersect(mech, subset);
    bool complex_says = complex.has_face(subset_idx);
    if (lp_says != complex_says) return false;
    if (!lp_says) known_empty[mask] = 1;
  }
  return true;
}

ArcLength arc_length(const Mechanism& mech, unsigned a, unsigned b) {
  check_mechanism(mech);
  const int m = mech.items;
  const unsigned nb = 1u << m;
  if (a >= nb || b >= nb) throw InvariantError("arc_length: bundle out of range");
  LinearProgram lp;
  lp.num_vars = m;
  for (unsigned v = 0; v < nb; ++v) {
    if (v == b) continue;
    LinearConstraint con;  // theta . (b - v) >= p_b - p_v
    con.coeffs.assign(m, Rational(0));
    for (int j = 0; j < m; ++j) {
      int bj = (b >> (m - 1 - j)) & 1u;
      int vj = (v >> (m - 1 - j)) & 1u;
      con.coeffs[j] = bj - vj;
    }
    con.rhs = mech.payments[b] - mech.payments[v];
    lp.constraints.push_back(std::move(con));
  }
  lp.objective.assign(m, Rational(0));
  for (int j = 0; j < m; ++j) {
    int bj = (b >> (m - 1 - j)) & 1u;
    int aj = (a >> (m - 1 - j)) & 1u;
    lp.objective[j] = bj - aj;
  }
  lp.sense = Sense::Minimize;
  auto out = lp_solve(lp);
  ArcLength arc;
  if (out.status == LpStatus::Infeasible) return arc;  // +infinity
  if (out.status == LpStatus::Unbounded)
    throw InvariantError("arc_length: objective unbounded on a difference region");
  arc.value = out.optimum;
  // Interior witness distinguishes a full-dimensional region from a tie set.
  TropicalPolynomial up = utility_polynomial(mech);
  arc.region_full_dim = region(up, static_cast<int>(b)).full_dimensional();
  return arc;
}

AllocationNetwork allocation_network(const Mechanism& mech) {
  check_mechanism(mech);
  AllocationNetwork net;
  net.items = mech.items;
  const unsigned nb = 1u << mech.items;
  net.arc.assign(nb, std::vector<ArcLength>(nb));
  for (unsigned a = 0; a < nb; ++a)
    for (unsigned b = 0; b < nb; ++b) net.arc[a][b] = arc_length(mech, a, b);
  return net;
}

CycleCheck verify_zero_cycles(const Mechanism& mech, const std::vector<unsigned>& cycle) {
  check_mechanism(mech);
  if (cycle.size() < 2 || cycle.front() != cycle.back())
    throw InvariantError("verify_zero_cycles: cycle must be closed (first == last)");
  CycleCheck out;
  Rational total(0);
  bool finite = true;
  bool adjacent = true;
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    ArcLength arc = arc_length(mech, cycle[i], cycle[i + 1]);
    if (!arc.value)
      finite = false;
    else
      total += *arc.value;
    std::vector<unsigned> pair{cycle[i], cycle[i + 1]};
    if (cycle[i] == cycle[i + 1]) pair.pop_back();
    if (!bundle_regions_intersect(mech, pair)) adjacent = false;
  }
  if (finite) out.length = total;
  out.adjacent = adjacent;
  return out;
}

int cardinality_distance(unsigned a, unsigned b) {
  int da = std::popcount(a), db = std::popcount(b);
  return da > db ? da - db : db - da;
}

int hamming_distance(unsigned a, unsigned b) { return std::popcount(a ^ b); }

namespace {

int cell_distance_max(const Subdivision& s, int (*dist)(unsigned, unsigned)) {
  if (s.config.kind != ConfigKind::Cube)
    throw InvariantError("sensitivity: cube configuration required");
  int best = 0;
  for (const auto& cell : s.cells)
    for (std::size_t i = 0; i < cell.size(); ++i)
      for (std::size_t j = i + 1; j < cell.size(); ++j)
        best = std::max(best, dist(static_cast<unsigned>(cell[i]),
                                   static_cast<unsigned>(cell[j])));
  return best;
}

}  // namespace

int cardinality_sensitivity(const Subdivision& s) {
  return cell_distance_max(s, &cardinality_distance);
}
int hamming_sensitivity(const Subdivision& s) { return cell_distance_max(s, &hamming_distance); }
int cardinality_sensitivity(const Mechanism& mech) {
  return cardinality_sensitivity(mechanism_geometry(mech).subdivision);
}
int hamming_sensitivity(const Mechanism& mech) {
  return hamming_sensitivity(mechanism_geometry(mech).subdivision);
}

SensitivityBound optimal_sensitivity(int m, SensitivityMetric metric) {
  if (m < 1) throw InvariantError("optimal_sensitivity: m >= 1 required");
  auto dist = metric == SensitivityMetric::Cardinality ? &cardinality_distance : &hamming_distance;
  if (m <= 3) {
    PointConfiguration cube = cube_config(m);
    EnumerateOptions opts;
    EnumerateResult res = enumerate_triangulations(cube, opts);
    int best = -1;
    for (const auto& cells : res.representatives) {
      Subdivision s;
      s.config = cube;
      s.cells = cells;
      int v = cell_distance_max(s, dist);
      if (best < 0 || v < best) best = v;
    }
    return {best, best, true};
  }
  // Bracket: the general lower bound and the explicit construction's value.
  if (metric == SensitivityMetric::Cardinality) {
    RobustConstruction rc = construct_cardinality_robust(m);
    return {1, cardinality_sensitivity(rc.subdivision), false};
  }
  RobustConstruction rc = construct_hamming_robust(m);
  return {2, hamming_sensitivity(rc.subdivision), false};
}

Integer coordinate_sum_slab_volume(int m, int k) {
  // Number of permutations of [m] with k-1 descents.
  if (k < 1 || k > m) return 0;
  std::vector<Integer> row{Integer(1)};  // m = 1
  for (int mm = 2; mm <= m; ++mm) {
    std::vector<Integer> next(mm, Integer(0));
    for (int j = 0; j < mm; ++j) {
      if (j < mm - 1) next[j] += Integer(j + 1) * row[j];
      if (j > 0) next[j] += Integer(mm - j) * row[j - 1];
    }
    row = std::move(next);
  }
  return row[k - 1];
}

namespace {

Integer factorial(int m) {
  Integer f(1);
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

RobustConstruction finish_construction(int m, QVec payments, CellList cells,
                                       std::vector<Integer> volumes) {
  RobustConstruction rc;
  rc.mech.items = m;
  rc.mech.payments = payments;
  for (const auto& p : payments) rc.lifting.heights.push_back(-p);
  PointConfiguration cube = cube_config(m);
  std::sort(cells.begin(), cells.end());

  if (!verify_cells_of_lifting(cube, rc.lifting, cells, volumes, factorial(m)))
    throw InvariantError("robust construction: cell certification failed");
  // Cross-check against the direct computation while it is cheap.
  if (m <= 4) {
    Subdivision direct = regular_subdivision(cube, rc.lifting);
    if (direct.cells != cells)
      throw InvariantError("robust construction: cells disagree with direct subdivision");
  }
  rc.subdivision.config = std::move(cube);
  rc.subdivision.cells = std::move(cells);
  return rc;
}

}  // namespace

RobustConstruction construct_cardinality_robust(int m) {
  if (m < 1 || m > 10) throw InvariantError("construct_cardinality_robust: m out of range");
  const unsigned nb = 1u << m;
  QVec payments(nb);
  for (unsigned a = 0; a < nb; ++a) {
    long s = std::popcount(a);
    payments[a] = Rational(s * s);
  }
  CellList cells;
  std::vector<Integer> volumes;
  for (int k = 1; k <= m; ++k) {
    Cell cell;  // bundles of size k-1 or k
    for (unsigned a = 0; a < nb; ++a)
      if (std::popcount(a) == k - 1 || std::popcount(a) == k) cell.push_back(static_cast<int>(a));
    std::sort(cell.begin(), cell.end());
    cells.push_back(std::move(cell));
    volumes.push_back(coordinate_sum_slab_volume(m, k));
  }
  return finish_construction(m, std::move(payments), std::move(cells), std::move(volumes));
}

RobustConstruction construct_hamming_robust(int m) {
  if (m < 3 || m > 10) throw InvariantError("construct_hamming_robust: m >= 3 required");
  const unsigned nb = 1u << m;
  QVec payments(nb);

  if (m % 2 == 1) {
    for (unsigned a = 0; a < nb; ++a) payments[a] = Rational(std::popcount(a) % 2);
    CellList cells;
    std::vector<Integer> volumes;
    Cell big;
    for (unsigned a = 0; a < nb; ++a)
      if (std::popcount(a) % 2 == 0) big.push_back(static_cast<int>(a));
    PointConfiguration cube = cube_config(m);
    volumes.push_back(pointset_norm_volume(cube, big));
    cells.push_back(std::move(big));
    for (unsigned a = 0; a < nb; ++a) {
      if (std::popcount(a) % 2 == 0) continue;
      Cell corner{static_cast<int>(a)};  // odd vertex with its cube neighbors
      for (int j = 0; j < m; ++j) corner.push_back(static_cast<int>(a ^ (1u << j)));
      std::sort(corner.begin(), corner.end());
      volumes.push_back(simplex_norm_volume(cube, corner));
      cells.push_back(std::move(corner));
    }
    return finish_construction(m, std::move(payments), std::move(cells), std::move(volumes));
  }

  // Even m: prisms over the (m-1)-construction along the last coordinate.
  RobustConstruction base = construct_hamming_robust(m - 1);
  for (unsigned a = 0; a < nb; ++a) payments[a] = base.mech.payments[a >> 1];
  CellList cells;
  std::vector<Integer> volumes;
  for (std::size_t ci = 0; ci < base.subdivision.cells.size(); ++ci) {
    const auto& bc = base.subdivision.cells[ci];
    Cell prism;
    for (int v : bc) {
      prism.push_back(v << 1);
      prism.push_back((v << 1) | 1);
    }
    std::sort(prism.begin(), prism.end());
    cells.push_back(std::move(prism));
    // A prism multiplies the normalized volume by the new dimension.
    volumes.push_back(Integer(m) * pointset_norm_volume(base.subdivision.config,
                                                        base.subdivision.cells[ci]));
  }
  return finish_construction(m, std::move(payments), std::move(cells), std::move(volumes));
}

}  // namespace tropmech
