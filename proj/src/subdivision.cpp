#include "tropmech/subdivision.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "tropmech/errors.hpp"
#include "tropmech/linalg.hpp"
#include "tropmech/lp.hpp"

namespace tropmech {

bool Subdivision::is_triangulation() const {
  for (const auto& c : cells)
    if (static_cast<int>(c.size()) != config.affine_dim + 1) return false;
  return true;
}

namespace {

// Heights scaled to integers; scaling all heights by a positive constant
// does not change the subdivision.
ZVec integral_heights(const QVec& heights) {
  Integer lcm(1);
  for (const auto& h : heights) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), h.get_den().get_mpz_t());
  ZVec out(heights.size());
  for (std::size_t i = 0; i < heights.size(); ++i) {
    Integer f;
    mpz_divexact(f.get_mpz_t(), lcm.get_mpz_t(), heights[i].get_den().get_mpz_t());
    out[i] = heights[i].get_num() * f;
  }
  return out;
}

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > cap) return cap + 1;
    r = r * (n - i) / (i + 1);
  }
  return r;
}

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Subdivision regular_subdivision(const PointConfiguration& cfg, const Lifting& lifting,
                                std::size_t subset_guard) {
  const int n = static_cast<int>(cfg.size());
  const int d = cfg.affine_dim;
  if (n < 2 || d < 1) throw InvariantError("regular_subdivision: degenerate configuration");
  if (static_cast<int>(lifting.heights.size()) != n)
    throw InvariantError("regular_subdivision: lifting length mismatch");
  if (binomial_capped(n, d + 1, subset_guard) > subset_guard)
    throw SizeGuardError("regular_subdivision: configuration too large for subset enumeration");

  ZVec h = integral_heights(lifting.heights);
  ZMat lifted(n, ZVec(d + 1));
  for (int i = 0; i < n; ++i) {
    auto c = cfg.chart(i);
    for (int j = 0; j < d; ++j) lifted[i][j] = c[j];
    lifted[i][d] = h[i];
  }

  std::set<Cell> cells;
  std::vector<int> idx(d + 1);
  for (int i = 0; i <= d; ++i) idx[i] = i;
  do {
    ZMat diffs(d, ZVec(d + 1));
    for (int r = 0; r < d; ++r)
      for (int j = 0; j <= d; ++j) diffs[r][j] = lifted[idx[r + 1]][j] - lifted[idx[0]][j];
    ZVec normal = cross_normal(diffs);
    if (sgn(normal[d]) == 0) continue;  // vertical or degenerate subset
    if (sgn(normal[d]) < 0)
      for (auto& z : normal) z = -z;
    Integer v0 = dot(normal, lifted[idx[0]]);
    Cell on_set;
    bool upper = true;
    for (int i = 0; i < n && upper; ++i) {
      Integer v = dot(normal, lifted[i]);
      int s = cmp(v, v0);
      if (s > 0)
        upper = false;
      else if (s == 0)
        on_set.push_back(i);
    }
    if (upper) cells.insert(std::move(on_set));
  } while (next_combination(idx, n));

  Subdivision s;
  s.config = cfg;
  s.cells.assign(cells.begin(), cells.end());
  return s;
}

bool cells_intersect_properly(const PointConfiguration& cfg, const Cell& a, const Cell& b) {
  const int d = cfg.affine_dim;
  std::vector<int> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
  std::set<int> shared_set(shared.begin(), shared.end());

  // Variables (h, c): h tight exactly on the shared points, conv(a) weakly
  // below and conv(b) weakly above, strictly off the shared set.
  StrictSystem sys;
  sys.num_vars = d + 1;
  auto row = [&](int point, int orient, bool strict) {
    StrictConstraint con;
    con.coeffs.assign(d + 1, Rational(0));
    auto ch = cfg.chart(point);
    for (int j = 0; j < d; ++j) con.coeffs[j] = orient * ch[j];
    con.coeffs[d] = -orient;
    con.rhs = 0;
    con.rel = orient == 0 ? Relation::Eq : Relation::GreaterEq;
    con.strict = strict;
    if (orient == 0) {
      for (int j = 0; j < d; ++j) con.coeffs[j] = ch[j];
      con.coeffs[d] = -1;
    }
    sys.constraints.push_back(std::move(con));
  };
  for (int p : shared) row(p, 0, false);
  for (int p : a)
    if (!shared_set.count(p)) row(p, -1, true);
  for (int p : b)
    if (!shared_set.count(p)) row(p, +1, true);
  if (sys.constraints.empty()) return true;  // identical cells are handled by nesting checks
  return lp_feasible_strict(sys).feasible;
}

std::vector<std::string> validate_subdivision(const Subdivision& s) {
  std::vector<std::string> bad;
  const auto& cfg = s.config;
  const int n = static_cast<int>(cfg.size());
  const int d = cfg.affine_dim;
  if (s.cells.empty()) {
    bad.push_back("subdivision has no cells");
    return bad;
  }
  for (std::size_t ci = 0; ci < s.cells.size(); ++ci) {
    const auto& c = s.cells[ci];
    if (c.empty() || !std::is_sorted(c.begin(), c.end()) ||
        std::adjacent_find(c.begin(), c.end()) != c.end() || c.front() < 0 || c.back() >= n) {
      bad.push_back("cell " + std::to_string(ci) + " has invalid indices");
      continue;
    }
    ZMat diffs;
    for (std::size_t k = 1; k < c.size(); ++k) {
      ZVec row(d);
      auto p = cfg.chart(c[k]);
      auto p0 = cfg.chart(c[0]);
      for (int j = 0; j < d; ++j) row[j] = p[j] - p0[j];
      diffs.push_back(std::move(row));
    }
    if (int_rank(diffs) != d)
      bad.push_back("cell " + std::to_string(ci) + " does not span the full affine dimension");
  }
  if (!bad.empty()) return bad;

  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    for (std::size_t j = i + 1; j < s.cells.size(); ++j) {
      if (std::includes(s.cells[i].begin(), s.cells[i].end(), s.cells[j].begin(),
                        s.cells[j].end()) ||
          std::includes(s.cells[j].begin(), s.cells[j].end(), s.cells[i].begin(),
                        s.cells[i].end())) {
        bad.push_back("cells " + std::to_string(i) + " and " + std::to_string(j) + " are nested");
        continue;
      }
      if (!cells_intersect_properly(cfg, s.cells[i], s.cells[j]))
        bad.push_back("cells " + std::to_string(i) + " and " + std::to_string(j) +
                      " do not intersect in a common face");
    }
  }
  if (!bad.empty()) return bad;

  Integer total(0);
  for (const auto& c : s.cells) total += pointset_norm_volume(cfg, c);
  Integer hull = hull_norm_volume(cfg);
  if (total != hull)
    bad.push_back("cell volumes sum to " + integer_to_string(total) + ", hull volume is " +
                  integer_to_string(hull));
  return bad;
}

namespace {

// First d+1 affinely independent members of a cell, in chart coordinates.
std::vector<int> affine_basis_of_cell(const PointConfiguration& cfg, const Cell& cell) {
  const int d = cfg.affine_dim;
  std::vector<int> basis;
  ZMat rows;
  for (int p : cell) {
    if (basis.empty()) {
      basis.push_back(p);
      continue;
    }
    ZVec row(d);
    auto ch = cfg.chart(p);
    auto ch0 = cfg.chart(basis[0]);
    for (int j = 0; j < d; ++j) row[j] = ch[j] - ch0[j];
    ZMat trial = rows;
    trial.push_back(row);
    if (int_rank(trial) == static_cast<int>(trial.size())) {
      rows = std::move(trial);
      basis.push_back(p);
      if (static_cast<int>(basis.size()) == d + 1) break;
    }
  }
  if (static_cast<int>(basis.size()) != d + 1)
    throw InvariantError("cell does not span the full affine dimension");
  return basis;
}

// Barycentric coordinates of `point` with respect to the affine basis.
QVec barycentric(const PointConfiguration& cfg, const std::vector<int>& basis, int point) {
  const int d = cfg.affine_dim;
  QMat a(d + 1, QVec(d + 1));
  for (int k = 0; k <= d; ++k) {
    auto ch = cfg.chart(basis[k]);
    for (int j = 0; j < d; ++j) a[j][k] = ch[j];
    a[d][k] = 1;
  }
  QVec b(d + 1);
  auto ch = cfg.chart(point);
  for (int j = 0; j < d; ++j) b[j] = ch[j];
  b[d] = 1;
  auto res = solve_linear(std::move(a), std::move(b));
  if (res.status != SolveStatus::Unique) throw InvariantError("barycentric solve failed");
  return res.x;
}

}  // namespace

RegularityResult is_regular(const PointConfiguration& cfg, const Subdivision& s) {
  auto bad = validate_subdivision(s);
  if (!bad.empty()) throw InvariantError("invalid-subdivision: " + bad.front());
  const int n = static_cast<int>(cfg.size());

  // Unknowns are the heights. Each cell pins an affine function through the
  // heights of an affine basis; remaining cell members must agree with it and
  // all other points must sit strictly below.
  StrictSystem sys;
  sys.num_vars = n;
  for (const auto& cell : s.cells) {
    auto basis = affine_basis_of_cell(cfg, cell);
    std::set<int> in_cell(cell.begin(), cell.end());
    std::set<int> in_basis(basis.begin(), basis.end());
    for (int w = 0; w < n; ++w) {
      if (in_basis.count(w)) continue;
      QVec gamma = barycentric(cfg, basis, w);
      StrictConstraint con;
      con.coeffs.assign(n, Rational(0));
      for (int k = 0; k <= cfg.affine_dim; ++k) con.coeffs[basis[k]] += gamma[k];
      con.coeffs[w] -= 1;
      con.rhs = 0;
      if (in_cell.count(w)) {
        con.rel = Relation::Eq;
      } else {
        con.rel = Relation::GreaterEq;
        con.strict = true;
      }
      sys.constraints.push_back(std::move(con));
    }
  }
  if (sys.constraints.empty()) {
    // Single cell over an affinely independent point set: any lifting works.
    RegularityResult r;
    r.regular = true;
    r.witness.heights.assign(n, Rational(0));
    return r;
  }
  auto out = lp_feasible_strict(sys);
  RegularityResult r;
  r.regular = out.feasible;
  if (out.feasible) r.witness.heights = out.witness;
  return r;
}

Subdivision refine_to_triangulation(const PointConfiguration& cfg, const Subdivision& s,
                                    const Lifting& witness) {
  Subdivision check = regular_subdivision(cfg, witness);
  CellList sorted_input = s.cells;
  std::sort(sorted_input.begin(), sorted_input.end());
  if (check.cells != sorted_input)
    throw InvariantError("refine_to_triangulation: witness does not induce the subdivision");
  const int n = static_cast<int>(cfg.size());
  const int d = cfg.affine_dim;
  Rational eps(1, 4);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Lifting perturbed;
    perturbed.heights.resize(n);
    for (int i = 0; i < n; ++i)
      perturbed.heights[i] = witness.heights[i] + rat_pow(eps, static_cast<unsigned>(i + 1));
    Subdivision t = regular_subdivision(cfg, perturbed);
    bool ok = true;
    for (const auto& cell : t.cells) {
      if (static_cast<int>(cell.size()) != d + 1) {
        ok = false;
        break;
      }
      bool inside = false;
      for (const auto& coarse : s.cells) {
        if (std::includes(coarse.begin(), coarse.end(), cell.begin(), cell.end())) {
          inside = true;
          break;
        }
      }
      if (!inside) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
    eps /= 2;
  }
  throw InvariantError("refine_to_triangulation: no admissible perturbation found");
}

CellList canonical_cells(const CellList& cells, const SymmetryGroup& group) {
  CellList best;
  bool have = false;
  for (const auto& g : group.elements) {
    CellList image;
    image.reserve(cells.size());
    for (const auto& cell : cells) {
      Cell c;
      c.reserve(cell.size());
      for (int idx : cell) c.push_back(g.index_perm[idx]);
      std::sort(c.begin(), c.end());
      image.push_back(std::move(c));
    }
    std::sort(image.begin(), image.end());
    if (!have || image < best) {
      best = std::move(image);
      have = true;
    }
  }
  if (!have) {
    best = cells;
    std::sort(best.begin(), best.end());
  }
  return best;
}

Subdivision canonicalize(const Subdivision& s, const SymmetryGroup& group) {
  for (const auto& g : group.elements)
    if (g.index_perm.size() != s.config.size())
      throw InvariantError("canonicalize: group does not act on this configuration");
  Subdivision out;
  out.config = s.config;
  out.cells = canonical_cells(s.cells, group);
  return out;
}

Integer simplex_norm_volume(const PointConfiguration& cfg, const Cell& cell) {
  const int d = cfg.affine_dim;
  if (static_cast<int>(cell.size()) != d + 1)
    throw InvariantError("simplex_norm_volume: cell is not a simplex candidate");
  ZMat m(d, ZVec(d));
  auto p0 = cfg.chart(cell[0]);
  for (int r = 0; r < d; ++r) {
    auto p = cfg.chart(cell[r + 1]);
    for (int j = 0; j < d; ++j) m[r][j] = p[j] - p0[j];
  }
  Integer det = det_bareiss(std::move(m));
  return sgn(det) < 0 ? Integer(-det) : det;
}

Integer pointset_norm_volume(const PointConfiguration& cfg, const std::vector<int>& subset) {
  const int d = cfg.affine_dim;
  if (static_cast<int>(subset.size()) == d + 1) return simplex_norm_volume(cfg, subset);

  // Triangulate the sub-configuration with a generic lifting (retrying on
  // the rare non-generic draw) and sum simplex volumes. The sub-configuration
  // inherits the parent chart so volumes stay comparable.
  PointConfiguration sub;
  sub.dimension = cfg.dimension;
  for (int p : subset) {
    sub.points.push_back(cfg.points[p]);
    sub.labels.push_back(cfg.labels[p]);
  }
  sub.finalize();
  sub.chart_cols = cfg.chart_cols;
  sub.affine_dim = d;
  {
    ZMat diffs;
    for (std::size_t k = 1; k < subset.size(); ++k) {
      ZVec row(d);
      auto p = cfg.chart(subset[k]);
      auto p0 = cfg.chart(subset[0]);
      for (int j = 0; j < d; ++j) row[j] = p[j] - p0[j];
      diffs.push_back(std::move(row));
    }
    if (int_rank(diffs) != d) return 0;
  }

  std::mt19937_64 rng(0xC0FFEEULL);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::uniform_int_distribution<long> dist(0, 1000L * static_cast<long>(subset.size()) *
                                                    (attempt + 1));
    Lifting lift;
    lift.heights.resize(subset.size());
    for (auto& hv : lift.heights) hv = Rational(dist(rng));
    Subdivision t = regular_subdivision(sub, lift);
    bool simplicial = true;
    for (const auto& c : t.cells)
      if (static_cast<int>(c.size()) != d + 1) {
        simplicial = false;
        break;
      }
    if (!simplicial) continue;
    Integer total(0);
    for (const auto& c : t.cells) total += simplex_norm_volume(sub, c);
    return total;
  }
  throw InvariantError("pointset_norm_volume: no generic lifting found");
}

Integer hull_norm_volume(const PointConfiguration& cfg) {
  std::vector<int> all(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) all[i] = static_cast<int>(i);
  return pointset_norm_volume(cfg, all);
}

bool verify_cells_of_lifting(const PointConfiguration& cfg, const Lifting& lifting,
                             const CellList& cells, const std::vector<Integer>& cell_volumes,
                             const Integer& hull_volume) {
  if (cells.size() != cell_volumes.size()) return false;
  const int n = static_cast<int>(cfg.size());
  const int d = cfg.affine_dim;
  Integer total(0);
  for (const auto& v : cell_volumes) total += v;
  if (total != hull_volume) return false;

  for (const auto& cell : cells) {
    std::set<int> members(cell.begin(), cell.end());
    StrictSystem sys;
    sys.num_vars = d + 2;  // affine function (a, b) and the slack
    for (int w = 0; w < n; ++w) {
      StrictConstraint con;
      con.coeffs.assign(d + 2, Rational(0));
      auto ch = cfg.chart(w);
      for (int j = 0; j < d; ++j) con.coeffs[j] = ch[j];
      con.coeffs[d] = 1;
      con.rhs = lifting.heights[w];
      if (members.count(w)) {
        con.rel = Relation::Eq;
      } else {
        con.rel = Relation::GreaterEq;
        con.strict = true;
      }
      sys.constraints.push_back(std::move(con));
    }
    if (!lp_feasible_strict(sys).feasible) return false;
  }
  return true;
}

}  // namespace tropmech
