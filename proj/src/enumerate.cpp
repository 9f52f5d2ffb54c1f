#include <algorithm>
#include <future>
#include <map>
#include <random>
#include <set>

#include "tropmech/errors.hpp"
#include "tropmech/linalg.hpp"
#include "tropmech/lp.hpp"
#include "tropmech/subdivision.hpp"

namespace tropmech {

namespace {

struct Candidate {
  Cell verts;   // d+1 sorted indices
  Integer vol;  // normalized volume, > 0
};

struct EnumContext {
  const PointConfiguration* cfg = nullptr;
  int d = 0;
  Integer hull_vol;
  std::vector<Candidate> cands;
  std::vector<std::vector<uint64_t>> compat;       // pairwise proper intersection
  std::map<Cell, int> facet_ids;                   // facet -> id
  std::vector<char> facet_is_boundary;             // by facet id
  std::vector<std::vector<int>> cands_with_facet;  // by facet id
  std::vector<std::vector<int>> facets_of;         // candidate -> facet ids
};

// A facet lies on the hull boundary iff all configuration points sit weakly
// on one side of its affine hull.
bool facet_on_boundary(const PointConfiguration& cfg, const Cell& facet) {
  const int d = cfg.affine_dim;
  ZVec normal;
  if (d == 1) {
    normal = {Integer(1)};
  } else {
    ZMat diffs(d - 1, ZVec(d));
    auto p0 = cfg.chart(facet[0]);
    for (int r = 0; r + 1 < d; ++r) {
      auto p = cfg.chart(facet[r + 1]);
      for (int j = 0; j < d; ++j) diffs[r][j] = p[j] - p0[j];
    }
    normal = cross_normal(diffs);
  }
  bool nonzero = false;
  for (const auto& z : normal) nonzero = nonzero || sgn(z) != 0;
  if (!nonzero) throw InvariantError("enumerate: degenerate facet");
  ZVec base(d);
  auto pb = cfg.chart(facet[0]);
  for (int j = 0; j < d; ++j) base[j] = pb[j];
  Integer v0 = dot(normal, base);
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    auto ch = cfg.chart(static_cast<int>(i));
    ZVec q(d);
    for (int j = 0; j < d; ++j) q[j] = ch[j];
    int s = cmp(dot(normal, q), v0);
    pos = pos || s > 0;
    neg = neg || s < 0;
    if (pos && neg) return false;
  }
  return true;
}

struct SearchState {
  std::vector<int> chosen;
  Integer vol;
  // Interior facets covered exactly once so far. A facet covered twice is
  // closed; three pairwise compatible cells can never share a facet.
  std::set<int> open_facets;
  std::vector<uint64_t> live;  // candidates compatible with everything chosen
};

class Enumerator {
 public:
  Enumerator(const EnumContext& ctx, const EnumerateOptions& opts) : ctx_(ctx), opts_(opts) {}

  void run_root(int root) {
    SearchState st;
    st.vol = 0;
    const int nc = static_cast<int>(ctx_.cands.size());
    const std::size_t words = (nc + 63) / 64;
    st.live.assign(words, ~0ull);
    if (nc % 64) st.live[words - 1] = (1ull << (nc % 64)) - 1;
    add(st, root);
    dfs(st);
  }

  unsigned long long total = 0;
  unsigned long long matching = 0;
  std::map<CellList, unsigned long long> orbit_sizes;
  std::vector<CellList> plain;  // only filled when no group is given

 private:
  void add(SearchState& st, int cand) {
    st.chosen.push_back(cand);
    st.vol += ctx_.cands[cand].vol;
    for (int fid : ctx_.facets_of[cand]) {
      if (ctx_.facet_is_boundary[fid]) continue;
      auto it = st.open_facets.find(fid);
      if (it == st.open_facets.end())
        st.open_facets.insert(fid);
      else
        st.open_facets.erase(it);  // second cover closes the wall
    }
    for (std::size_t w = 0; w < st.live.size(); ++w) st.live[w] &= ctx_.compat[cand][w];
  }

  void emit(const SearchState& st) {
    CellList cells;
    cells.reserve(st.chosen.size());
    for (int c : st.chosen) cells.push_back(ctx_.cands[c].verts);
    std::sort(cells.begin(), cells.end());
    ++total;
    if (opts_.regular_only && !triangulation_is_regular(cells)) return;
    ++matching;
    if (opts_.group) {
      ++orbit_sizes[canonical_cells(cells, *opts_.group)];
    } else if (plain.size() < opts_.max_representatives) {
      plain.push_back(std::move(cells));
    }
  }

  // Regularity of a triangulation produced by this enumerator; cells are
  // genuine full-dimensional simplices, so no input validation is needed.
  bool triangulation_is_regular(const CellList& cells) {
    const auto& cfg = *ctx_.cfg;
    const int n = static_cast<int>(cfg.size());
    const int d = ctx_.d;
    StrictSystem sys;
    sys.num_vars = n;
    for (const auto& cell : cells) {
      QMat a(d + 1, QVec(d + 1));
      for (int k = 0; k <= d; ++k) {
        auto ch = cfg.chart(cell[k]);
        for (int j = 0; j < d; ++j) a[j][k] = ch[j];
        a[d][k] = 1;
      }
      auto inv = inverse(a);
      if (!inv) throw InvariantError("enumerate: singular simplex");
      std::set<int> members(cell.begin(), cell.end());
      for (int w = 0; w < n; ++w) {
        if (members.count(w)) continue;
        auto ch = cfg.chart(w);
        StrictConstraint con;
        con.coeffs.assign(n, Rational(0));
        for (int k = 0; k <= d; ++k) {
          Rational gamma(0);
          for (int j = 0; j < d; ++j) gamma += (*inv)[k][j] * ch[j];
          gamma += (*inv)[k][d];
          con.coeffs[cell[k]] += gamma;
        }
        con.coeffs[w] -= 1;
        con.rhs = 0;
        con.strict = true;
        sys.constraints.push_back(std::move(con));
      }
    }
    if (sys.constraints.empty()) return true;
    return lp_feasible_strict(sys).feasible;
  }

  void dfs(SearchState& st) {
    if (st.vol == ctx_.hull_vol) {
      emit(st);
      return;
    }
    if (st.open_facets.empty())
      throw InvariantError("enumerate: covered region closed before filling the hull");
    int fid = *st.open_facets.begin();
    for (int cand : ctx_.cands_with_facet[fid]) {
      if (!((st.live[cand >> 6] >> (cand & 63)) & 1u)) continue;
      SearchState next = st;
      add(next, cand);
      dfs(next);
    }
  }

  const EnumContext& ctx_;
  const EnumerateOptions& opts_;
};

// Interior point of the hull in general position: a weighted centroid with
// generic weights, retried until it avoids every hyperplane spanned by d
// configuration points. For each such hyperplane only finitely many t are
// bad, because a weight perturbation concentrated on one point moves q off
// the hyperplane unless all points lie on it.
QVec probe_point(const PointConfiguration& cfg) {
  const int n = static_cast<int>(cfg.size());
  const int d = cfg.affine_dim;

  for (long t = 1;; ++t) {
    QVec q(d, Rational(0));
    Rational wsum(0);
    for (int i = 0; i < n; ++i) {
      Rational w = Rational(1) + Rational(1, t + i + 1);
      auto ch = cfg.chart(i);
      for (int j = 0; j < d; ++j) q[j] += w * ch[j];
      wsum += w;
    }
    for (auto& v : q) v /= wsum;
    // q must avoid every hyperplane spanned by d configuration points.
    bool ok = true;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    for (;;) {
      QMat rows;
      auto p0 = cfg.chart(idx[0]);
      for (int r = 1; r < d; ++r) {
        QVec row(d);
        auto p = cfg.chart(idx[r]);
        for (int j = 0; j < d; ++j) row[j] = p[j] - p0[j];
        rows.push_back(std::move(row));
      }
      if (rank(rows) == d - 1) {
        QVec row(d);
        for (int j = 0; j < d; ++j) row[j] = q[j] - p0[j];
        rows.push_back(std::move(row));
        if (rank(rows) == d - 1) {
          ok = false;
          break;
        }
      }
      int k = d - 1;
      while (k >= 0 && idx[k] == n - d + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (ok) return q;
  }
}

bool simplex_contains_strictly(const PointConfiguration& cfg, const Cell& verts, const QVec& q) {
  const int d = cfg.affine_dim;
  QMat a(d + 1, QVec(d + 1));
  for (int k = 0; k <= d; ++k) {
    auto ch = cfg.chart(verts[k]);
    for (int j = 0; j < d; ++j) a[j][k] = ch[j];
    a[d][k] = 1;
  }
  QVec b(d + 1);
  for (int j = 0; j < d; ++j) b[j] = q[j];
  b[d] = 1;
  auto res = solve_linear(std::move(a), std::move(b));
  if (res.status != SolveStatus::Unique) throw InvariantError("enumerate: singular candidate");
  for (const auto& coord : res.x)
    if (sgn(coord) <= 0) return false;
  return true;
}

}  // namespace

EnumerateResult enumerate_triangulations(const PointConfiguration& cfg,
                                         const EnumerateOptions& opts) {
  const int n = static_cast<int>(cfg.size());
  const int d = cfg.affine_dim;
  if (!opts.long_running) {
    bool small_cube = cfg.kind == ConfigKind::Cube && cfg.items <= 3;
    bool small_product = cfg.kind == ConfigKind::SimplexProduct && n <= 9;
    bool small_generic = n <= 16 && d <= 2;
    if (!small_cube && !small_product && !small_generic)
      throw SizeGuardError(
          "enumerate_triangulations: configuration too large without the long-running flag");
  }
  if (opts.group) {
    for (const auto& g : opts.group->elements)
      if (g.index_perm.size() != cfg.size())
        throw InvariantError("enumerate_triangulations: group does not act on configuration");
  }

  EnumContext ctx;
  ctx.cfg = &cfg;
  ctx.d = d;
  ctx.hull_vol = hull_norm_volume(cfg);

  // All full-dimensional simplices spanned by configuration points.
  {
    std::vector<int> idx(d + 1);
    for (int i = 0; i <= d; ++i) idx[i] = i;
    for (;;) {
      Cell cell(idx.begin(), idx.end());
      Integer vol = simplex_norm_volume(cfg, cell);
      if (sgn(vol) > 0) ctx.cands.push_back({cell, vol});
      int k = d;
      while (k >= 0 && idx[k] == n - d - 1 + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  if (opts.order_seed != 0) {
    std::mt19937_64 rng(opts.order_seed);
    std::shuffle(ctx.cands.begin(), ctx.cands.end(), rng);
  }
  const int nc = static_cast<int>(ctx.cands.size());

  const std::size_t words = (nc + 63) / 64;
  ctx.compat.assign(nc, std::vector<uint64_t>(words, 0));
  for (int i = 0; i < nc; ++i) {
    for (int j = i + 1; j < nc; ++j) {
      if (cells_intersect_properly(cfg, ctx.cands[i].verts, ctx.cands[j].verts)) {
        ctx.compat[i][j >> 6] |= 1ull << (j & 63);
        ctx.compat[j][i >> 6] |= 1ull << (i & 63);
      }
    }
  }

  ctx.facets_of.assign(nc, {});
  for (int i = 0; i < nc; ++i) {
    const auto& verts = ctx.cands[i].verts;
    Cell facet(verts.size() - 1);
    for (std::size_t skip = 0; skip < verts.size(); ++skip) {
      std::size_t t = 0;
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (j != skip) facet[t++] = verts[j];
      auto it = ctx.facet_ids.find(facet);
      int fid;
      if (it == ctx.facet_ids.end()) {
        fid = static_cast<int>(ctx.cands_with_facet.size());
        ctx.facet_ids.emplace(facet, fid);
        ctx.cands_with_facet.push_back({});
        ctx.facet_is_boundary.push_back(facet_on_boundary(cfg, facet) ? 1 : 0);
      } else {
        fid = it->second;
      }
      ctx.cands_with_facet[fid].push_back(i);
      ctx.facets_of[i].push_back(fid);
    }
  }

  // Every triangulation has exactly one cell containing the probe point, so
  // the root branches are disjoint and each triangulation is found once.
  QVec q = probe_point(cfg);
  std::vector<int> roots;
  for (int i = 0; i < nc; ++i)
    if (simplex_contains_strictly(cfg, ctx.cands[i].verts, q)) roots.push_back(i);

  auto run_roots = [&](std::vector<int> subset) {
    Enumerator e(ctx, opts);
    for (int root : subset) e.run_root(root);
    return std::make_tuple(e.total, e.matching, std::move(e.orbit_sizes), std::move(e.plain));
  };

  using Part = std::tuple<unsigned long long, unsigned long long,
                          std::map<CellList, unsigned long long>, std::vector<CellList>>;
  std::vector<Part> parts;
  int threads = std::max(1, opts.threads);
  if (threads == 1 || roots.size() <= 1) {
    parts.push_back(run_roots(roots));
  } else {
    std::vector<std::vector<int>> split(threads);
    for (std::size_t i = 0; i < roots.size(); ++i) split[i % threads].push_back(roots[i]);
    std::vector<std::future<Part>> futs;
    for (int t = 0; t < threads; ++t)
      futs.push_back(std::async(std::launch::async, run_roots, split[t]));
    for (auto& f : futs) parts.push_back(f.get());
  }

  EnumerateResult res;
  for (auto& [total, matching, orbit_sizes, plain] : parts) {
    res.total += total;
    res.matching += matching;
    for (auto& [canon, count] : orbit_sizes) res.orbit_sizes[canon] += count;
    for (auto& cells : plain)
      if (res.representatives.size() < opts.max_representatives)
        res.representatives.push_back(std::move(cells));
  }
  if (opts.group) {
    res.orbit_count = res.orbit_sizes.size();
    for (const auto& [canon, count] : res.orbit_sizes) {
      (void)count;
      if (res.representatives.size() < opts.max_representatives)
        res.representatives.push_back(canon);
    }
  } else {
    std::sort(res.representatives.begin(), res.representatives.end());
    res.orbit_count = 0;
  }
  return res;
}

}  // namespace tropmech
