#include "tropmech/point_config.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tropmech/errors.hpp"
#include "tropmech/linalg.hpp"

namespace tropmech {

std::vector<int> PointConfiguration::chart(int point_index) const {
  const auto& p = points.at(point_index);
  std::vector<int> out(chart_cols.size());
  for (std::size_t k = 0; k < chart_cols.size(); ++k) out[k] = p[chart_cols[k]];
  return out;
}

int PointConfiguration::index_of(const std::vector<int>& point) const {
  auto it = point_index_.find(point);
  return it == point_index_.end() ? -1 : it->second;
}

void PointConfiguration::finalize() {
  if (points.empty()) throw InvariantError("configuration with no points");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dimension)
      throw InvariantError("configuration point with wrong dimension");
  point_index_.clear();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!point_index_.emplace(points[i], static_cast<int>(i)).second)
      throw InvariantError("configuration points must be pairwise distinct");
  }
  if (labels.empty()) {
    labels.reserve(points.size());
    for (const auto& p : points) {
      std::string s;
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (j) s += ',';
        s += std::to_string(p[j]);
      }
      labels.push_back(s);
    }
  }
  if (labels.size() != points.size())
    throw InvariantError("configuration needs one label per point");

  // Pivot columns of the difference matrix give the chart.
  ZMat diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    ZVec row(dimension);
    for (int j = 0; j < dimension; ++j) row[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(row));
  }
  chart_cols.clear();
  for (int c = 0; c < dimension; ++c) {
    // Transposed candidate (selected columns as rows) for a rank check.
    ZMat cand;
    for (int col : chart_cols) {
      ZVec row(diffs.size());
      for (std::size_t i = 0; i < diffs.size(); ++i) row[i] = diffs[i][col];
      cand.push_back(std::move(row));
    }
    ZVec row(diffs.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) row[i] = diffs[i][c];
    cand.push_back(std::move(row));
    if (int_rank(cand) == static_cast<int>(cand.size())) chart_cols.push_back(c);
  }
  affine_dim = static_cast<int>(chart_cols.size());
}

PointConfiguration cube_config(int m) {
  if (m < 1 || m > 10) throw SizeGuardError("cube_config: item count out of range [1,10]");
  PointConfiguration cfg;
  cfg.dimension = m;
  cfg.kind = ConfigKind::Cube;
  cfg.items = m;
  for (unsigned k = 0; k < (1u << m); ++k) {
    std::vector<int> p(m);
    for (int j = 0; j < m; ++j) p[j] = (k >> (m - 1 - j)) & 1u;
    cfg.points.push_back(std::move(p));
    cfg.labels.push_back(bundle_label(k, m));
  }
  cfg.finalize();
  return cfg;
}

PointConfiguration simplex_product_config(int n, int m) {
  if (n < 2 || m < 1) throw SizeGuardError("simplex_product_config: need n >= 2, m >= 1");
  double count = 1;
  for (int i = 0; i < m; ++i) count *= n;
  if (count > 1e5) throw SizeGuardError("simplex_product_config: n^m exceeds 1e5");
  PointConfiguration cfg;
  cfg.dimension = m * n;
  cfg.kind = ConfigKind::SimplexProduct;
  cfg.players = n;
  cfg.items = m;
  long total = 1;
  for (int i = 0; i < m; ++i) total *= n;
  for (long k = 0; k < total; ++k) {
    std::vector<int> p(m * n, 0);
    std::string label;
    long rest = k;
    long place = total / n;
    for (int i = 0; i < m; ++i) {
      int player = static_cast<int>(rest / place);
      rest %= place;
      if (i + 1 < m) place /= n;
      p[i * n + player] = 1;
      if (i) label += '|';
      for (int j = 0; j < n; ++j) label += (j == player ? '1' : '0');
    }
    cfg.points.push_back(std::move(p));
    cfg.labels.push_back(std::move(label));
  }
  cfg.finalize();
  return cfg;
}

PointConfiguration box_lattice_config(std::vector<int> bounds) {
  if (bounds.empty()) throw SizeGuardError("box_lattice_config: empty bounds");
  long total = 1;
  for (int b : bounds) {
    if (b < 1) throw SizeGuardError("box_lattice_config: each bound must be >= 1");
    total *= b + 1;
    if (total > 10000) throw SizeGuardError("box_lattice_config: point count exceeds 1e4");
  }
  PointConfiguration cfg;
  cfg.dimension = static_cast<int>(bounds.size());
  cfg.kind = ConfigKind::Box;
  cfg.bounds = bounds;
  std::vector<int> p(bounds.size(), 0);
  for (;;) {
    cfg.points.push_back(p);
    std::string label;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) label += ',';
      label += std::to_string(p[j]);
    }
    cfg.labels.push_back(label);
    int j = static_cast<int>(bounds.size()) - 1;
    while (j >= 0 && p[j] == bounds[j]) p[j--] = 0;
    if (j < 0) break;
    ++p[j];
  }
  cfg.finalize();
  return cfg;
}

PointConfiguration custom_config(int dimension, std::vector<std::vector<int>> points) {
  PointConfiguration cfg;
  cfg.dimension = dimension;
  cfg.kind = ConfigKind::Custom;
  cfg.points = std::move(points);
  cfg.finalize();
  return cfg;
}

std::string bundle_label(unsigned bundle, int m) {
  std::string s(m, '0');
  for (int j = 0; j < m; ++j)
    if (bundle & (1u << (m - 1 - j))) s[j] = '1';
  return s;
}

unsigned bundle_from_label(const std::string& label) {
  unsigned b = 0;
  for (char c : label) {
    if (c != '0' && c != '1') throw ParseError("bundle label must be a bitstring: " + label);
    b = (b << 1u) | static_cast<unsigned>(c - '0');
  }
  return b;
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

GroupElement element_from_point_map(const PointConfiguration& cfg,
                                    const std::vector<std::vector<int>>& images) {
  GroupElement g;
  g.index_perm.resize(cfg.size());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    int idx = cfg.index_of(images[i]);
    if (idx < 0) throw InvariantError("symmetry does not preserve the configuration");
    g.index_perm[i] = idx;
  }
  return g;
}

}  // namespace

SymmetryGroup symmetry_group(const PointConfiguration& cfg, SymmetryKind kind) {
  SymmetryGroup group;
  group.kind = kind;
  const int m = cfg.items;

  if (kind == SymmetryKind::ItemPermutations || kind == SymmetryKind::FullCube) {
    bool cube = cfg.kind == ConfigKind::Cube;
    bool box = cfg.kind == ConfigKind::Box;
    if (kind == SymmetryKind::FullCube && !cube)
      throw InvariantError("full-cube symmetry requires a cube configuration");
    if (!cube && !box)
      throw InvariantError("item-permutation symmetry requires a cube or box configuration");
    const int d = cfg.dimension;
    for (const auto& perm : all_permutations(d)) {
      if (box) {
        bool ok = true;
        for (int j = 0; j < d && ok; ++j) ok = cfg.bounds[perm[j]] == cfg.bounds[j];
        if (!ok) continue;
      }
      unsigned mask_limit = kind == SymmetryKind::FullCube ? (1u << d) : 1u;
      for (unsigned mask = 0; mask < mask_limit; ++mask) {
        std::vector<std::vector<int>> images(cfg.size());
        for (std::size_t i = 0; i < cfg.size(); ++i) {
          std::vector<int> q(d);
          for (int j = 0; j < d; ++j) {
            int v = cfg.points[i][perm[j]];
            if (mask & (1u << j)) v = 1 - v;
            q[j] = v;
          }
          images[i] = std::move(q);
        }
        group.elements.push_back(element_from_point_map(cfg, images));
      }
    }
    return group;
  }

  if (cfg.kind != ConfigKind::SimplexProduct)
    throw InvariantError("player symmetry requires a simplex-product configuration");
  const int n = cfg.players;
  auto player_perms = all_permutations(n);
  auto item_perms = all_permutations(m);

  if (kind == SymmetryKind::PlayerItem) {
    for (const auto& rho : player_perms) {
      for (const auto& tau : item_perms) {
        std::vector<std::vector<int>> images(cfg.size());
        for (std::size_t i = 0; i < cfg.size(); ++i) {
          std::vector<int> q(m * n, 0);
          for (int it = 0; it < m; ++it)
            for (int pl = 0; pl < n; ++pl) q[it * n + pl] = cfg.points[i][tau[it] * n + rho[pl]];
          images[i] = std::move(q);
        }
        group.elements.push_back(element_from_point_map(cfg, images));
      }
    }
    return group;
  }

  // FullProduct: independent player relabelings per item, then item perms.
  // For n = 2 this is exactly the full symmetry group of the m-cube.
  std::vector<int> choice(m, 0);
  const int np = static_cast<int>(player_perms.size());
  for (;;) {
    for (const auto& tau : item_perms) {
      std::vector<std::vector<int>> images(cfg.size());
      for (std::size_t i = 0; i < cfg.size(); ++i) {
        std::vector<int> q(m * n, 0);
        for (int it = 0; it < m; ++it) {
          const auto& rho = player_perms[choice[tau[it]]];
          for (int pl = 0; pl < n; ++pl) q[it * n + pl] = cfg.points[i][tau[it] * n + rho[pl]];
        }
        images[i] = std::move(q);
      }
      group.elements.push_back(element_from_point_map(cfg, images));
    }
    int j = m - 1;
    while (j >= 0 && choice[j] == np - 1) choice[j--] = 0;
    if (j < 0) break;
    ++choice[j];
  }
  return group;
}

}  // namespace tropmech
