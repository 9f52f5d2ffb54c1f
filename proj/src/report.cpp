#include "tropmech/report.hpp"

#include "tropmech/errors.hpp"

namespace tropmech {

namespace {

Json sensitivity_json(const Subdivision& s, bool cube) {
  Json j;
  if (cube) {
    j["cardinality"] = cardinality_sensitivity(s);
    j["hamming"] = hamming_sensitivity(s);
  } else {
    j["cardinality"] = multiplayer_cardinality_sensitivity(s);
  }
  return j;
}

// Closed walks of 2..4 arcs whose consecutive regions intersect must have
// exact length zero; arc lengths between adjacent bundles must match payment
// differences.
Json zero_cycle_audit(const Mechanism& mech, const MechanismGeometry& geo) {
  const unsigned nb = 1u << mech.items;
  AllocationNetwork net = allocation_network(mech);

  // Adjacency from the complex facets (pairs in a common cell) equals the
  // pairwise LP test by duality; use the facets to stay cheap here.
  std::vector<std::vector<char>> adj(nb, std::vector<char>(nb, 0));
  std::vector<int> pair(2);
  unsigned long long adjacent_pairs = 0;
  bool price_identity = true;
  for (unsigned a = 0; a < nb; ++a) {
    for (unsigned b = 0; b < nb; ++b) {
      if (a == b) continue;
      pair[0] = static_cast<int>(std::min(a, b));
      pair[1] = static_cast<int>(std::max(a, b));
      if (!geo.complex.has_face(pair)) continue;
      adj[a][b] = 1;
      ++adjacent_pairs;
      if (!net.arc[a][b].value ||
          *net.arc[a][b].value != mech.payments[b] - mech.payments[a])
        price_identity = false;
    }
  }

  unsigned long long cycles = 0;
  bool all_zero = true;
  auto arc_val = [&](unsigned a, unsigned b) { return *net.arc[a][b].value; };
  for (unsigned a = 0; a < nb; ++a) {
    for (unsigned b = 0; b < nb; ++b) {
      if (!adj[a][b]) continue;
      if (adj[b][a]) {
        ++cycles;
        if (sgn(arc_val(a, b) + arc_val(b, a)) != 0) all_zero = false;
      }
      for (unsigned c = 0; c < nb; ++c) {
        if (!adj[b][c] || c == a) continue;
        if (adj[c][a]) {
          ++cycles;
          if (sgn(arc_val(a, b) + arc_val(b, c) + arc_val(c, a)) != 0) all_zero = false;
        }
        for (unsigned d = 0; d < nb; ++d) {
          if (!adj[c][d] || d == b || d == a) continue;
          if (adj[d][a]) {
            ++cycles;
            if (sgn(arc_val(a, b) + arc_val(b, c) + arc_val(c, d) + arc_val(d, a)) != 0)
              all_zero = false;
          }
        }
      }
    }
  }

  Json j;
  j["adjacent_pairs"] = adjacent_pairs;
  j["arc_price_identity"] = price_identity;
  j["adjacent_cycles_checked"] = cycles;
  j["all_adjacent_cycles_zero"] = all_zero;
  return j;
}

}  // namespace

Json analyze_mechanism_report(const Mechanism& mech) {
  MechanismGeometry geo = mechanism_geometry(mech);
  RegularityResult reg = is_regular(geo.subdivision.config, geo.subdivision);
  if (!reg.regular)
    throw InvariantError("mechanism subdivision failed its own regularity certificate");

  Json j;
  j["schema_version"] = 1;
  j["kind"] = "mechanism-analysis";
  j["items"] = mech.items;
  j["payments"] = mechanism_json(mech)["payments"];
  j["subdivision"] = subdivision_json(geo.subdivision);
  j["facets"] = geo.complex.facet_labels();
  j["nondegenerate"] = geo.nondegenerate;
  Json witness = Json::array();
  for (const auto& h : reg.witness.heights) witness.push_back(rational_json(h));
  j["witness_heights"] = witness;
  j["sensitivity"] = sensitivity_json(geo.subdivision, true);
  j["zero_cycle_audit"] = zero_cycle_audit(mech, geo);
  return j;
}

Json analyze_affine_report(const AffineMaximizer& am) {
  AffineGeometry geo = affine_geometry(am);
  RegularityResult reg = is_regular(geo.config, geo.subdivision);
  if (!reg.regular)
    throw InvariantError("bias subdivision failed its own regularity certificate");
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "affine-maximizer-analysis";
  j["players"] = am.players;
  j["items"] = am.items;
  Json w = Json::array();
  for (const auto& x : am.weights) w.push_back(rational_json(x));
  j["weights"] = w;
  j["subdivision"] = subdivision_json(geo.subdivision);
  j["facets"] = geo.complex.facet_labels();
  j["nondegenerate"] = geo.nondegenerate;
  j["sensitivity"] = sensitivity_json(geo.subdivision, false);
  QVec dir = lineality_reduce(am).direction;
  Json dj = Json::array();
  for (const auto& v : dir) dj.push_back(rational_json(v));
  j["lineality_direction"] = dj;
  return j;
}

Json enumerate_report(const PointConfiguration& cfg, const EnumerateReportOptions& opts) {
  EnumerateOptions eo;
  eo.regular_only = opts.regular_only;
  eo.long_running = opts.long_running;
  eo.threads = opts.threads;
  eo.max_representatives = opts.max_representatives;
  SymmetryGroup group;
  if (opts.orbits != "none") {
    SymmetryKind kind;
    if (cfg.kind == ConfigKind::SimplexProduct)
      kind = opts.orbits == "full" ? SymmetryKind::FullProduct : SymmetryKind::PlayerItem;
    else
      kind = opts.orbits == "full" ? SymmetryKind::FullCube : SymmetryKind::ItemPermutations;
    group = symmetry_group(cfg, kind);
    eo.group = &group;
  }
  EnumerateResult res = enumerate_triangulations(cfg, eo);

  Json j;
  j["schema_version"] = 1;
  j["kind"] = "triangulation-enumeration";
  j["config"] = config_json(cfg);
  j["regular_only"] = opts.regular_only;
  j["count"] = res.matching;
  j["total_triangulations"] = res.total;
  if (opts.orbits != "none") {
    j["orbits"] = opts.orbits;
    j["group_order"] = group.size();
    j["orbit_count"] = res.orbit_count;
    // Orbit sizes must sum back to the matching count.
    unsigned long long total = 0;
    for (const auto& [canon, size] : res.orbit_sizes) total += size;
    if (total != res.matching)
      throw InvariantError("orbit sizes do not sum to the triangulation count");
  }
  Json reps = Json::array();
  std::size_t cap = std::min(res.representatives.size(), opts.max_representatives);
  for (std::size_t i = 0; i < cap; ++i) reps.push_back(res.representatives[i]);
  j["representatives"] = reps;
  return j;
}

}  // namespace tropmech
