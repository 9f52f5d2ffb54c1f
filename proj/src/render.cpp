#include "tropmech/render.hpp"

#include <algorithm>
#include <sstream>

#include "tropmech/errors.hpp"

namespace tropmech {

void RenderSpec::validate() const {
  if (viewport.size() != 4 || viewport[0] >= viewport[2] || viewport[1] >= viewport[3])
    throw RenderDimensionError("render: viewport must be a nondegenerate box x0,y0,x1,y1");
}

std::string svg_number(const Rational& v) {
  // Round v * 10^6 half to even, then print with six decimals.
  Integer num = v.get_num() * 1000000;
  Integer den = v.get_den();
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer twice = 2 * r;
  int c = cmp(twice, den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t())))
    q += 1;
  bool neg = sgn(q) < 0;
  if (neg) q = -q;
  Integer whole = q / 1000000;
  Integer frac = q % 1000000;
  std::string fs = frac.get_str();
  fs.insert(0, 6 - fs.size(), '0');
  std::string out = (neg ? "-" : "") + whole.get_str() + "." + fs;
  if (out == "-0.000000") out = "0.000000";
  return out;
}

namespace {

constexpr int kCanvas = 400;

const char* kPalette[] = {"#619bf2", "#77ec9e", "#ed7155", "#f2c94c",
                          "#b07fe8", "#7fd4e8", "#e87fb0", "#a8c76f"};

struct Mapper {
  QVec vp;  // x0, y0, x1, y1
  Rational sx, sy;

  explicit Mapper(const QVec& viewport) : vp(viewport) {
    sx = Rational(kCanvas) / (vp[2] - vp[0]);
    sy = Rational(kCanvas) / (vp[3] - vp[1]);
  }
  std::string x(const Rational& v) const { return svg_number((v - vp[0]) * sx); }
  std::string y(const Rational& v) const { return svg_number((vp[3] - v) * sy); }
};

std::string svg_open() {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
     << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
  return os.str();
}

// Clips a convex polygon against the halfplane normal . x >= offset.
std::vector<QVec> clip_halfplane(const std::vector<QVec>& poly, const QVec& normal,
                                 const Rational& offset) {
  std::vector<QVec> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const QVec& cur = poly[i];
    const QVec& nxt = poly[(i + 1) % n];
    Rational dc = dot(normal, cur) - offset;
    Rational dn = dot(normal, nxt) - offset;
    if (sgn(dc) >= 0) out.push_back(cur);
    if ((sgn(dc) > 0 && sgn(dn) < 0) || (sgn(dc) < 0 && sgn(dn) > 0)) {
      Rational t = dc / (dc - dn);
      QVec mid(2);
      mid[0] = cur[0] + t * (nxt[0] - cur[0]);
      mid[1] = cur[1] + t * (nxt[1] - cur[1]);
      out.push_back(std::move(mid));
    }
  }
  return out;
}

std::vector<QVec> clip_region_to_viewport(const Polyhedron& reg, const QVec& vp) {
  std::vector<QVec> poly{{vp[0], vp[1]}, {vp[2], vp[1]}, {vp[2], vp[3]}, {vp[0], vp[3]}};
  for (std::size_t i = 0; i < reg.normals.size() && !poly.empty(); ++i)
    poly = clip_halfplane(poly, reg.normals[i], reg.offsets[i]);
  return poly;
}

void emit_polygon(std::ostringstream& os, const Mapper& map, const std::vector<QVec>& poly,
                  const std::string& fill, const RenderSpec& spec) {
  if (poly.size() < 3) return;
  os << "  <polygon points=\"";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i) os << ' ';
    os << map.x(poly[i][0]) << ',' << map.y(poly[i][1]);
  }
  os << "\" fill=\"" << fill << "\" fill-opacity=\"0.55\" stroke=\"#222222\" stroke-width=\""
     << svg_number(spec.stroke) << "\"/>\n";
}

void emit_label(std::ostringstream& os, const Mapper& map, const std::vector<QVec>& poly,
                const std::string& text) {
  if (poly.empty()) return;
  QVec c(2, Rational(0));
  for (const auto& p : poly) {
    c[0] += p[0];
    c[1] += p[1];
  }
  c[0] /= static_cast<long>(poly.size());
  c[1] /= static_cast<long>(poly.size());
  os << "  <text x=\"" << map.x(c[0]) << "\" y=\"" << map.y(c[1])
     << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">" << text
     << "</text>\n";
}

std::string render_regions(const std::vector<Polyhedron>& regions,
                           const std::vector<std::string>& names, const RenderSpec& spec) {
  Mapper map(spec.viewport);
  std::ostringstream os;
  os << svg_open();
  std::vector<std::vector<QVec>> polys(regions.size());
  for (std::size_t i = 0; i < regions.size(); ++i)
    polys[i] = clip_region_to_viewport(regions[i], spec.viewport);
  for (std::size_t i = 0; i < regions.size(); ++i)
    emit_polygon(os, map, polys[i], kPalette[i % 8], spec);
  if (spec.labels)
    for (std::size_t i = 0; i < regions.size(); ++i) emit_label(os, map, polys[i], names[i]);
  os << "</svg>\n";
  return os.str();
}

// Vertices of a two-dimensional cell in convex position, counterclockwise.
std::vector<QVec> order_cell_polygon(const PointConfiguration& cfg, const Cell& cell) {
  std::vector<QVec> pts;
  for (int idx : cell) {
    const auto& p = cfg.points[idx];
    pts.push_back({Rational(p[0]), Rational(p[1])});
  }
  QVec c(2, Rational(0));
  for (const auto& p : pts) {
    c[0] += p[0];
    c[1] += p[1];
  }
  c[0] /= static_cast<long>(pts.size());
  c[1] /= static_cast<long>(pts.size());
  auto half = [&](const QVec& p) {
    Rational dy = p[1] - c[1];
    if (sgn(dy) != 0) return sgn(dy) > 0 ? 0 : 1;
    return sgn(p[0] - c[0]) > 0 ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const QVec& a, const QVec& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
    if (sgn(cross) != 0) return sgn(cross) > 0;
    // Collinear with the centroid: nearer point first for a stable order.
    Rational da = (a[0] - c[0]) * (a[0] - c[0]) + (a[1] - c[1]) * (a[1] - c[1]);
    Rational db = (b[0] - c[0]) * (b[0] - c[0]) + (b[1] - c[1]) * (b[1] - c[1]);
    return da < db;
  });
  return pts;
}

}  // namespace

std::string render_difference_sets(const Mechanism& mech, const RenderSpec& spec) {
  spec.validate();
  if (mech.items != 2)
    throw RenderDimensionError("difference-set rendering needs a two-item mechanism");
  TropicalPolynomial up = utility_polynomial(mech);
  std::vector<Polyhedron> regions;
  std::vector<std::string> names;
  for (unsigned a = 0; a < 4; ++a) {
    regions.push_back(region(up, static_cast<int>(a)));
    names.push_back("Q_" + bundle_label(a, 2));
  }
  return render_regions(regions, names, spec);
}

std::string render_affine_difference_sets(const AffineMaximizer& am, const RenderSpec& spec) {
  spec.validate();
  if (am.items * am.players != 3)
    throw RenderDimensionError("affine rendering needs a 3-coordinate type space (e.g. 3 players, 1 item)");
  PointConfiguration cfg = simplex_product_config(am.players, am.items);
  std::vector<Polyhedron> regions;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    regions.push_back(affine_reduced_region(am, static_cast<int>(i)));
    names.push_back("Q_" + cfg.labels[i]);
  }
  return render_regions(regions, names, spec);
}

std::string render_dual_subdivision(const TropicalPolynomial& p, const RenderSpec& spec) {
  spec.validate();
  if (p.vars() != 2)
    throw RenderDimensionError("dual-subdivision rendering needs a two-variable polynomial");
  DualSubdivision dual = dual_subdivision(p);
  Mapper map(spec.viewport);
  std::ostringstream os;
  os << svg_open();
  for (const auto& cell : dual.subdivision.cells) {
    auto poly = order_cell_polygon(dual.config, cell);
    emit_polygon(os, map, poly, "#77ec9e", spec);
  }
  std::vector<char> used(dual.config.size(), 0);
  for (const auto& cell : dual.subdivision.cells)
    for (int idx : cell) used[idx] = 1;
  for (std::size_t i = 0; i < dual.config.size(); ++i) {
    const auto& pt = dual.config.points[i];
    os << "  <circle cx=\"" << map.x(Rational(pt[0])) << "\" cy=\"" << map.y(Rational(pt[1]))
       << "\" r=\"4\" fill=\"" << (used[i] ? "#b3202c" : "#9a9a9a") << "\"/>\n";
  }
  if (spec.labels) {
    for (std::size_t i = 0; i < dual.config.size(); ++i) {
      const auto& pt = dual.config.points[i];
      os << "  <text x=\"" << map.x(Rational(pt[0])) << "\" y=\"" << map.y(Rational(pt[1]))
         << "\" dx=\"6\" dy=\"-6\" font-family=\"monospace\" font-size=\"11\">("
         << pt[0] << "," << pt[1] << ")</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_tight_span(const TropicalPolynomial& p, const RenderSpec& spec) {
  spec.validate();
  if (p.vars() != 2)
    throw RenderDimensionError("tight-span rendering needs a two-variable polynomial");
  TightSpan ts = tight_span(p);
  Mapper map(spec.viewport);
  std::ostringstream os;
  os << svg_open();
  for (const auto& [a, b] : ts.edges) {
    os << "  <line x1=\"" << map.x(ts.vertices[a][0]) << "\" y1=\"" << map.y(ts.vertices[a][1])
       << "\" x2=\"" << map.x(ts.vertices[b][0]) << "\" y2=\"" << map.y(ts.vertices[b][1])
       << "\" stroke=\"#222222\" stroke-width=\"" << svg_number(spec.stroke) << "\"/>\n";
  }
  for (const auto& v : ts.vertices) {
    os << "  <circle cx=\"" << map.x(v[0]) << "\" cy=\"" << map.y(v[1])
       << "\" r=\"4\" fill=\"#ed7155\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tropmech
