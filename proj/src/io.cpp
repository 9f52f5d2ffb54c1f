#include "tropmech/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "tropmech/errors.hpp"

namespace tropmech {

Json rational_json(const Rational& q) { return rational_to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw ParseError("expected a rational string");
  return parse_rational(j.get<std::string>());
}

namespace {

int parse_positive_int(const std::string& s) {
  if (s.empty()) throw ParseError("expected a positive integer: \"" + s + "\"");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("expected a positive integer: \"" + s + "\"");
  return std::stoi(s);
}

}  // namespace

PointConfiguration parse_config_shorthand(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("bad configuration shorthand: \"" + s + "\"");
  std::string kind = s.substr(0, colon);
  std::string rest = s.substr(colon + 1);
  if (kind == "cube") return cube_config(parse_positive_int(rest));
  if (kind == "simplexprod") {
    auto x = rest.find('x');
    if (x == std::string::npos) throw ParseError("simplexprod shorthand wants NxM: \"" + s + "\"");
    return simplex_product_config(parse_positive_int(rest.substr(0, x)),
                                  parse_positive_int(rest.substr(x + 1)));
  }
  if (kind == "box") {
    std::vector<int> bounds;
    std::string part;
    std::stringstream ss(rest);
    while (std::getline(ss, part, 'x')) bounds.push_back(parse_positive_int(part));
    return box_lattice_config(bounds);
  }
  throw ParseError("unknown configuration kind: \"" + kind + "\"");
}

Json config_json(const PointConfiguration& cfg) {
  switch (cfg.kind) {
    case ConfigKind::Cube:
      return "cube:" + std::to_string(cfg.items);
    case ConfigKind::SimplexProduct:
      return "simplexprod:" + std::to_string(cfg.players) + "x" + std::to_string(cfg.items);
    case ConfigKind::Box: {
      std::string s = "box:";
      for (std::size_t i = 0; i < cfg.bounds.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(cfg.bounds[i]);
      }
      return s;
    }
    case ConfigKind::Custom:
      break;
  }
  Json j;
  j["dimension"] = cfg.dimension;
  j["points"] = cfg.points;
  j["labels"] = cfg.labels;
  return j;
}

PointConfiguration config_from_json(const Json& j) {
  if (j.is_string()) return parse_config_shorthand(j.get<std::string>());
  if (!j.is_object() || !j.contains("dimension") || !j.contains("points"))
    throw ParseError("configuration JSON needs dimension and points");
  PointConfiguration cfg;
  cfg.dimension = j.at("dimension").get<int>();
  for (const auto& p : j.at("points")) cfg.points.push_back(p.get<std::vector<int>>());
  if (j.contains("labels")) cfg.labels = j.at("labels").get<std::vector<std::string>>();
  cfg.kind = ConfigKind::Custom;
  cfg.finalize();
  return cfg;
}

Json subdivision_json(const Subdivision& s) {
  Json j;
  j["config"] = config_json(s.config);
  CellList cells = s.cells;
  std::sort(cells.begin(), cells.end());
  j["cells"] = cells;
  return j;
}

Subdivision subdivision_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("config") || !j.contains("cells"))
    throw ParseError("subdivision JSON needs config and cells");
  Subdivision s;
  s.config = config_from_json(j.at("config"));
  for (const auto& c : j.at("cells")) {
    Cell cell = c.get<Cell>();
    std::sort(cell.begin(), cell.end());
    s.cells.push_back(std::move(cell));
  }
  std::sort(s.cells.begin(), s.cells.end());
  return s;
}

Json lifting_json(const Lifting& l) {
  Json arr = Json::array();
  for (const auto& h : l.heights) arr.push_back(rational_json(h));
  Json j;
  j["heights"] = arr;
  return j;
}

Lifting lifting_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("heights")) throw ParseError("lifting JSON needs heights");
  Lifting l;
  for (const auto& h : j.at("heights")) l.heights.push_back(rational_from_json(h));
  return l;
}

Json polynomial_json(const TropicalPolynomial& p) {
  Json j;
  j["support"] = p.support;
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs) coeffs.push_back(c ? Json(rational_to_string(*c)) : Json("-inf"));
  j["coeffs"] = coeffs;
  return j;
}

TropicalPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("support") || !j.contains("coeffs"))
    throw ParseError("polynomial JSON needs support and coeffs");
  TropicalPolynomial p;
  for (const auto& u : j.at("support")) p.support.push_back(u.get<std::vector<int>>());
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string() && c.get<std::string>() == "-inf")
      p.coeffs.push_back(std::nullopt);
    else
      p.coeffs.push_back(rational_from_json(c));
  }
  if (p.support.size() != p.coeffs.size())
    throw ParseError("polynomial JSON: support/coeffs length mismatch");
  std::set<std::vector<int>> seen(p.support.begin(), p.support.end());
  if (seen.size() != p.support.size())
    throw ParseError("polynomial JSON: support points must be distinct");
  return p;
}

Json mechanism_json(const Mechanism& mech) {
  Json pay = Json::object();
  for (unsigned a = 0; a < mech.payments.size(); ++a)
    pay[bundle_label(a, mech.items)] = rational_json(mech.payments[a]);
  Json j;
  j["items"] = mech.items;
  j["payments"] = pay;
  return j;
}

Mechanism mechanism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("items") || !j.contains("payments"))
    throw ParseError("mechanism JSON needs items and payments");
  Mechanism mech;
  mech.items = j.at("items").get<int>();
  if (mech.items < 1 || mech.items > 10) throw ParseError("mechanism items out of range [1,10]");
  const unsigned nb = 1u << mech.items;
  mech.payments.assign(nb, Rational(0));
  std::vector<char> seen(nb, 0);
  for (const auto& [key, value] : j.at("payments").items()) {
    if (static_cast<int>(key.size()) != mech.items)
      throw ParseError("payment key \"" + key + "\" has wrong length");
    unsigned a = bundle_from_label(key);
    mech.payments[a] = rational_from_json(value);
    seen[a] = 1;
  }
  for (unsigned a = 0; a < nb; ++a)
    if (!seen[a]) throw ParseError("missing payment for bundle " + bundle_label(a, mech.items));
  return mech;
}

Json affine_maximizer_json(const AffineMaximizer& am) {
  Json j;
  j["players"] = am.players;
  j["items"] = am.items;
  Json w = Json::array();
  for (const auto& x : am.weights) w.push_back(rational_json(x));
  j["weights"] = w;
  PointConfiguration cfg = simplex_product_config(am.players, am.items);
  Json biases = Json::object();
  for (std::size_t i = 0; i < cfg.size(); ++i) biases[cfg.labels[i]] = rational_json(am.biases[i]);
  j["biases"] = biases;
  return j;
}

AffineMaximizer affine_maximizer_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("players") || !j.contains("items") ||
      !j.contains("weights") || !j.contains("biases"))
    throw ParseError("affine maximizer JSON needs players, items, weights, biases");
  AffineMaximizer am;
  am.players = j.at("players").get<int>();
  am.items = j.at("items").get<int>();
  if (am.players < 2 || am.items < 1) throw ParseError("affine maximizer: bad players/items");
  for (const auto& w : j.at("weights")) am.weights.push_back(rational_from_json(w));
  PointConfiguration cfg = simplex_product_config(am.players, am.items);
  am.biases.assign(cfg.size(), Rational(0));
  std::vector<char> seen(cfg.size(), 0);
  for (const auto& [key, value] : j.at("biases").items()) {
    int idx = -1;
    for (std::size_t i = 0; i < cfg.size(); ++i)
      if (cfg.labels[i] == key) {
        idx = static_cast<int>(i);
        break;
      }
    if (idx < 0) throw ParseError("unknown allocation key \"" + key + "\"");
    am.biases[idx] = rational_from_json(value);
    seen[idx] = 1;
  }
  for (std::size_t i = 0; i < cfg.size(); ++i)
    if (!seen[i]) throw ParseError("missing bias for allocation " + cfg.labels[i]);
  return am;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvariantError("cannot write file: " + path);
  out << content;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tropmech
