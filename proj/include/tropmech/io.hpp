#pragma once

// JSON serialization for every artifact type, plus the CLI shorthand parsers.
// Rationals serialize as "num/den" strings ("num" when the denominator is 1);
// tropical coefficients may additionally be "-inf".

#include <string>

#include "json.hpp"
#include "tropmech/affine.hpp"
#include "tropmech/mechanism.hpp"
#include "tropmech/point_config.hpp"
#include "tropmech/subdivision.hpp"
#include "tropmech/tropical.hpp"

namespace tropmech {

using Json = nlohmann::json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

// "cube:3", "simplexprod:3x2", "box:2x3"
PointConfiguration parse_config_shorthand(const std::string& s);

Json config_json(const PointConfiguration& cfg);  // shorthand string when canonical
PointConfiguration config_from_json(const Json& j);

Json subdivision_json(const Subdivision& s);
Subdivision subdivision_from_json(const Json& j);

Json lifting_json(const Lifting& l);
Lifting lifting_from_json(const Json& j);

Json polynomial_json(const TropicalPolynomial& p);
TropicalPolynomial polynomial_from_json(const Json& j);

Json mechanism_json(const Mechanism& mech);
Mechanism mechanism_from_json(const Json& j);

Json affine_maximizer_json(const AffineMaximizer& am);
AffineMaximizer affine_maximizer_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Serialized with sorted keys, two-space indent, and a trailing newline, so
// identical inputs produce byte-identical files.
std::string dump_json(const Json& j);

}  // namespace tropmech
