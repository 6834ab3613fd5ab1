#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "divpoly/nullstellensatz.hpp"
#include "divpoly/transport.hpp"

namespace divpoly {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings; integers are also accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// { "m": int, "labels": [string], "constants": [[["p/q", ...]]] }
Json algebra_to_json(const AlgebraSpec& spec);
AlgebraPtr algebra_from_json(const Json& j);
AlgebraPtr load_algebra(const std::string& path);

// [ {"coef": "p/q", "basis": [s0, ..., sk], "vars": [mu1, ..., muk]} ], 1-based.
Json freepoly_to_json(const FreePoly& p);
FreePoly freepoly_from_json(const Json& j, const AlgebraPtr& spec, std::size_t nvars);

// [ {"coef": "p/q", "exp": [e_11, ..., e_nm]} ]
Json scalarpoly_to_json(const ScalarPoly& p);
ScalarPoly scalarpoly_from_json(const Json& j, std::size_t ncentral);

// [ {"coef": ["p/q", ...m], "exp": [...]} ]
Json centralpoly_to_json(const CentralPoly& p);

// { "n": int, "target": freepoly, "steps": [ {"left": freepoly, "gen": int, "right": freepoly} ] }
// "gen" is the 1-based position in gpi_generators(spec, n).
Json certificate_to_json(const GpiCertificate& c);
GpiCertificate certificate_from_json(const Json& j, const AlgebraPtr& spec);

// { "n": int, "generators": [freepoly], "scalar_generators": [scalarpoly], "groebner": [scalarpoly] }
Json ideal_to_json(const IdealHandle& ideal);
// Recomputes the caches from the generators; InvalidFormat if stored caches disagree.
IdealHandle ideal_from_json(const Json& j, const AlgebraPtr& spec);

// { "f": freepoly, "m": int, "witnesses": [freepoly] }
Json radical_certificate_to_json(const RadicalCertificate& c);
RadicalCertificate radical_certificate_from_json(const Json& j, const AlgebraPtr& spec, std::size_t nvars);

// [ [ [a, b, c, d], ... n ], ... ]
std::vector<Point> points_from_json(const Json& j, const AlgebraSpec& spec, std::size_t nvars);
Json point_to_json(const Point& a);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace divpoly
