#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "toric/laurent.hpp"
#include "toric/mirror.hpp"
#include "toric/polytope.hpp"
#include "toric/residue.hpp"
#include "toric/series.hpp"

namespace toric {

/// Key order follows insertion so reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Malformed or unreadable input. The message names the file and, for parse
/// errors, the line and column.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json read_json_file(const std::filesystem::path& path);
Json parse_json_text(const std::string& text, const std::string& source);

Json to_json(const Rational& q);
Json to_json(const Point& p);
Json to_json(const std::vector<Point>& pts);
Json to_json(const Facet& f);
Json to_json(const LaurentPolynomial& p);
Json to_json(const TruncatedSeries& s);
Json to_json(const MixedVolumeRow& row);

Rational rational_from_json(const Json& j);
Point point_from_json(const Json& j);
std::vector<Point> points_from_json(const Json& j);

/// {"dim": d, "points": [[...], ...]}
LatticePolytope polytope_from_json(const Json& j);
Json polytope_to_json(const LatticePolytope& p);

/// {"dim": d, "parts": [[[...], ...], ...]}, or a WPS family description.
NefPartition nefpart_from_json(const Json& j);
Json nefpart_to_json(std::size_t dim, const std::vector<std::vector<Point>>& parts);

/// {"dim": n, "terms": [{"exp": [...], "coef": "p/q"}, ...]}
LaurentPolynomial laurent_from_json(const Json& j);
/// {"polys": [poly, ...]}
std::vector<LaurentPolynomial> polys_from_json(const Json& j);
/// {"a": ["p/q", ...]}
std::vector<Rational> coeffs_from_json(const Json& j);

/// {"vars": p, "order": N, "coeffs": [{"exp": [...], "value": "p/q"}, ...]}
TruncatedSeries series_from_json(const Json& j);

/// {"type": "wps", "weights": [...], "parts": [[1-based indices], ...]} or
/// {"type": "product", "dims": [...], "degrees": [[...], ...], "y_scale": [...]}
Family family_from_json(const Json& j);
Json family_to_json(const Family& f);

}  // namespace toric
