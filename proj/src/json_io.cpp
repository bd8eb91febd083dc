#include "toric/json_io.hpp"

#include <fstream>
#include <sstream>

namespace toric {

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw InputError(what);
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        bad(std::string("expected a JSON object with key \"") + key + "\"");
    auto it = j.find(key);
    if (it == j.end())
        bad(std::string("missing key \"") + key + "\"");
    return *it;
}

std::int64_t int_from_json(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        bad(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> ints_from_json(const Json& j, const char* what)
{
    if (!j.is_array())
        bad(std::string(what) + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& x : j)
        out.push_back(int_from_json(x, what));
    return out;
}

std::size_t dim_from_json(const Json& j)
{
    auto d = int_from_json(field(j, "dim"), "dim");
    if (d <= 0)
        bad("dim must be positive");
    return static_cast<std::size_t>(d);
}

void check_dims(const std::vector<Point>& pts, std::size_t dim)
{
    for (const auto& p : pts)
        if (p.size() != dim)
            bad("point " + to_string(p) + " does not have dimension " + std::to_string(dim));
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        bad(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (byte " +
            std::to_string(e.byte) + ")");
    }
}

Json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        bad("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path.string());
}

Json to_json(const Rational& q)
{
    return to_string(q);
}

Json to_json(const Point& p)
{
    Json a = Json::array();
    for (auto x : p)
        a.push_back(x);
    return a;
}

Json to_json(const std::vector<Point>& pts)
{
    Json a = Json::array();
    for (const auto& p : pts)
        a.push_back(to_json(p));
    return a;
}

Json to_json(const Facet& f)
{
    return Json{{"normal", to_json(f.normal)}, {"offset", f.offset}};
}

Json to_json(const LaurentPolynomial& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"exp", to_json(e)}, {"coef", to_json(c)}});
    return Json{{"dim", p.dim()}, {"terms", terms}};
}

Json to_json(const TruncatedSeries& s)
{
    Json coeffs = Json::array();
    for (const auto& [e, c] : s.coeffs())
        coeffs.push_back(Json{{"exp", to_json(e)}, {"value", to_json(c)}});
    return Json{{"vars", s.nvars()}, {"order", s.order()}, {"coeffs", coeffs}};
}

Json to_json(const MixedVolumeRow& row)
{
    Json k = Json::array();
    for (auto x : row.k.parts)
        k.push_back(x);
    return Json{{"k", k},
                {"residue", to_json(row.residue)},
                {"mixed_volume", to_json(row.mixed_volume)},
                {"equal", row.equal}};
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            bad("not a rational number: \"" + j.get<std::string>() + "\"");
        }
    }
    bad("rational numbers must be strings \"p/q\" or integers");
}

Point point_from_json(const Json& j)
{
    auto v = ints_from_json(j, "point coordinate");
    return Point(v.begin(), v.end());
}

std::vector<Point> points_from_json(const Json& j)
{
    if (!j.is_array())
        bad("expected an array of points");
    std::vector<Point> out;
    for (const auto& p : j)
        out.push_back(point_from_json(p));
    return out;
}

LatticePolytope polytope_from_json(const Json& j)
{
    const auto dim = dim_from_json(j);
    auto pts = points_from_json(field(j, "points"));
    if (pts.empty())
        bad("polytope has no points");
    check_dims(pts, dim);
    return convex_hull(std::move(pts));
}

Json polytope_to_json(const LatticePolytope& p)
{
    return Json{{"dim", p.ambient_dim()}, {"points", to_json(p.vertices())}};
}

NefPartition nefpart_from_json(const Json& j)
{
    if (j.is_object() && j.contains("type")) {
        auto fam = family_from_json(j);
        if (auto* w = std::get_if<WpsFamily>(&fam))
            return w->nef_partition();
        bad("only WPS families carry a nef-partition");
    }
    const auto dim = dim_from_json(j);
    const auto& parts = field(j, "parts");
    if (!parts.is_array())
        bad("parts must be an array of point lists");
    std::vector<std::vector<Point>> out;
    for (const auto& part : parts) {
        out.push_back(points_from_json(part));
        check_dims(out.back(), dim);
    }
    return check_nef_partition(dim, out);
}

Json nefpart_to_json(std::size_t dim, const std::vector<std::vector<Point>>& parts)
{
    Json a = Json::array();
    for (const auto& part : parts)
        a.push_back(to_json(part));
    return Json{{"dim", dim}, {"parts", a}};
}

LaurentPolynomial laurent_from_json(const Json& j)
{
    const auto dim = dim_from_json(j);
    const auto& terms = field(j, "terms");
    if (!terms.is_array())
        bad("terms must be an array");
    LaurentPolynomial p(dim);
    for (const auto& t : terms) {
        auto e = point_from_json(field(t, "exp"));
        if (e.size() != dim)
            bad("exponent " + to_string(e) + " does not have dimension " + std::to_string(dim));
        p.add_term(e, rational_from_json(field(t, "coef")));
    }
    return p;
}

std::vector<LaurentPolynomial> polys_from_json(const Json& j)
{
    const auto& polys = field(j, "polys");
    if (!polys.is_array() || polys.empty())
        bad("polys must be a nonempty array");
    std::vector<LaurentPolynomial> out;
    for (const auto& p : polys)
        out.push_back(laurent_from_json(p));
    return out;
}

std::vector<Rational> coeffs_from_json(const Json& j)
{
    const auto& a = field(j, "a");
    if (!a.is_array())
        bad("a must be an array of rationals");
    std::vector<Rational> out;
    for (const auto& x : a)
        out.push_back(rational_from_json(x));
    return out;
}

TruncatedSeries series_from_json(const Json& j)
{
    auto vars = int_from_json(field(j, "vars"), "vars");
    auto order = int_from_json(field(j, "order"), "order");
    if (vars <= 0 || order < 0)
        bad("series needs vars > 0 and order >= 0");
    TruncatedSeries s(static_cast<std::size_t>(vars), order);
    for (const auto& c : field(j, "coeffs"))
        s.set(point_from_json(field(c, "exp")), rational_from_json(field(c, "value")));
    return s;
}

Family family_from_json(const Json& j)
{
    const auto& type = field(j, "type");
    if (!type.is_string())
        bad("family type must be a string");
    const auto t = type.get<std::string>();
    if (t == "wps") {
        auto weights = ints_from_json(field(j, "weights"), "weights");
        std::vector<std::vector<std::size_t>> parts;
        for (const auto& part : field(j, "parts")) {
            parts.emplace_back();
            for (auto idx : ints_from_json(part, "part index")) {
                if (idx < 1 || idx > static_cast<std::int64_t>(weights.size()))
                    bad("part index " + std::to_string(idx) + " out of range 1.." + std::to_string(weights.size()));
                parts.back().push_back(static_cast<std::size_t>(idx - 1));
            }
        }
        return WpsFamily(std::move(weights), std::move(parts));
    }
    if (t == "product") {
        auto dims = ints_from_json(field(j, "dims"), "dims");
        std::vector<std::vector<std::int64_t>> degrees;
        for (const auto& row : field(j, "degrees"))
            degrees.push_back(ints_from_json(row, "degrees"));
        std::vector<std::int64_t> scale;
        if (j.contains("y_scale"))
            scale = ints_from_json(j["y_scale"], "y_scale");
        return ProductFamily(std::move(dims), std::move(degrees), std::move(scale));
    }
    bad("unknown family type \"" + t + "\" (expected wps or product)");
}

Json family_to_json(const Family& f)
{
    if (const auto* w = std::get_if<WpsFamily>(&f)) {
        Json parts = Json::array();
        for (const auto& part : w->parts()) {
            Json a = Json::array();
            for (auto i : part)
                a.push_back(i + 1);
            parts.push_back(a);
        }
        return Json{{"type", "wps"}, {"weights", w->weights()}, {"parts", parts}};
    }
    const auto& p = std::get<ProductFamily>(f);
    return Json{{"type", "product"}, {"dims", p.dims()}, {"degrees", p.degrees()}, {"y_scale", p.y_scale()}};
}

}  // namespace toric
