#include "toric/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

namespace toric::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::string in;
    std::string nefpart;
    std::string coeffs;
    std::string polys;
    std::string poly;
    std::string family;
    std::string polytopes;
    std::string manifest;
    std::string out;
    std::string fixture;
    std::string k;
    std::string indices;
    std::int64_t order = 6;
    std::uint64_t seed = 1;
    std::size_t points = 1;
    bool seed_given = false;
};

struct Outcome {
    Json report;
    int code = kOk;
};

const std::vector<std::string> kPathFlags = {"--in",        "--nefpart",  "--coeffs", "--polys", "--poly",
                                             "--family",    "--polytopes", "--manifest", "--out"};

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* flag)
{
    std::vector<std::int64_t> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string::npos)
            end = text.size();
        std::int64_t v = 0;
        const char* first = text.data() + start;
        const char* last = text.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last)
            throw UsageError(std::string(flag) + " expects comma-separated integers, got \"" + text + "\"");
        out.push_back(v);
        start = end + 1;
    }
    return out;
}

const std::string& require(const std::string& value, const char* flag, const std::string& command)
{
    if (value.empty())
        throw UsageError(command + " requires " + flag);
    return value;
}

Json k_json(const std::vector<std::int64_t>& k)
{
    Json a = Json::array();
    for (auto x : k)
        a.push_back(x);
    return a;
}

Json rationals_json(const std::vector<Rational>& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

// f_1..f_r from --polys, or from --nefpart with --coeffs / --seed.
std::vector<LaurentPolynomial> load_polys(const RunConfig& c, std::optional<NefPartition>* np_out = nullptr)
{
    if (!c.polys.empty())
        return polys_from_json(read_json_file(c.polys));
    if (c.nefpart.empty())
        throw UsageError(c.command + " requires --polys or --nefpart");
    auto np = nefpart_from_json(read_json_file(c.nefpart));
    std::vector<LaurentPolynomial> fs;
    if (!c.coeffs.empty())
        fs = nef_laurent_polynomials(np, coeffs_from_json(read_json_file(c.coeffs)));
    else
        fs = nef_laurent_polynomials(np, random_coefficients(np.generators().size(), c.seed));
    if (np_out)
        *np_out = std::move(np);
    return fs;
}

Outcome polytope_info(const RunConfig& c)
{
    auto p = polytope_from_json(read_json_file(require(c.in, "--in", c.command)));
    Json facets = Json::array();
    for (const auto& f : p.facets())
        facets.push_back(to_json(f));
    Json eqs = Json::array();
    for (const auto& e : p.equations())
        eqs.push_back(Json{{"normal", to_json(e.normal)}, {"value", e.value}});
    Json r{{"dim", p.ambient_dim()},
           {"affine_dim", p.affine_dim()},
           {"full_dimensional", p.full_dimensional()},
           {"vertices", to_json(p.vertices())},
           {"facets", facets},
           {"equations", eqs},
           {"lattice_points", lattice_points(p).size()},
           {"normalized_volume", to_string(normalized_volume(p))}};
    if (p.full_dimensional()) {
        r["interior_lattice_points"] = interior_lattice_points(p).size();
        r["reflexive"] = is_reflexive(p);
    }
    return {r, kOk};
}

Outcome polytope_dual(const RunConfig& c)
{
    auto p = polytope_from_json(read_json_file(require(c.in, "--in", c.command)));
    if (!p.full_dimensional() || !is_reflexive(p))
        throw UsageError("polytope is not reflexive; the dual is not a lattice polytope");
    return {polytope_to_json(dual_polytope(p)), kOk};
}

const char* kind_name(NefPartitionError::Kind k)
{
    switch (k) {
    case NefPartitionError::Kind::EmptyInput: return "empty_input";
    case NefPartitionError::Kind::DimensionMismatch: return "dimension_mismatch";
    case NefPartitionError::Kind::ZeroPoint: return "zero_point";
    case NefPartitionError::Kind::Overlap: return "overlap";
    case NefPartitionError::Kind::NotReflexive: return "not_reflexive";
    case NefPartitionError::Kind::BadMinimum: return "bad_minimum";
    case NefPartitionError::Kind::VertexCoverage: return "vertex_coverage";
    }
    return "unknown";
}

Outcome nefpart_check(const RunConfig& c)
{
    auto j = read_json_file(require(c.nefpart, "--nefpart", c.command));
    try {
        auto np = nefpart_from_json(j);
        Json b = Json::array();
        for (const auto& part : np.vertex_partition)
            b.push_back(to_json(part));
        return {Json{{"valid", true},
                     {"dim", np.dim},
                     {"r", np.r()},
                     {"sum_vertices", to_json(np.sum.vertices())},
                     {"vertex_partition", b}},
                kOk};
    } catch (const NefPartitionError& e) {
        return {Json{{"valid", false}, {"kind", kind_name(e.kind())}, {"reason", e.what()}}, kMismatch};
    }
}

Outcome nefpart_dual(const RunConfig& c)
{
    auto np = nefpart_from_json(read_json_file(require(c.nefpart, "--nefpart", c.command)));
    auto dual = dual_nef_partition(np);
    Json nablas = Json::array();
    for (const auto& n : dual.nablas)
        nablas.push_back(to_json(n.vertices()));
    Json r = nefpart_to_json(np.dim, np.vertex_partition);
    r["nablas"] = nablas;
    r["delta_star"] = to_json(dual.delta_star.vertices());
    r["nabla_star"] = to_json(dual.nabla_star.vertices());
    return {r, kOk};
}

Outcome cayley_build(const RunConfig& c)
{
    Json r;
    if (!c.polys.empty() || !c.coeffs.empty() || c.seed_given) {
        auto fs = load_polys(c);
        std::vector<LatticePolytope> newton;
        for (const auto& f : fs)
            newton.push_back(f.newton_polytope());
        auto cay = cayley_polytope(newton);
        r["polytope"] = polytope_to_json(cay);
        r["normalized_volume"] = to_string(normalized_volume(cay));
        r["polynomial"] = to_json(cayley_polynomial(fs));
    } else {
        auto np = nefpart_from_json(read_json_file(require(c.nefpart, "--nefpart", c.command)));
        auto cay = cayley_polytope(np.polytopes);
        r["polytope"] = polytope_to_json(cay);
        r["normalized_volume"] = to_string(normalized_volume(cay));
    }
    return {r, kOk};
}

Outcome hessian_full(const RunConfig& c)
{
    if (!c.poly.empty()) {
        auto f = laurent_from_json(read_json_file(c.poly));
        auto h = hessian(f);
        bool agree = h == hessian_subset_sum(f);
        return {Json{{"hessian", to_json(h)}, {"subset_formula_agrees", agree}}, agree ? kOk : kMismatch};
    }
    auto fs = load_polys(c);
    auto F = cayley_polynomial(fs);
    auto h = hessian(F);
    bool agree = h == hessian_subset_sum(F);
    LaurentPolynomial sum(F.dim());
    const auto d = fs.front().dim();
    for (const auto& k : multidegrees(fs.size(), static_cast<std::int64_t>(d + fs.size()), true))
        sum += mixed_hessian(fs, k).value;
    bool mixed = sum == h;
    return {Json{{"F", to_json(F)},
                 {"hessian", to_json(h)},
                 {"subset_formula_agrees", agree},
                 {"mixed_components_sum_agrees", mixed}},
            agree && mixed ? kOk : kMismatch};
}

Outcome hessian_mixed(const RunConfig& c)
{
    auto fs = load_polys(c);
    MultiDegree k{parse_int_list(require(c.k, "--k", c.command), "--k")};
    auto m = mixed_hessian(fs, k);
    auto component = hessian(cayley_polynomial(fs)).multigraded_component(k.parts);
    bool match = component == m.value;
    return {Json{{"k", k_json(k.parts)},
                 {"structurally_zero", m.structurally_zero},
                 {"value", to_json(m.value)},
                 {"matches_component", match}},
            match ? kOk : kMismatch};
}

Outcome mixedvol(const RunConfig& c)
{
    auto j = read_json_file(require(c.polytopes, "--polytopes", c.command));
    if (!j.is_object() || !j.contains("dim") || !j.contains("polytopes") || !j["polytopes"].is_array())
        throw InputError("expected {\"dim\": d, \"polytopes\": [[points], ...]}");
    std::vector<LatticePolytope> polys;
    for (const auto& pts : j["polytopes"])
        polys.push_back(polytope_from_json(Json{{"dim", j["dim"]}, {"points", pts}}));
    if (polys.size() != j["dim"].get<std::size_t>())
        throw UsageError("mixed volume needs exactly dim polytopes");
    return {Json{{"mixed_volume", to_json(mixed_volume(polys))}}, kOk};
}

struct CoefficientPoint {
    std::vector<Rational> a;
    ResidueFunctional rf;
};

std::vector<CoefficientPoint> functional_points(const RunConfig& c, const NefPartition& np)
{
    std::vector<CoefficientPoint> out;
    if (!c.coeffs.empty()) {
        auto a = coeffs_from_json(read_json_file(c.coeffs));
        auto rf = residue_functional(nef_laurent_polynomials(np, a), np);
        out.push_back({std::move(a), std::move(rf)});
        return out;
    }
    for (std::size_t i = 0; i < std::max<std::size_t>(c.points, 1); ++i) {
        auto s = regular_functional_from_seed(np, c.seed + i);
        out.push_back({std::move(s.a), std::move(s.rf)});
    }
    return out;
}

Outcome residue_functional_cmd(const RunConfig& c)
{
    auto np = nefpart_from_json(read_json_file(require(c.nefpart, "--nefpart", c.command)));
    auto pts = functional_points(c, np);
    const auto& [a, rf] = pts.front();
    Json r{{"coefficients", rationals_json(a)},
           {"regular", rf.regular},
           {"vol", to_string(rf.vol)},
           {"basis_size", rf.basis.size()},
           {"span_size", rf.span_size},
           {"annihilator_dim", rf.annihilator_dim}};
    if (rf.regular) {
        Json values = Json::array();
        for (std::size_t i = 0; i < rf.basis.size(); ++i)
            values.push_back(Json{{"exp", to_json(rf.basis.monomials[i])}, {"value", to_json(rf.lambda[i])}});
        r["hessian_value"] = to_json(evaluate(rf, rf.hessian));
        r["values"] = values;
    } else {
        r["diagnostic"] = rf.diagnostic;
    }
    return {r, kOk};
}

Outcome residue_eval(const RunConfig& c)
{
    auto np = nefpart_from_json(read_json_file(require(c.nefpart, "--nefpart", c.command)));
    auto P = laurent_from_json(read_json_file(require(c.poly, "--poly", c.command)));
    auto pts = functional_points(c, np);
    const auto& [a, rf] = pts.front();
    if (!rf.regular)
        throw std::runtime_error("coefficients are not regular: " + rf.diagnostic);
    MultiDegree kbar;
    if (!c.k.empty()) {
        kbar.parts = parse_int_list(c.k, "--k");
    } else {
        auto g = group_degree(P, np);
        if (!g)
            throw UsageError("polynomial is not homogeneous in each group; pass --k");
        kbar = *g;
    }
    auto v = residue_of_P(rf, np, P, a, kbar);
    return {Json{{"coefficients", rationals_json(a)}, {"kbar", k_json(kbar.parts)}, {"value", to_json(v)}}, kOk};
}

Outcome residue_volumes(const RunConfig& c)
{
    auto np = nefpart_from_json(read_json_file(require(c.nefpart, "--nefpart", c.command)));
    auto pts = functional_points(c, np);
    Json points = Json::array();
    std::optional<ResidueVolumeReport> first;
    bool consistent = true;
    for (const auto& [a, rf] : pts) {
        if (!rf.regular)
            throw std::runtime_error("coefficients are not regular: " + rf.diagnostic);
        auto rep = residue_volume_report(rf.fs, np);
        points.push_back(rationals_json(a));
        if (!first) {
            first = rep;
            continue;
        }
        for (std::size_t i = 0; i < rep.rows.size(); ++i)
            consistent = consistent && rep.rows[i].residue == first->rows[i].residue;
    }
    Json rows = Json::array();
    for (const auto& row : first->rows)
        rows.push_back(to_json(row));
    Json r{{"coefficient_points", points},
           {"rows", rows},
           {"sum", to_json(first->residue_sum)},
           {"vol", to_string(first->vol)},
           {"sum_matches", first->sum_matches},
           {"all_equal", first->all_equal},
           {"consistent_across_points", consistent}};
    bool ok = first->sum_matches && first->all_equal && consistent;
    return {r, ok ? kOk : kMismatch};
}

Outcome series_wps(const RunConfig& c)
{
    auto fam = family_from_json(read_json_file(require(c.family, "--family", c.command)));
    auto* w = std::get_if<WpsFamily>(&fam);
    if (!w)
        throw UsageError("series wps needs a wps family");
    auto P = laurent_from_json(read_json_file(require(c.poly, "--poly", c.command)));
    return {to_json(wps_intersection_series(*w, P, c.order)), kOk};
}

Outcome series_product(const RunConfig& c)
{
    auto fam = family_from_json(read_json_file(require(c.family, "--family", c.command)));
    auto* p = std::get_if<ProductFamily>(&fam);
    if (!p)
        throw UsageError("series product needs a product family");
    auto k = parse_int_list(require(c.k, "--k", c.command), "--k");
    return {to_json(product_intersection_series(*p, k, c.order)), kOk};
}

Outcome yukawa(const RunConfig& c)
{
    const auto& text = c.indices.empty() ? c.k : c.indices;
    auto spec = yukawa_fixture(require(c.fixture, "--fixture", c.command), parse_int_list(text, "--indices"));
    return {to_json(expand_rational(spec, c.order)), kOk};
}

Outcome verify_trmc(const RunConfig& c)
{
    auto fam = family_from_json(read_json_file(require(c.family, "--family", c.command)));
    TrmcReport rep;
    if (auto* w = std::get_if<WpsFamily>(&fam)) {
        auto P = laurent_from_json(read_json_file(require(c.poly, "--poly", c.command)));
        rep = trmc_check(*w, P, c.order, c.seed, std::max<std::size_t>(c.points, 2));
    } else {
        auto k = parse_int_list(require(c.k, "--k", c.command), "--k");
        rep = trmc_check(std::get<ProductFamily>(fam), k, c.order);
    }
    Json mism = Json::array();
    for (const auto& m : rep.mismatches)
        mism.push_back(Json{{"comparison", m.comparison},
                            {"exp", to_json(m.exponent)},
                            {"expected", to_json(m.expected)},
                            {"actual", to_json(m.actual)}});
    Json pcs = Json::array();
    for (const auto& pc : rep.point_checks)
        pcs.push_back(Json{{"a", rationals_json(pc.a)},
                           {"y", to_json(pc.y)},
                           {"residue", to_json(pc.residue)},
                           {"closed_form", to_json(pc.closed_form)},
                           {"equal", pc.equal}});
    Json r{{"family", family_to_json(fam)},
           {"reference", rep.reference},
           {"order", c.order},
           {"coefficients_compared", rep.coefficients_compared},
           {"ok", rep.ok},
           {"mismatches", mism},
           {"point_checks", pcs},
           {"series", to_json(rep.series)}};
    return {r, rep.ok ? kOk : kMismatch};
}

std::string cell(const Json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

bool is_scalar(const Json& v)
{
    return !v.is_object() && !v.is_array();
}

bool is_record_list(const Json& v)
{
    return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); });
}

void render(const Json& obj, const std::string& indent, std::ostringstream& os)
{
    std::size_t width = 0;
    for (const auto& [key, v] : obj.items())
        if (!v.is_object() && !is_record_list(v))
            width = std::max(width, key.size());
    for (const auto& [key, v] : obj.items()) {
        if (v.is_object()) {
            os << indent << key << ":\n";
            render(v, indent + "  ", os);
        } else if (is_record_list(v)) {
            os << indent << key << ":\n";
            std::vector<std::string> cols;
            for (const auto& rec : v)
                for (const auto& [ck, cv] : rec.items())
                    if (std::find(cols.begin(), cols.end(), ck) == cols.end())
                        cols.push_back(ck);
            std::vector<std::vector<std::string>> cells;
            cells.push_back(cols);
            for (const auto& rec : v) {
                std::vector<std::string> row;
                for (const auto& col : cols)
                    row.push_back(rec.contains(col) ? cell(rec[col]) : "");
                cells.push_back(std::move(row));
            }
            std::vector<std::size_t> w(cols.size(), 0);
            for (const auto& row : cells)
                for (std::size_t i = 0; i < row.size(); ++i)
                    w[i] = std::max(w[i], row[i].size());
            for (const auto& row : cells) {
                std::string line = indent + "  ";
                for (std::size_t i = 0; i < row.size(); ++i) {
                    line += row[i];
                    if (i + 1 < row.size())
                        line += std::string(w[i] - row[i].size() + 2, ' ');
                }
                os << line << "\n";
            }
        } else {
            os << indent << key << std::string(width - key.size() + 2, ' ') << (is_scalar(v) ? cell(v) : v.dump())
               << "\n";
        }
    }
}

fs::path resolve(const fs::path& base, const std::string& p)
{
    fs::path q(p);
    return q.is_absolute() ? q : base / q;
}

int run_suite(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    const fs::path manifest(require(c.manifest, "--manifest", c.command));
    auto j = read_json_file(manifest);
    const Json cases = j.is_array() ? j : (j.is_object() && j.contains("cases") ? j["cases"] : Json());
    if (!cases.is_array())
        throw InputError(manifest.string() + ": expected a list of cases or {\"cases\": [...]}");
    const fs::path base = manifest.parent_path();

    std::vector<std::array<std::string, 4>> rows;
    bool all_pass = true;
    Json summary = Json::array();
    auto print = [&] {
        std::array<std::size_t, 4> w{4, 6, 6, 6};
        const std::array<std::string, 4> head{"case", "expect", "result", "detail"};
        for (std::size_t i = 0; i < 4; ++i)
            w[i] = head[i].size();
        for (const auto& r : rows)
            for (std::size_t i = 0; i < 4; ++i)
                w[i] = std::max(w[i], r[i].size());
        auto line = [&](const std::array<std::string, 4>& r) {
            std::string s;
            for (std::size_t i = 0; i < 4; ++i) {
                s += r[i];
                if (i + 1 < 4)
                    s += std::string(w[i] - r[i].size() + 2, ' ');
            }
            while (!s.empty() && s.back() == ' ')
                s.pop_back();
            out << s << "\n";
        };
        line(head);
        for (const auto& r : rows)
            line(r);
        out << (all_pass ? "all " : "") << rows.size() << " case(s), " << (all_pass ? "passed" : "FAILED") << "\n";
    };

    for (const auto& cs : cases) {
        if (!cs.is_object() || !cs.contains("name") || !cs.contains("command") || !cs["command"].is_array())
            throw InputError(manifest.string() + ": each case needs \"name\" and a \"command\" array");
        const auto name = cs["name"].get<std::string>();
        std::vector<std::string> args;
        bool path_next = false;
        for (const auto& a : cs["command"]) {
            if (!a.is_string())
                throw InputError(manifest.string() + ": command arguments must be strings in case " + name);
            auto s = a.get<std::string>();
            args.push_back(path_next ? resolve(base, s).string() : s);
            path_next = std::find(kPathFlags.begin(), kPathFlags.end(), s) != kPathFlags.end();
        }
        const int expect_exit = cs.value("expect_exit", 0);
        std::ostringstream o, e;
        const int code = run(args, o, e);
        if (code == kUsage && expect_exit != kUsage) {
            rows.push_back({name, std::to_string(expect_exit), "usage error", e.str().substr(0, e.str().find('\n'))});
            all_pass = false;
            print();
            err << "case " << name << ": " << e.str();
            return kUsage;
        }
        std::string detail;
        bool pass = code == expect_exit;
        if (!pass)
            detail = "exit " + std::to_string(code);
        if (pass && cs.contains("expect") && cs["expect"].is_object() && !cs["expect"].empty()) {
            Json result;
            try {
                result = Json::parse(o.str());
            } catch (const nlohmann::json::exception&) {
                pass = false;
                detail = "output is not JSON";
            }
            if (pass)
                for (const auto& [ptr, want] : cs["expect"].items()) {
                    Json::json_pointer jp(ptr);
                    if (!result.contains(jp)) {
                        pass = false;
                        detail = ptr + " missing";
                        break;
                    }
                    if (result.at(jp) != want) {
                        pass = false;
                        detail = ptr + ": expected " + cell(want) + ", got " + cell(result.at(jp));
                        break;
                    }
                }
        }
        all_pass = all_pass && pass;
        rows.push_back({name, std::to_string(expect_exit), pass ? "pass" : "FAIL", detail});
        summary.push_back(Json{{"name", name}, {"pass", pass}, {"exit", code}, {"detail", detail}});
    }
    print();
    if (!c.out.empty()) {
        std::ofstream f(c.out, std::ios::binary);
        if (!f)
            throw InputError("cannot write " + c.out);
        f << Json{{"cases", summary}, {"all_pass", all_pass}}.dump(2) << "\n";
    }
    return all_pass ? kOk : kMismatch;
}

void emit(const RunConfig& c, const Outcome& o, std::ostream& out)
{
    const std::string text = o.report.dump(2) + "\n";
    if (c.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw InputError("cannot write " + c.out);
    f << text;
    out << render_table(o.report);
}

}  // namespace

std::string render_table(const Json& report)
{
    std::ostringstream os;
    if (report.is_object())
        render(report, "", os);
    else
        os << cell(report) << "\n";
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact lattice polytopes, toric residues and mirror generating functions", "toric"};
    app.require_subcommand(1);
    RunConfig c;

    app.add_option("--in", c.in, "polytope JSON");
    app.add_option("--nefpart", c.nefpart, "nef-partition JSON (or a wps family)");
    app.add_option("--coeffs", c.coeffs, "coefficient JSON {\"a\": [...]}");
    app.add_option("--polys", c.polys, "polynomial list JSON {\"polys\": [...]}");
    app.add_option("--poly", c.poly, "single polynomial JSON");
    app.add_option("--family", c.family, "family JSON");
    app.add_option("--polytopes", c.polytopes, "polytope list JSON {\"dim\", \"polytopes\"}");
    app.add_option("--manifest", c.manifest, "suite manifest JSON");
    app.add_option("--out", c.out, "write the JSON report here and print a table");
    app.add_option("--fixture", c.fixture, "closed-form fixture name");
    app.add_option("--k", c.k, "multidegree or exponent list, e.g. 2,1");
    app.add_option("--indices", c.indices, "fixture indices, e.g. 3,0");
    app.add_option("--order", c.order, "series truncation order")->check(CLI::NonNegativeNumber);
    auto* seed_opt = app.add_option("--seed", c.seed, "seed for random coefficient points");
    app.add_option("--points", c.points, "number of seeded coefficient points")->check(CLI::PositiveNumber);

    std::map<CLI::App*, std::function<Outcome(const RunConfig&)>> handlers;
    CLI::App* suite = nullptr;
    auto group = [&](const std::string& name, const std::string& help) {
        auto* g = app.add_subcommand(name, help);
        g->fallthrough();
        return g;
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    std::function<Outcome(const RunConfig&)> fn) {
        auto* s = parent->add_subcommand(name, help);
        s->fallthrough();
        handlers[s] = std::move(fn);
        return s;
    };

    auto* polytope = group("polytope", "hull data and duals")->require_subcommand(1);
    leaf(polytope, "info", "vertices, facets, volume, lattice points", polytope_info);
    leaf(polytope, "dual", "dual of a reflexive polytope", polytope_dual);
    auto* nefpart = group("nefpart", "nef-partitions")->require_subcommand(1);
    leaf(nefpart, "check", "validate a nef-partition", nefpart_check);
    leaf(nefpart, "dual", "dual nef-partition", nefpart_dual);
    auto* cayley = group("cayley", "Cayley polytope and polynomial")->require_subcommand(1);
    leaf(cayley, "build", "Cayley polytope (and polynomial when coefficients are given)", cayley_build);
    auto* hess = group("hessian", "Hessians of Cayley polynomials")->require_subcommand(1);
    leaf(hess, "full", "full Hessian with subset-formula cross-check", hessian_full);
    leaf(hess, "mixed", "k-component of the Hessian", hessian_mixed);
    handlers[group("mixedvol", "mixed volume of dim polytopes")] = mixedvol;
    auto* residue = group("residue", "toric residue functional")->require_subcommand(1);
    leaf(residue, "functional", "solve for the residue functional", residue_functional_cmd);
    leaf(residue, "eval", "residue of a group-homogeneous polynomial", residue_eval);
    leaf(residue, "volumes", "mixed residues of mixed Hessians against mixed volumes", residue_volumes);
    auto* series = group("series", "generating functions of intersection numbers")->require_subcommand(1);
    leaf(series, "wps", "weighted projective space family", series_wps);
    leaf(series, "product", "product of projective spaces family", series_product);
    handlers[group("yukawa", "expansion of a closed-form fixture")] = yukawa;
    auto* verify = group("verify", "cross-checks")->require_subcommand(1);
    leaf(verify, "trmc", "intersection series against closed forms and residues", verify_trmc);
    suite = group("suite", "run a manifest of cases");

    std::vector<std::string> argv_store{"toric"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    c.seed_given = seed_opt->count() > 0;

    try {
        if (suite->parsed()) {
            c.command = "suite";
            return run_suite(c, out, err);
        }
        for (auto& [sub, fn] : handlers) {
            if (!sub->parsed())
                continue;
            c.command = sub->get_parent() == &app ? sub->get_name()
                                                   : sub->get_parent()->get_name() + " " + sub->get_name();
            auto outcome = fn(c);
            emit(c, outcome, out);
            return outcome.code;
        }
        err << "error: no command given\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const NefPartitionError& e) {
        err << "input error: invalid nef-partition: " << e.what() << "\n";
        return kUsage;
    } catch (const BasisTooLarge& e) {
        err << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        err << "mismatch: " << e.what() << "\n";
        return kMismatch;
    }
}

}  // namespace toric::cli
