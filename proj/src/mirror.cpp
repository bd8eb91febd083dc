#include "toric/mirror.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "toric/residue.hpp"

namespace toric {

namespace {

Rational rpow(std::int64_t base, std::int64_t e)
{
    return pow(Rational(static_cast<long>(base)), static_cast<long>(e));
}

// Unimodular U with U w = e_1, found by integer row reduction of w. The
// columns of rows 2..n of U are the fan vectors: they satisfy sum w_i v_i = 0
// and generate Z^{n-1} because U is invertible over Z.
std::vector<Point> fan_from_weights(const std::vector<std::int64_t>& w)
{
    const std::size_t n = w.size();
    std::vector<std::int64_t> x = w;
    std::vector<Point> U(n, Point(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        U[i][i] = 1;
    while (true) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (x[i] != 0 && (piv == n || std::abs(x[i]) < std::abs(x[piv])))
                piv = i;
        bool done = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == piv || x[j] == 0)
                continue;
            const std::int64_t q = x[j] / x[piv];
            x[j] -= q * x[piv];
            U[j] = U[j] - scaled(U[piv], q);
            if (x[j] != 0)
                done = false;
        }
        if (done) {
            std::swap(x[0], x[piv]);
            std::swap(U[0], U[piv]);
            break;
        }
    }
    if (x[0] < 0)
        U[0] = scaled(U[0], -1);
    std::vector<Point> fan(n, Point(n - 1, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t row = 1; row < n; ++row)
            fan[i][row - 1] = U[row][i];
    return fan;
}

LaurentPolynomial poly2(std::initializer_list<std::pair<Point, Rational>> terms)
{
    LaurentPolynomial p(2);
    for (const auto& [e, c] : terms)
        p.add_term(e, c);
    return p;
}

LaurentPolynomial poly1(std::initializer_list<std::pair<std::int64_t, Rational>> terms)
{
    LaurentPolynomial p(1);
    for (const auto& [e, c] : terms)
        p.add_term({e}, c);
    return p;
}

std::int64_t total_degree(const Point& e)
{
    return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

// All b in Z^p_{>=0} with |b| <= order, lexicographic.
std::vector<Point> exponents_up_to(std::size_t p, std::int64_t order)
{
    std::vector<Point> out;
    Point cur(p, 0);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i == p) {
            out.push_back(cur);
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
        cur[i] = 0;
    };
    rec(rec, 0, order);
    return out;
}

void compare_series(const std::string& label,
                    const TruncatedSeries& expected,
                    const TruncatedSeries& actual,
                    std::int64_t order,
                    TrmcReport& rep)
{
    for (const auto& b : exponents_up_to(actual.nvars(), order)) {
        ++rep.coefficients_compared;
        auto e = expected.coefficient(b);
        auto a = actual.coefficient(b);
        if (e != a)
            rep.mismatches.push_back({label, b, e, a});
    }
}

void check_k(const ProductFamily& fam, const std::vector<std::int64_t>& k)
{
    if (k.size() != fam.p())
        throw std::invalid_argument("k must have one entry per projective factor");
    for (auto x : k)
        if (x < 0)
            throw std::invalid_argument("k must be nonnegative");
    const auto s = std::accumulate(k.begin(), k.end(), std::int64_t{0});
    const auto d = fam.dim();
    const auto r = static_cast<std::int64_t>(fam.r());
    if (s != d && s != d - r)
        throw std::invalid_argument("|k| must be " + std::to_string(d - r) + " or " + std::to_string(d));
}

}  // namespace

WpsFamily::WpsFamily(std::vector<std::int64_t> weights, std::vector<std::vector<std::size_t>> parts)
    : weights_(std::move(weights)), parts_(std::move(parts))
{
    const std::size_t n = weights_.size();
    if (n < 2)
        throw std::invalid_argument("weighted projective space needs at least two weights");
    std::int64_t g = 0;
    std::int64_t sum = 0;
    for (auto w : weights_) {
        if (w <= 0)
            throw std::invalid_argument("weights must be positive");
        g = std::gcd(g, w);
        sum += w;
    }
    if (g != 1)
        throw std::invalid_argument("weights must have gcd 1");
    for (auto w : weights_)
        if (sum % w != 0)
            throw std::invalid_argument("each weight must divide the sum of the weights");
    if (parts_.empty())
        throw std::invalid_argument("at least one part is required");
    std::vector<int> seen(n, 0);
    for (const auto& part : parts_) {
        if (part.empty())
            throw std::invalid_argument("parts must be nonempty");
        for (auto i : part) {
            if (i >= n)
                throw std::invalid_argument("part index out of range");
            ++seen[i];
        }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
        throw std::invalid_argument("parts must cover every index exactly once");
    for (auto dj : degrees())
        for (auto w : weights_)
            if (dj % w != 0)
                throw std::invalid_argument("nef condition fails: weight " + std::to_string(w) +
                                            " does not divide degree " + std::to_string(dj));
    fan_ = fan_from_weights(weights_);
}

std::vector<std::int64_t> WpsFamily::degrees() const
{
    std::vector<std::int64_t> out;
    for (const auto& part : parts_) {
        std::int64_t s = 0;
        for (auto i : part)
            s += weights_[i];
        out.push_back(s);
    }
    return out;
}

NefPartition WpsFamily::nef_partition() const
{
    std::vector<std::vector<Point>> parts;
    for (const auto& part : parts_) {
        parts.emplace_back();
        for (auto i : part)
            parts.back().push_back(fan_[i]);
    }
    return check_nef_partition(dim(), parts);
}

std::vector<std::size_t> WpsFamily::generator_order() const
{
    std::vector<std::size_t> out;
    for (const auto& part : parts_)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

Rational WpsFamily::nu() const
{
    Rational p = 1;
    for (auto w : weights_)
        p *= static_cast<long>(w);
    return 1 / p;
}

Rational WpsFamily::mu() const
{
    Rational m = 1;
    for (auto dj : degrees())
        m *= rpow(dj, dj);
    for (auto w : weights_)
        m /= rpow(w, w);
    return m;
}

ProductFamily::ProductFamily(std::vector<std::int64_t> dims,
                             std::vector<std::vector<std::int64_t>> degrees,
                             std::vector<std::int64_t> y_scale)
    : dims_(std::move(dims)), degrees_(std::move(degrees)), y_scale_(std::move(y_scale))
{
    const std::size_t p = dims_.size();
    if (p == 0)
        throw std::invalid_argument("product family needs at least one factor");
    if (degrees_.size() != p)
        throw std::invalid_argument("degree matrix must have one row per factor");
    const std::size_t r = degrees_.front().size();
    if (r == 0)
        throw std::invalid_argument("degree matrix needs at least one column");
    for (std::size_t i = 0; i < p; ++i) {
        if (dims_[i] <= 0)
            throw std::invalid_argument("factor dimensions must be positive");
        if (degrees_[i].size() != r)
            throw std::invalid_argument("degree matrix is not rectangular");
        std::int64_t s = 0;
        for (auto x : degrees_[i]) {
            if (x < 0)
                throw std::invalid_argument("degrees must be nonnegative");
            s += x;
        }
        if (s != dims_[i] + 1)
            throw std::invalid_argument("Calabi-Yau condition fails in row " + std::to_string(i + 1) +
                                        ": degrees sum to " + std::to_string(s) + ", expected " +
                                        std::to_string(dims_[i] + 1));
    }
    if (y_scale_.empty())
        y_scale_.assign(p, 1);
    if (y_scale_.size() != p)
        throw std::invalid_argument("y_scale must have one entry per factor");
    for (auto s : y_scale_)
        if (s <= 0)
            throw std::invalid_argument("y_scale entries must be positive");
}

std::int64_t ProductFamily::dim() const
{
    return std::accumulate(dims_.begin(), dims_.end(), std::int64_t{0});
}

ProductFamily p3xp3_family()
{
    return ProductFamily({3, 3}, {{3, 0, 1}, {0, 3, 1}}, {27, 27});
}

ProductFamily p4xp1_family()
{
    return ProductFamily({4, 1}, {{4, 1}, {0, 2}});
}

TruncatedSeries wps_intersection_series(const WpsFamily& fam, const LaurentPolynomial& P, std::int64_t order)
{
    if (P.dim() != fam.n())
        throw std::invalid_argument("polynomial must have one variable per weight");
    for (const auto& e : P.support())
        if (total_degree(e) != static_cast<std::int64_t>(fam.dim()) ||
            std::any_of(e.begin(), e.end(), [](auto x) { return x < 0; }))
            throw std::invalid_argument("polynomial must be homogeneous of degree " + std::to_string(fam.dim()));
    std::vector<Rational> w;
    for (auto x : fam.weights())
        w.emplace_back(static_cast<long>(x));
    const Rational pw = P.evaluate(w);
    Rational phi = 1;
    for (auto dj : fam.degrees())
        phi *= rpow(dj, dj);
    TruncatedSeries s(1, order);
    for (std::int64_t b = 0; b <= order; ++b) {
        Rational point = 1;
        for (auto wi : fam.weights())
            point /= rpow(wi, wi * b + 1);
        s.set({b}, pw * pow(phi, static_cast<long>(b)) * point);
    }
    return s;
}

RationalFunctionSpec wps_closed_form(const WpsFamily& fam, const LaurentPolynomial& P)
{
    if (P.dim() != fam.n())
        throw std::invalid_argument("polynomial must have one variable per weight");
    std::vector<Rational> w;
    for (auto x : fam.weights())
        w.emplace_back(static_cast<long>(x));
    RationalFunctionSpec spec{poly1({{0, fam.nu() * P.evaluate(w)}}), {}};
    spec.denominator_factors.emplace_back(poly1({{0, 1}, {1, -fam.mu()}}), 1);
    return spec;
}

TruncatedSeries product_intersection_series(const ProductFamily& fam,
                                            const std::vector<std::int64_t>& k,
                                            std::int64_t order)
{
    check_k(fam, k);
    const std::size_t p = fam.p();
    const std::size_t r = fam.r();
    const auto ksum = std::accumulate(k.begin(), k.end(), std::int64_t{0});
    const std::int64_t extra = ksum == fam.dim() ? 0 : 1;
    TruncatedSeries s(p, order);
    for (const auto& b : exponents_up_to(p, order)) {
        std::vector<LinearFormPower> forms;
        for (std::size_t j = 0; j < r; ++j) {
            LinearFormPower f;
            std::int64_t e = extra;
            for (std::size_t i = 0; i < p; ++i) {
                f.coeffs.emplace_back(static_cast<long>(fam.degrees()[i][j]));
                e += fam.degrees()[i][j] * b[i];
            }
            f.exponent = e;
            forms.push_back(std::move(f));
        }
        std::vector<std::int64_t> target(p);
        Rational scale = 1;
        for (std::size_t i = 0; i < p; ++i) {
            target[i] = (fam.dims()[i] + 1) * b[i] + fam.dims()[i] - k[i];
            scale *= rpow(fam.y_scale()[i], b[i]);
        }
        s.set(b, Rational(linear_form_power_coefficient(forms, target)) / scale);
    }
    return s;
}

std::optional<Rational> product_factorial_coefficient(const ProductFamily& fam,
                                                      const std::vector<std::int64_t>& k,
                                                      const std::vector<std::int64_t>& b)
{
    if (k.size() != 2 || b.size() != 2 || k[0] + k[1] != 3)
        return std::nullopt;
    const long b1 = static_cast<long>(b[0]), b2 = static_cast<long>(b[1]);
    const long k1 = static_cast<long>(k[0]), k2 = static_cast<long>(k[1]);
    if (fam == p3xp3_family())
        return Rational(9 * factorial(b1 + b2 + 1)) * inverse_factorial(b1 - k1 + 2) * inverse_factorial(b2 - k2 + 2);
    if (fam == p4xp1_family())
        return rpow(2, 8 * b1 + 2 * b2 - k2 + 3) * Rational(factorial(b1 + 2 * b2 + 1)) *
               inverse_factorial(b1 - k1 + 3) * inverse_factorial(2 * b2 - k2 + 1);
    return std::nullopt;
}

std::optional<std::string> product_fixture_name(const ProductFamily& fam)
{
    if (fam == p3xp3_family())
        return "P3xP3";
    if (fam == p4xp1_family())
        return "P4xP1";
    return std::nullopt;
}

RationalFunctionSpec yukawa_fixture(const std::string& name, const std::vector<std::int64_t>& indices)
{
    auto need_pair = [&] {
        if (indices.size() != 2 || indices[0] < 0 || indices[1] < 0 || indices[0] + indices[1] != 3)
            throw std::invalid_argument("fixture " + name + " needs indices k1,k2 >= 0 with k1 + k2 = 3");
        return std::pair{indices[0], indices[1]};
    };
    if (name == "P3xP3") {
        auto [k1, k2] = need_pair();
        auto common = poly2({{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, -1}});
        auto one_minus_y1 = poly2({{{0, 0}, 1}, {{1, 0}, -1}});
        auto one_minus_y2 = poly2({{{0, 0}, 1}, {{0, 1}, -1}});
        if (k1 == 3)
            return {poly2({{{1, 0}, 9}}), {{common, 1}, {one_minus_y1, 2}}};
        if (k1 == 2)
            return {poly2({{{0, 0}, 9}}), {{common, 1}, {one_minus_y1, 1}}};
        if (k2 == 2)
            return {poly2({{{0, 0}, 9}}), {{common, 1}, {one_minus_y2, 1}}};
        return {poly2({{{0, 1}, 9}}), {{common, 1}, {one_minus_y2, 2}}};
    }
    if (name == "P4xP1") {
        auto [k1, k2] = need_pair();
        (void)k2;
        auto d0 = poly2({{{0, 0}, 1}, {{1, 0}, -512}, {{2, 0}, 65536}, {{0, 1}, -4}});
        auto d1 = poly2({{{0, 0}, 1}, {{0, 1}, -4}});
        if (k1 == 3)
            return {poly2({{{0, 0}, 8}}), {{d0, 1}}};
        if (k1 == 2)
            return {poly2({{{0, 0}, 4}, {{1, 0}, -1024}, {{0, 1}, 16}}), {{d0, 1}, {d1, 1}}};
        if (k1 == 1)
            return {poly2({{{0, 1}, 24}, {{1, 1}, -4096}, {{0, 2}, 32}}), {{d0, 1}, {d1, 2}}};
        return {poly2({{{0, 1}, 4}, {{1, 1}, -1024}, {{0, 2}, 96}, {{1, 2}, -12288}, {{0, 3}, 64}}),
                {{d0, 1}, {d1, 3}}};
    }
    if (name == "P3xP3_diag" || name == "wps_diag") {
        if (!indices.empty())
            throw std::invalid_argument("fixture " + name + " takes no indices");
        return {poly1({{0, 54}, {1, -36}}), {{poly1({{0, 1}, {1, -2}}), 1}, {poly1({{0, 1}, {1, -1}}), 2}}};
    }
    if (name == "Pd") {
        if (indices.empty())
            throw std::invalid_argument("fixture Pd needs the degrees d_1..d_r");
        Rational prod = 1;
        Rational mu = 1;
        for (auto dj : indices) {
            if (dj <= 0)
                throw std::invalid_argument("fixture Pd needs positive degrees");
            prod *= static_cast<long>(dj);
            mu *= rpow(dj, dj);
        }
        return {poly1({{0, prod}}), {{poly1({{0, 1}, {1, -mu}}), 1}}};
    }
    throw std::invalid_argument("unknown fixture: " + name + " (known: P3xP3, P4xP1, P3xP3_diag, wps_diag, Pd)");
}

LaurentPolynomial q_to_p(const LaurentPolynomial& Q, const std::vector<std::size_t>& owner, std::size_t r, std::size_t d)
{
    if (Q.dim() != owner.size())
        throw std::invalid_argument("polynomial must have one variable per generator");
    if (d < r)
        throw std::invalid_argument("need d >= r");
    std::optional<Point> deg;
    for (const auto& e : Q.support()) {
        Point g(r, 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0)
                throw std::invalid_argument("negative exponent");
            if (owner[i] >= r)
                throw std::invalid_argument("part index out of range");
            g[owner[i]] += e[i];
        }
        if (deg && *deg != g)
            throw std::invalid_argument("polynomial is not homogeneous in each group");
        if (total_degree(g) != static_cast<std::int64_t>(d - r))
            throw std::invalid_argument("polynomial must have total degree d - r = " + std::to_string(d - r));
        deg = g;
    }
    LaurentPolynomial out = Q;
    for (std::size_t j = 0; j < r; ++j) {
        LaurentPolynomial group(owner.size());
        for (std::size_t i = 0; i < owner.size(); ++i)
            if (owner[i] == j) {
                Point e(owner.size(), 0);
                e[i] = 1;
                group.add_term(e, 1);
            }
        out = out * group;
    }
    return out;
}

Rational wps_residue_value(const WpsFamily& fam, const LaurentPolynomial& P, const std::vector<Rational>& a)
{
    if (a.size() != fam.n() || P.dim() != fam.n())
        throw std::invalid_argument("coefficients and polynomial must have one entry per weight");
    const auto np = fam.nef_partition();
    const auto order = fam.generator_order();
    std::vector<Rational> ag;
    for (auto i : order)
        ag.push_back(a[i]);
    // P with its variables permuted into generator order, split by group degree.
    std::map<MultiDegree, LaurentPolynomial> pieces;
    const auto owner = np.part_of_generator();
    for (const auto& [e, c] : P.terms()) {
        Point eg;
        for (auto i : order)
            eg.push_back(e[i]);
        MultiDegree k{std::vector<std::int64_t>(np.r(), 0)};
        for (std::size_t pos = 0; pos < eg.size(); ++pos)
            k.parts[owner[pos]] += eg[pos];
        auto it = pieces.try_emplace(k, LaurentPolynomial(fam.n())).first;
        it->second.add_term(eg, c);
    }
    const auto rf = residue_functional(nef_laurent_polynomials(np, ag), np);
    if (!rf.regular)
        throw std::runtime_error("coefficient point is not regular: " + rf.diagnostic);
    Rational total = 0;
    for (const auto& [k, piece] : pieces)
        total += residue_of_P(rf, np, piece, ag, k);
    return total;
}

TrmcReport trmc_check(const WpsFamily& fam, const LaurentPolynomial& P, std::int64_t order,
                      std::uint64_t seed, std::size_t points)
{
    TrmcReport rep;
    rep.family_type = "wps";
    rep.reference = "closed form nu P(w) / (1 - mu y) and residue point values";
    rep.series = wps_intersection_series(fam, P, order);
    const auto spec = wps_closed_form(fam, P);
    compare_series("series vs closed form", expand_rational(spec, order), rep.series, order, rep);

    const Rational numer = spec.numerator.coefficient({0});
    const Rational mu = fam.mu();
    std::uint64_t draw = seed;
    for (std::size_t t = 0; t < points; ++t) {
        bool done = false;
        for (int attempt = 0; attempt < 20 && !done; ++attempt, ++draw) {
            auto a = random_coefficients(fam.n(), draw);
            Rational y = 1;
            for (std::size_t i = 0; i < fam.n(); ++i)
                y *= pow(a[i], static_cast<long>(fam.weights()[i]));
            if (1 - mu * y == 0)
                continue;
            Rational res;
            try {
                res = wps_residue_value(fam, P, a);
            } catch (const std::runtime_error&) {
                continue;
            }
            ResiduePointCheck pc{a, y, res, numer / (1 - mu * y), false};
            pc.equal = pc.residue == pc.closed_form;
            rep.point_checks.push_back(std::move(pc));
            done = true;
        }
        if (!done)
            throw std::runtime_error("no usable coefficient point from seed " + std::to_string(seed));
    }
    rep.ok = rep.mismatches.empty() &&
             std::all_of(rep.point_checks.begin(), rep.point_checks.end(), [](const auto& pc) { return pc.equal; });
    return rep;
}

TrmcReport trmc_check(const ProductFamily& fam, const std::vector<std::int64_t>& k, std::int64_t order)
{
    check_k(fam, k);
    auto name = product_fixture_name(fam);
    if (!name)
        throw std::invalid_argument("no closed-form reference for this product family");
    TrmcReport rep;
    rep.family_type = "product";
    rep.reference = "closed form " + *name + " and factorial coefficients";
    rep.series = product_intersection_series(fam, k, order);
    compare_series("series vs closed form", expand_rational(yukawa_fixture(*name, k), order), rep.series, order, rep);
    TruncatedSeries fact(fam.p(), order);
    for (const auto& b : exponents_up_to(fam.p(), order))
        if (auto c = product_factorial_coefficient(fam, k, b))
            fact.set(b, *c);
    compare_series("series vs factorial formula", fact, rep.series, order, rep);
    rep.ok = rep.mismatches.empty();
    return rep;
}

}  // namespace toric
