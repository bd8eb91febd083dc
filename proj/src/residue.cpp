#include "toric/residue.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace toric {

namespace {

Point lift(const Point& m, const MultiDegree& k)
{
    Point out = m;
    out.insert(out.end(), k.parts.begin(), k.parts.end());
    return out;
}

void finish(GradedPieceBasis& b)
{
    std::sort(b.monomials.begin(), b.monomials.end());
    b.monomials.erase(std::unique(b.monomials.begin(), b.monomials.end()), b.monomials.end());
    b.index.clear();
    for (std::size_t i = 0; i < b.monomials.size(); ++i)
        b.index.emplace(b.monomials[i], i);
}

void check_degree(const NefPartition& np, const MultiDegree& k)
{
    if (k.parts.size() != np.r())
        throw std::invalid_argument("multidegree length must equal the number of parts");
    for (auto x : k.parts)
        if (x < 0)
            throw std::invalid_argument("negative multidegree");
}

LatticePolytope weighted_sum(const NefPartition& np, const MultiDegree& k)
{
    std::vector<LatticePolytope> parts;
    for (std::size_t i = 0; i < np.r(); ++i)
        if (k.parts[i] > 0)
            parts.push_back(dilate(np.polytopes[i], k.parts[i]));
    return minkowski_sum(parts, np.dim);
}

void guard(std::size_t n, const char* what)
{
    if (n > max_basis_size())
        throw BasisTooLarge(std::string(what) + " has " + std::to_string(n) + " monomials, above the limit of " +
                            std::to_string(max_basis_size()) + " (raise TORIC_MAX_BASIS)");
}

}  // namespace

std::optional<std::size_t> GradedPieceBasis::position(const Point& exponent) const
{
    auto it = index.find(exponent);
    if (it == index.end())
        return std::nullopt;
    return it->second;
}

std::size_t max_basis_size()
{
    if (const char* env = std::getenv("TORIC_MAX_BASIS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 20000;
}

GradedPieceBasis graded_basis(const NefPartition& np, const MultiDegree& k)
{
    check_degree(np, k);
    GradedPieceBasis b;
    b.components.push_back(k);
    for (const auto& m : lattice_points(weighted_sum(np, k)))
        b.monomials.push_back(lift(m, k));
    finish(b);
    return b;
}

GradedPieceBasis interior_basis(const NefPartition& np, const MultiDegree& k)
{
    check_degree(np, k);
    GradedPieceBasis b;
    b.components.push_back(k);
    if (k.strictly_positive())
        for (const auto& m : lattice_points(weighted_sum(np, k.shifted_down())))
            b.monomials.push_back(lift(m, k));
    finish(b);
    return b;
}

GradedPieceBasis interior_basis_by_inequalities(const NefPartition& np, const MultiDegree& k)
{
    check_degree(np, k);
    GradedPieceBasis b;
    b.components.push_back(k);
    if (k.strictly_positive())
        for (const auto& m : interior_lattice_points(weighted_sum(np, k)))
            b.monomials.push_back(lift(m, k));
    finish(b);
    return b;
}

GradedPieceBasis interior_total_basis(const NefPartition& np, std::int64_t total)
{
    GradedPieceBasis b;
    for (const auto& k : multidegrees(np.r(), total, true)) {
        auto piece = interior_basis(np, k);
        b.components.push_back(k);
        b.monomials.insert(b.monomials.end(), piece.monomials.begin(), piece.monomials.end());
        guard(b.monomials.size(), "graded piece");
    }
    finish(b);
    return b;
}

std::vector<LaurentPolynomial> nef_laurent_polynomials(const NefPartition& np, const std::vector<Rational>& a)
{
    const auto gens = np.generators();
    if (a.size() != gens.size())
        throw std::invalid_argument("expected " + std::to_string(gens.size()) + " coefficients, got " +
                                    std::to_string(a.size()));
    const auto owner = np.part_of_generator();
    std::vector<LaurentPolynomial> fs;
    for (std::size_t j = 0; j < np.r(); ++j)
        fs.push_back(LaurentPolynomial::constant(np.dim, 1));
    for (std::size_t i = 0; i < gens.size(); ++i)
        fs[owner[i]].add_term(gens[i], -a[i]);
    return fs;
}

ResidueFunctional residue_functional(const std::vector<LaurentPolynomial>& fs, const NefPartition& np)
{
    const std::size_t d = np.dim;
    const std::size_t r = np.r();
    if (fs.size() != r)
        throw std::invalid_argument("need one polynomial per part of the nef-partition");
    for (std::size_t j = 0; j < r; ++j) {
        if (fs[j].dim() != d)
            throw std::invalid_argument("polynomial dimension does not match the nef-partition");
        for (const auto& e : fs[j].support())
            if (!np.polytopes[j].contains(e))
                throw std::invalid_argument("support of f_" + std::to_string(j + 1) + " leaves Delta_" +
                                            std::to_string(j + 1) + ": " + to_string(e));
    }

    ResidueFunctional rf;
    rf.fs = fs;
    rf.F = cayley_polynomial(fs);
    rf.hessian = hessian(rf.F);
    rf.vol = normalized_volume(cayley_polytope(np.polytopes));
    const auto top = static_cast<std::int64_t>(d + r);
    rf.basis = interior_total_basis(np, top);
    const auto lower = interior_total_basis(np, top - 1);

    std::vector<LaurentPolynomial> derivs;
    for (std::size_t i = 0; i < d + r; ++i)
        derivs.push_back(log_derivative(rf.F, i));

    std::vector<SparseRow> span;
    for (const auto& h : lower.monomials) {
        for (const auto& Fi : derivs) {
            SparseRow row;
            for (const auto& [e, c] : Fi.terms()) {
                auto pos = rf.basis.position(e + h);
                if (!pos)
                    throw std::logic_error("product F_i * h left the interior piece at " + to_string(e + h));
                row.emplace_back(*pos, c);
            }
            if (row.empty())
                continue;
            std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            span.push_back(std::move(row));
        }
    }
    rf.span_size = span.size();

    RatVector target(rf.basis.size());
    for (const auto& [e, c] : rf.hessian.terms()) {
        auto pos = rf.basis.position(e);
        if (!pos)
            throw std::logic_error("Hessian monomial outside the interior piece: " + to_string(e));
        target[*pos] = c;
    }

    auto result = solve_functional(span, rf.basis.size(), target, Rational(rf.vol));
    if (auto* lam = std::get_if<RatVector>(&result)) {
        rf.lambda = std::move(*lam);
        rf.regular = true;
        rf.annihilator_dim = 1;
    } else {
        const auto& nu = std::get<NotUnique>(result);
        rf.regular = false;
        rf.annihilator_dim = nu.annihilator_dim;
        rf.diagnostic = "not regular: " + nu.reason;
    }
    return rf;
}

Rational evaluate(const ResidueFunctional& rf, const LaurentPolynomial& h)
{
    if (!rf.regular)
        throw std::logic_error("residue functional is not available: " + rf.diagnostic);
    Rational s = 0;
    for (const auto& [e, c] : h.terms()) {
        auto pos = rf.basis.position(e);
        if (!pos)
            throw std::invalid_argument("monomial outside the top interior piece: " + to_string(e));
        s += rf.lambda[*pos] * c;
    }
    return s;
}

Rational mixed_residue(const ResidueFunctional& rf, const LaurentPolynomial& h, const MultiDegree& k)
{
    const std::size_t r = rf.fs.size();
    if (k.parts.size() != r)
        throw std::invalid_argument("multidegree length must equal the number of parts");
    for (const auto& e : h.support())
        if (!std::equal(k.parts.begin(), k.parts.end(), e.end() - static_cast<long>(r)))
            throw std::invalid_argument("monomial " + to_string(e) + " is not of the requested multidegree");
    return evaluate(rf, h);
}

ResidueVolumeReport residue_volume_report(const std::vector<LaurentPolynomial>& fs, const NefPartition& np)
{
    auto rf = residue_functional(fs, np);
    if (!rf.regular)
        throw std::runtime_error("coefficients are not regular: " + rf.diagnostic);
    const std::size_t d = np.dim;
    ResidueVolumeReport rep;
    rep.vol = rf.vol;
    rep.all_equal = true;
    for (const auto& k : multidegrees(np.r(), static_cast<std::int64_t>(d + np.r()), true)) {
        MixedVolumeRow row;
        row.k = k;
        row.residue = mixed_residue(rf, mixed_hessian(fs, k).value, k);
        std::vector<LatticePolytope> args;
        for (std::size_t i = 0; i < np.r(); ++i)
            for (std::int64_t c = 1; c < k.parts[i]; ++c)
                args.push_back(np.polytopes[i]);
        row.mixed_volume = mixed_volume(args);
        row.equal = row.residue == row.mixed_volume;
        rep.all_equal = rep.all_equal && row.equal;
        rep.residue_sum += row.residue;
        rep.rows.push_back(std::move(row));
    }
    rep.sum_matches = rep.residue_sum == Rational(rep.vol);
    return rep;
}

std::optional<MultiDegree> group_degree(const LaurentPolynomial& p, const NefPartition& np)
{
    const auto owner = np.part_of_generator();
    if (p.dim() != owner.size())
        throw std::invalid_argument("polynomial must have one variable per generator (" +
                                    std::to_string(owner.size()) + ")");
    std::optional<MultiDegree> deg;
    for (const auto& e : p.support()) {
        MultiDegree k{std::vector<std::int64_t>(np.r(), 0)};
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0)
                return std::nullopt;
            k.parts[owner[i]] += e[i];
        }
        if (deg && *deg != k)
            return std::nullopt;
        deg = k;
    }
    return deg;
}

Rational residue_of_P(const ResidueFunctional& rf,
                      const NefPartition& np,
                      const LaurentPolynomial& P,
                      const std::vector<Rational>& a,
                      const MultiDegree& kbar)
{
    const std::size_t d = np.dim;
    if (kbar.parts.size() != np.r() || kbar.total() != static_cast<std::int64_t>(d))
        throw std::invalid_argument("kbar must have one entry per part and total degree d");
    if (nef_laurent_polynomials(np, a) != rf.fs)
        throw std::invalid_argument("coefficients do not match the residue functional");
    if (P.is_zero())
        return 0;
    auto deg = group_degree(P, np);
    if (!deg || *deg != kbar)
        throw std::invalid_argument("polynomial is not homogeneous of the requested group degree");

    const auto gens = np.generators();
    MultiDegree height = kbar;
    for (auto& x : height.parts)
        ++x;
    LaurentPolynomial h(d + np.r());
    for (const auto& [e, c] : P.terms()) {
        Point m(d, 0);
        Rational coef = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            m = m + scaled(gens[i], e[i]);
            coef *= pow(a[i], e[i]);
        }
        h.add_term(lift(m, height), coef);
    }
    Rational v = mixed_residue(rf, h, height);
    return d % 2 == 0 ? v : -v;
}

std::vector<Rational> random_coefficients(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i) {
        auto p = static_cast<long>(gen() % 9) + 1;
        auto q = static_cast<long>(gen() % 9) + 1;
        out.push_back(make_rational(p, q));
    }
    return out;
}

SeededFunctional regular_functional_from_seed(const NefPartition& np, std::uint64_t seed, std::size_t max_attempts)
{
    const std::size_t n = np.generators().size();
    std::string last;
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        // Each retry gets its own derived seed so attempt t is reproducible on its own.
        auto a = random_coefficients(n, seed + 0x9e3779b97f4a7c15ULL * attempt);
        auto rf = residue_functional(nef_laurent_polynomials(np, a), np);
        if (rf.regular)
            return {std::move(a), std::move(rf), attempt + 1};
        last = rf.diagnostic;
    }
    throw std::runtime_error("no regular coefficient point after " + std::to_string(max_attempts) +
                             " draws from seed " + std::to_string(seed) + "; last: " + last);
}

}  // namespace toric
