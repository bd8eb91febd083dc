#include "toric/polytope.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "toric/linalg.hpp"

namespace toric {

namespace {

// Fixed-width bit set over the input rows of the double description.
class RowSet {
public:
    explicit RowSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    RowSet operator&(const RowSet& o) const
    {
        RowSet out = *this;
        for (std::size_t i = 0; i < words_.size(); ++i)
            out.words_[i] &= o.words_[i];
        return out;
    }

    bool contains_all(const RowSet& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((o.words_[i] & ~words_[i]) != 0)
                return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

using IntRow = std::vector<Integer>;

struct Ray {
    IntRow coords;
    RowSet zeros;
};

void make_primitive(IntRow& v)
{
    Integer g = 0;
    for (const auto& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Integer row_dot(const IntRow& a, const IntRow& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

RatVector to_rat(const Point& p)
{
    RatVector v;
    v.reserve(p.size());
    for (auto x : p)
        v.emplace_back(static_cast<long>(x));
    return v;
}

// Incremental echelon basis: reports whether a vector is independent of the
// basis so far, and records the pivot column of each accepted vector.
class Echelon {
public:
    bool add(RatVector v)
    {
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const Rational& f = v[pivots_[b]];
            if (f == 0)
                continue;
            Rational scale = f / basis_[b][pivots_[b]];
            for (std::size_t j = 0; j < v.size(); ++j)
                if (basis_[b][j] != 0)
                    v[j] -= scale * basis_[b][j];
        }
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        if (it == v.end())
            return false;
        pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
        basis_.push_back(std::move(v));
        return true;
    }

    std::size_t rank() const { return basis_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::vector<RatVector> basis_;
    std::vector<std::size_t> pivots_;
};

RatMatrix inverse(const RatMatrix& m)
{
    const std::size_t n = m.rows();
    std::vector<RatVector> aug(n, RatVector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = m(i, j);
        aug[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug[p][c] == 0)
            ++p;
        if (p == n)
            throw std::logic_error("inverse of a singular matrix");
        std::swap(aug[c], aug[p]);
        Rational inv = 1 / aug[c][c];
        for (auto& x : aug[c])
            x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug[i][c] == 0)
                continue;
            Rational f = aug[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                aug[i][j] -= f * aug[c][j];
        }
    }
    RatMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = aug[i][n + j];
    return out;
}

std::int64_t facet_value(const Facet& f, const Point& x)
{
    return to_int64(dot(x, f.normal)) + f.offset;
}

std::pair<Point, Point> bounding_box(const std::vector<Point>& pts)
{
    Point lo = pts.front(), hi = pts.front();
    for (const auto& v : pts)
        for (std::size_t i = 0; i < v.size(); ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    return {lo, hi};
}

// Visits every integer point of the box [lo, hi] in lexicographic order.
template <class Fn>
void scan_box(const Point& lo, const Point& hi, Fn&& fn)
{
    Point x = lo;
    while (true) {
        fn(x);
        std::size_t i = x.size();
        while (i > 0 && x[i - 1] == hi[i - 1]) {
            x[i - 1] = lo[i - 1];
            --i;
        }
        if (i == 0)
            return;
        ++x[i - 1];
    }
}

std::size_t rank_of_points(const std::vector<Point>& rows)
{
    Echelon e;
    for (const auto& r : rows)
        e.add(to_rat(r));
    return e.rank();
}

}  // namespace

std::vector<Facet> full_dimensional_facets(const std::vector<Point>& points)
{
    if (points.empty())
        throw std::invalid_argument("facets of an empty point set");
    const std::size_t k = points.front().size();
    const std::size_t n = points.size();
    // Homogenized rows (p, 1); valid inequalities (normal, offset) form the
    // cone {x : row . x >= 0}, whose extreme rays are the facets.
    std::vector<IntRow> rows(n, IntRow(k + 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i)
            rows[j][i] = static_cast<long>(points[j][i]);
        rows[j][k] = 1;
    }

    std::vector<std::size_t> initial;
    {
        Echelon e;
        for (std::size_t j = 0; j < n && initial.size() < k + 1; ++j) {
            RatVector v(k + 1);
            for (std::size_t i = 0; i <= k; ++i)
                v[i] = rows[j][i];
            if (e.add(std::move(v)))
                initial.push_back(j);
        }
    }
    if (initial.size() != k + 1)
        throw std::invalid_argument("point set is not full-dimensional");

    RatMatrix a0(k + 1, k + 1);
    for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; j <= k; ++j)
            a0(i, j) = rows[initial[i]][j];
    RatMatrix inv = inverse(a0);

    std::vector<Ray> rays;
    for (std::size_t c = 0; c <= k; ++c) {
        RatVector col(k + 1);
        for (std::size_t i = 0; i <= k; ++i)
            col[i] = inv(i, c);
        Ray ray{primitive_integer_vector(col), RowSet(n)};
        for (std::size_t i = 0; i <= k; ++i)
            if (i != c)
                ray.zeros.set(initial[i]);
        rays.push_back(std::move(ray));
    }

    std::vector<bool> done(n, false);
    for (auto j : initial)
        done[j] = true;

    for (std::size_t j = 0; j < n; ++j) {
        if (done[j])
            continue;
        done[j] = true;
        std::vector<Integer> s(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            s[r] = row_dot(rows[j], rays[r].coords);
            if (s[r] > 0)
                pos.push_back(r);
            else if (s[r] < 0)
                neg.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (s[r] == 0)
                    rays[r].zeros.set(j);
            continue;
        }
        std::vector<Ray> next;
        for (auto p : pos)
            for (auto q : neg) {
                RowSet common = rays[p].zeros & rays[q].zeros;
                if (common.count() + 1 < k)
                    continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
                    if (o != p && o != q && rays[o].zeros.contains_all(common))
                        adjacent = false;
                if (!adjacent)
                    continue;
                IntRow v(k + 1);
                for (std::size_t i = 0; i <= k; ++i)
                    v[i] = s[p] * rays[q].coords[i] - s[q] * rays[p].coords[i];
                make_primitive(v);
                common.set(j);
                next.push_back(Ray{std::move(v), std::move(common)});
            }
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (s[r] < 0)
                continue;
            if (s[r] == 0)
                rays[r].zeros.set(j);
            next.push_back(std::move(rays[r]));
        }
        rays = std::move(next);
    }

    std::vector<Facet> facets;
    facets.reserve(rays.size());
    for (auto& ray : rays) {
        Integer g = 0;
        for (std::size_t i = 0; i < k; ++i)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ray.coords[i].get_mpz_t());
        if (g == 0)
            throw std::logic_error("degenerate facet normal");
        Facet f;
        f.normal.resize(k);
        for (std::size_t i = 0; i < k; ++i)
            f.normal[i] = to_int64(ray.coords[i] / g);
        Integer off = ray.coords[k];
        if (!mpz_divisible_p(off.get_mpz_t(), g.get_mpz_t()))
            throw std::logic_error("facet offset not integral");
        f.offset = to_int64(off / g);
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return facets;
}

LatticePolytope convex_hull(std::vector<Point> points)
{
    if (points.empty())
        throw std::invalid_argument("convex hull of an empty point set");
    const std::size_t n = points.front().size();
    if (n == 0)
        throw std::invalid_argument("ambient dimension must be positive");
    for (const auto& p : points)
        if (p.size() != n)
            throw std::invalid_argument("convex hull: points of mixed dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    LatticePolytope P;
    P.ambient_dim_ = n;
    P.points_ = std::move(points);
    const Point& base = P.points_.front();

    Echelon ech;
    std::vector<Point> edges;
    for (std::size_t i = 1; i < P.points_.size(); ++i) {
        Point e = P.points_[i] - base;
        if (ech.add(to_rat(e)))
            edges.push_back(std::move(e));
    }
    const std::size_t k = ech.rank();
    P.affine_dim_ = k;
    P.chart_ = ech.pivots();
    std::sort(P.chart_.begin(), P.chart_.end());

    if (k < n) {
        RatMatrix em(k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j)
                em(i, j) = edges[i][j];
        if (k == 0)
            em = RatMatrix(1, n);
        for (const auto& v : nullspace(em)) {
            auto prim = primitive_integer_vector(v);
            AffineEquation eq;
            for (const auto& x : prim)
                eq.normal.push_back(to_int64(x));
            eq.value = to_int64(dot(base, eq.normal));
            P.equations_.push_back(std::move(eq));
        }
    }

    if (k == 0) {
        P.vertices_ = P.points_;
        P.chart_vertices_ = {Point{}};
        return P;
    }

    std::vector<Point> chart_points;
    chart_points.reserve(P.points_.size());
    for (const auto& p : P.points_) {
        Point c(k);
        for (std::size_t i = 0; i < k; ++i)
            c[i] = p[P.chart_[i]];
        chart_points.push_back(std::move(c));
    }
    P.chart_facets_ = full_dimensional_facets(chart_points);

    for (std::size_t idx = 0; idx < chart_points.size(); ++idx) {
        std::vector<Point> tight;
        for (const auto& f : P.chart_facets_)
            if (facet_value(f, chart_points[idx]) == 0)
                tight.push_back(f.normal);
        if (tight.size() >= k && rank_of_points(tight) == k) {
            P.vertices_.push_back(P.points_[idx]);
            P.chart_vertices_.push_back(chart_points[idx]);
        }
    }

    for (const auto& f : P.chart_facets_) {
        Facet g;
        g.normal.assign(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            g.normal[P.chart_[i]] = f.normal[i];
        g.offset = f.offset;
        P.facets_.push_back(std::move(g));
    }
    std::sort(P.facets_.begin(), P.facets_.end());

    std::vector<std::vector<Integer>> erows(k, std::vector<Integer>(n));
    std::vector<std::vector<Integer>> prow(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            erows[i][j] = static_cast<long>(edges[i][j]);
        for (std::size_t j = 0; j < k; ++j)
            prow[i][j] = static_cast<long>(edges[i][P.chart_[j]]);
    }
    Integer projected = abs(determinant(prow));
    Integer saturation = gcd_of_maximal_minors(erows);
    P.chart_index_ = projected / saturation;
    return P;
}

bool LatticePolytope::contains(const Point& x) const
{
    if (x.size() != ambient_dim_)
        throw std::invalid_argument("containment test: dimension mismatch");
    for (const auto& eq : equations_)
        if (dot(x, eq.normal) != static_cast<long>(eq.value))
            return false;
    if (affine_dim_ == 0)
        return x == points_.front();
    for (const auto& f : facets_)
        if (facet_value(f, x) < 0)
            return false;
    return true;
}

bool LatticePolytope::contains_in_relative_interior(const Point& x) const
{
    if (!contains(x))
        return false;
    for (const auto& f : facets_)
        if (facet_value(f, x) == 0)
            return false;
    return true;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q)
{
    if (p.ambient_dim() != q.ambient_dim())
        throw std::invalid_argument("Minkowski sum: dimension mismatch");
    std::vector<Point> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices())
            sums.push_back(a + b);
    return convex_hull(std::move(sums));
}

LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& parts, std::size_t ambient_dim)
{
    LatticePolytope acc = convex_hull({Point(ambient_dim, 0)});
    for (const auto& p : parts)
        acc = minkowski_sum(acc, p);
    return acc;
}

LatticePolytope dilate(const LatticePolytope& p, std::int64_t k)
{
    if (k < 0)
        throw std::invalid_argument("negative dilation factor");
    std::vector<Point> pts;
    for (const auto& v : p.vertices())
        pts.push_back(scaled(v, k));
    return convex_hull(std::move(pts));
}

std::vector<Point> lattice_points(const LatticePolytope& p)
{
    auto [lo, hi] = bounding_box(p.vertices());
    std::vector<Point> out;
    scan_box(lo, hi, [&](const Point& x) {
        if (p.contains(x))
            out.push_back(x);
    });
    return out;
}

std::vector<Point> interior_lattice_points(const LatticePolytope& p)
{
    if (!p.full_dimensional())
        throw std::invalid_argument("interior lattice points of a lower-dimensional polytope");
    std::vector<Point> out;
    for (auto& x : lattice_points(p))
        if (p.contains_in_relative_interior(x))
            out.push_back(std::move(x));
    return out;
}

namespace {

// Normalized volume of a full-dimensional lattice polytope in Z^k given by
// its vertices and facets, via the pyramid decomposition from one vertex.
Integer chart_volume(const std::vector<Point>& vertices, const std::vector<Facet>& facets)
{
    const Point& apex = vertices.front();
    Integer total = 0;
    for (const auto& f : facets) {
        std::int64_t height = facet_value(f, apex);
        if (height == 0)
            continue;
        std::vector<Point> on_facet;
        for (const auto& v : vertices)
            if (facet_value(f, v) == 0)
                on_facet.push_back(v);
        total += Integer(static_cast<long>(height)) * normalized_volume(convex_hull(std::move(on_facet)));
    }
    return total;
}

}  // namespace

Integer normalized_volume(const LatticePolytope& p)
{
    if (p.affine_dim() == 0)
        return 1;
    if (p.affine_dim() == 1) {
        // a segment: its lattice length
        const auto& v = p.chart_vertices();
        Integer len = abs(Integer(static_cast<long>(v[1][0] - v[0][0])));
        return len / p.chart_index();
    }
    Integer vol = chart_volume(p.chart_vertices(), p.chart_facets());
    if (!mpz_divisible_p(vol.get_mpz_t(), p.chart_index().get_mpz_t()))
        throw std::logic_error("affine lattice volume is not integral");
    return vol / p.chart_index();
}

Integer ambient_volume(const LatticePolytope& p)
{
    return p.full_dimensional() ? normalized_volume(p) : Integer(0);
}

Rational mixed_volume(const std::vector<LatticePolytope>& polys)
{
    if (polys.empty())
        throw std::invalid_argument("mixed volume of no polytopes");
    const std::size_t d = polys.front().ambient_dim();
    if (polys.size() != d)
        throw std::invalid_argument("mixed volume needs exactly ambient_dim polytopes");
    for (const auto& p : polys)
        if (p.ambient_dim() != d)
            throw std::invalid_argument("mixed volume: dimension mismatch");

    // Group equal arguments; inclusion-exclusion then runs over multiplicity
    // vectors instead of all 2^d subsets.
    std::vector<LatticePolytope> distinct;
    std::vector<long> mult;
    for (const auto& p : polys) {
        auto it = std::find(distinct.begin(), distinct.end(), p);
        if (it == distinct.end()) {
            distinct.push_back(p);
            mult.push_back(1);
        } else {
            ++mult[static_cast<std::size_t>(it - distinct.begin())];
        }
    }
    const std::size_t m = distinct.size();
    std::vector<long> j(m, 0);
    Integer total = 0;
    while (true) {
        long size = std::accumulate(j.begin(), j.end(), 0L);
        if (size > 0) {
            Integer weight = 1;
            std::vector<Point> acc{Point(d, 0)};
            for (std::size_t l = 0; l < m; ++l) {
                weight *= binomial(mult[l], j[l]);
                if (j[l] == 0)
                    continue;
                std::vector<Point> next;
                for (const auto& a : acc)
                    for (const auto& v : distinct[l].vertices())
                        next.push_back(a + scaled(v, j[l]));
                acc = convex_hull(std::move(next)).vertices();
            }
            Integer vol = ambient_volume(convex_hull(std::move(acc)));
            if ((static_cast<long>(d) - size) % 2 == 0)
                total += weight * vol;
            else
                total -= weight * vol;
        }
        std::size_t l = 0;
        while (l < m && j[l] == mult[l])
            j[l++] = 0;
        if (l == m)
            break;
        ++j[l];
    }
    return make_rational(total, factorial(static_cast<long>(d)));
}

LatticePolytope cayley_polytope(const std::vector<LatticePolytope>& parts)
{
    if (parts.empty())
        throw std::invalid_argument("Cayley polytope of no polytopes");
    const std::size_t d = parts.front().ambient_dim();
    const std::size_t r = parts.size();
    std::vector<Point> pts;
    for (std::size_t i = 0; i < r; ++i) {
        if (parts[i].ambient_dim() != d)
            throw std::invalid_argument("Cayley polytope: dimension mismatch");
        for (const auto& v : parts[i].vertices()) {
            Point x = v;
            x.resize(d + r, 0);
            x[d + i] = 1;
            pts.push_back(std::move(x));
        }
    }
    return convex_hull(std::move(pts));
}

bool is_reflexive(const LatticePolytope& p)
{
    if (!p.full_dimensional())
        return false;
    return std::all_of(p.facets().begin(), p.facets().end(), [](const Facet& f) { return f.offset == 1; });
}

LatticePolytope dual_polytope(const LatticePolytope& p)
{
    if (!is_reflexive(p))
        throw std::invalid_argument("dual polytope requested for a non-reflexive polytope");
    std::vector<Point> normals;
    for (const auto& f : p.facets())
        normals.push_back(f.normal);
    return convex_hull(std::move(normals));
}

std::vector<Point> NefPartition::generators() const
{
    std::vector<Point> out;
    for (const auto& a : parts)
        out.insert(out.end(), a.begin(), a.end());
    return out;
}

std::vector<std::size_t> NefPartition::part_of_generator() const
{
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < parts.size(); ++j)
        out.insert(out.end(), parts[j].size(), j);
    return out;
}

NefPartition check_nef_partition(std::size_t dim, const std::vector<std::vector<Point>>& parts)
{
    using Kind = NefPartitionError::Kind;
    if (dim == 0 || parts.empty())
        throw NefPartitionError(Kind::EmptyInput, "nef-partition needs a positive dimension and at least one part");
    std::set<Point> seen;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty())
            throw NefPartitionError(Kind::EmptyInput, "part " + std::to_string(i + 1) + " is empty");
        for (const auto& v : parts[i]) {
            if (v.size() != dim)
                throw NefPartitionError(Kind::DimensionMismatch,
                                        "point " + to_string(v) + " does not have dimension " + std::to_string(dim));
            if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }))
                throw NefPartitionError(Kind::ZeroPoint, "part " + std::to_string(i + 1) + " contains the origin");
            if (!seen.insert(v).second)
                throw NefPartitionError(Kind::Overlap, "point " + to_string(v) + " appears more than once");
        }
    }

    NefPartition np;
    np.dim = dim;
    np.parts = parts;
    for (const auto& a : parts) {
        std::vector<Point> pts = a;
        pts.emplace_back(dim, 0);
        np.polytopes.push_back(convex_hull(std::move(pts)));
    }
    np.sum = minkowski_sum(np.polytopes, dim);
    if (!is_reflexive(np.sum))
        throw NefPartitionError(Kind::NotReflexive, "the Minkowski sum of the parts is not reflexive");

    np.vertex_partition.assign(parts.size(), {});
    for (const auto& f : np.sum.facets()) {
        std::size_t owners = 0;
        for (std::size_t i = 0; i < np.polytopes.size(); ++i) {
            std::int64_t lo = 0;
            for (const auto& v : np.polytopes[i].vertices())
                lo = std::min(lo, to_int64(dot(v, f.normal)));
            if (lo != 0 && lo != -1)
                throw NefPartitionError(Kind::BadMinimum, "min of <x, " + to_string(f.normal) + "> over part " +
                                                              std::to_string(i + 1) + " is " + std::to_string(lo));
            if (lo == -1) {
                np.vertex_partition[i].push_back(f.normal);
                ++owners;
            }
        }
        if (owners != 1)
            throw NefPartitionError(Kind::VertexCoverage, "dual vertex " + to_string(f.normal) + " is claimed by " +
                                                              std::to_string(owners) + " parts");
    }
    for (auto& b : np.vertex_partition)
        std::sort(b.begin(), b.end());
    return np;
}

DualNefPartition dual_nef_partition(const NefPartition& np)
{
    const std::size_t d = np.dim;
    DualNefPartition out;
    for (const auto& b : np.vertex_partition) {
        std::vector<Point> pts = b;
        pts.emplace_back(d, 0);
        out.nablas.push_back(convex_hull(std::move(pts)));
    }

    // Halfspace description, scanned over the bounding box of the dual polytope.
    LatticePolytope dual = dual_polytope(np.sum);
    auto [lo, hi] = bounding_box(dual.vertices());
    for (std::size_t i = 0; i < out.nablas.size(); ++i) {
        scan_box(lo, hi, [&](const Point& y) {
            bool inside = true;
            for (std::size_t j = 0; j < np.polytopes.size() && inside; ++j) {
                long bound = (i == j) ? -1 : 0;
                for (const auto& x : np.polytopes[j].vertices())
                    if (dot(x, y) < bound) {
                        inside = false;
                        break;
                    }
            }
            if (inside != out.nablas[i].contains(y))
                throw std::logic_error("dual nef-partition cross-check failed at " + to_string(y) + " for part " +
                                       std::to_string(i + 1));
        });
    }

    std::vector<Point> pts;
    for (const auto& nb : out.nablas)
        pts.insert(pts.end(), nb.vertices().begin(), nb.vertices().end());
    out.delta_star = convex_hull(std::move(pts));
    pts.clear();
    for (const auto& p : np.polytopes)
        pts.insert(pts.end(), p.vertices().begin(), p.vertices().end());
    out.nabla_star = convex_hull(std::move(pts));
    if (!(out.delta_star == dual))
        throw std::logic_error("conv of the dual parts differs from the dual polytope");
    if (!is_reflexive(out.delta_star) || !is_reflexive(out.nabla_star))
        throw std::logic_error("dual nef-partition produced a non-reflexive polytope");
    return out;
}

NefPartition dual_as_nef_partition(const NefPartition& np)
{
    return check_nef_partition(np.dim, np.vertex_partition);
}

}  // namespace toric
