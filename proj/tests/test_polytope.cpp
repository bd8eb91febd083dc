#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "toric/laurent.hpp"
#include "toric/polytope.hpp"

using namespace toric;

namespace {

std::vector<oracle::Halfspace> facets_as_halfspaces(const LatticePolytope& p)
{
    std::vector<oracle::Halfspace> out;
    for (const auto& f : p.facets())
        out.push_back({f.normal, f.offset});
    std::sort(out.begin(), out.end());
    return out;
}

LatticePolytope simplex(std::size_t d)
{
    std::vector<Point> pts{Point(d, 0)};
    for (std::size_t i = 0; i < d; ++i) {
        Point e(d, 0);
        e[i] = 1;
        pts.push_back(e);
    }
    return convex_hull(pts);
}

std::vector<LatticePolytope> known_reflexive()
{
    return {
        convex_hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}),
        convex_hull({{1, 0}, {0, 1}, {-1, -1}}),
        convex_hull({{-1, -1}, {2, -1}, {-1, 2}}),
        convex_hull({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}),
        convex_hull({{-1, -1}, {0, -1}, {1, 0}, {1, 1}, {0, 1}}),
        convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}),
        convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}),
        convex_hull({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-1, -1, -1, -1}}),
    };
}

}  // namespace

TEST_CASE("hull of the unit triangle")
{
    auto p = simplex(2);
    CHECK(p.full_dimensional());
    CHECK(p.vertices().size() == 3);
    std::vector<Facet> expected{{{-1, -1}, 1}, {{0, 1}, 0}, {{1, 0}, 0}};
    CHECK(p.facets() == expected);
}

TEST_CASE("hull of a quadrilateral matches exhaustive facet search")
{
    std::vector<Point> pts{{0, 0}, {1, 0}, {0, 1}, {-1, -1}};
    auto p = convex_hull(pts);
    CHECK(p.facets().size() == 3);
    CHECK(facets_as_halfspaces(p) == oracle::exhaustive_facets(pts));
}

TEST_CASE("single point hull")
{
    auto p = convex_hull({{0, 0}});
    CHECK(p.affine_dim() == 0);
    CHECK_FALSE(p.full_dimensional());
    CHECK(p.facets().empty());
    CHECK(normalized_volume(p) == 1);
    CHECK_THROWS_AS(convex_hull({}), std::invalid_argument);
}

TEST_CASE("random hulls match exhaustive facet search")
{
    std::mt19937_64 gen(31);
    int checked = 0;
    for (int t = 0; t < 60; ++t) {
        const std::size_t d = 2 + t % 3;
        auto pts = oracle::random_points(gen, d + 3 + t % 6, d, -3, 3);
        auto p = convex_hull(pts);
        if (!p.full_dimensional())
            continue;
        ++checked;
        CHECK(facets_as_halfspaces(p) == oracle::exhaustive_facets(pts));
        for (const auto& x : pts)
            CHECK(p.contains(x));
        for (const auto& v : p.vertices())
            CHECK(std::find(pts.begin(), pts.end(), v) != pts.end());
    }
    CHECK(checked > 40);
}

TEST_CASE("lower-dimensional hulls keep equations and a chart")
{
    auto seg = convex_hull({{0, 0, 1}, {2, 2, 1}});
    CHECK(seg.affine_dim() == 1);
    CHECK(normalized_volume(seg) == 2);
    CHECK(seg.contains({1, 1, 1}));
    CHECK_FALSE(seg.contains({1, 0, 1}));
    CHECK(lattice_points(seg).size() == 3);
    auto tri = convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(tri.affine_dim() == 2);
    CHECK(normalized_volume(tri) == 1);
    CHECK(ambient_volume(tri) == 0);
}

TEST_CASE("Minkowski sums")
{
    auto unit = convex_hull({{0}, {1}});
    CHECK(minkowski_sum(unit, unit) == convex_hull({{0}, {2}}));
    auto seg = convex_hull({{0, 0}, {1, 0}});
    auto tri = convex_hull({{0, 0}, {0, 1}, {-1, -1}});
    auto pent = minkowski_sum(seg, tri);
    std::vector<Point> expected{{-1, -1}, {0, -1}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(pent.vertices() == expected);
    CHECK(minkowski_sum(pent, convex_hull({{0, 0}})) == pent);
    CHECK_THROWS_AS(minkowski_sum(unit, seg), std::invalid_argument);
}

TEST_CASE("lattice point enumeration")
{
    CHECK(lattice_points(convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}})).size() == 4);
    CHECK(lattice_points(dilate(simplex(2), 2)).size() == 6);
    std::vector<Point> pent_pts{{-1, -1}, {0, -1}, {0, 1}, {1, 0}, {1, 1}};
    auto pent = convex_hull(pent_pts);
    auto [lo, hi] = oracle::bbox(pent_pts);
    CHECK(lattice_points(pent) == oracle::box_scan(oracle::exhaustive_facets(pent_pts), lo, hi));
    CHECK(lattice_points(pent).size() == 6);
}

TEST_CASE("lattice points agree with a box scan on random polytopes")
{
    std::mt19937_64 gen(32);
    for (int t = 0; t < 30; ++t) {
        const std::size_t d = 2 + t % 2;
        auto pts = oracle::random_points(gen, d + 4, d, -3, 3);
        auto p = convex_hull(pts);
        if (!p.full_dimensional())
            continue;
        auto hs = oracle::exhaustive_facets(pts);
        auto [lo, hi] = oracle::bbox(pts);
        CHECK(lattice_points(p) == oracle::box_scan(hs, lo, hi));
        CHECK(interior_lattice_points(p) == oracle::box_scan(hs, lo, hi, true));
    }
}

TEST_CASE("interior lattice points")
{
    CHECK(interior_lattice_points(convex_hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})) == std::vector<Point>{{0, 0}});
    CHECK(interior_lattice_points(simplex(2)).empty());
    CHECK(interior_lattice_points(dilate(simplex(2), 3)) == std::vector<Point>{{1, 1}});
    CHECK_THROWS_AS(interior_lattice_points(convex_hull({{0, 0}, {1, 1}})), std::invalid_argument);
}

TEST_CASE("normalized volumes")
{
    for (std::size_t d = 1; d <= 5; ++d)
        CHECK(normalized_volume(simplex(d)) == 1);
    CHECK(normalized_volume(convex_hull({{0, 0}, {0, 1}, {-1, -1}})) == oracle::shoelace2({{0, 0}, {0, 1}, {-1, -1}}));
    CHECK(normalized_volume(convex_hull({{0, 0}, {0, 1}, {-1, -1}})) == 1);
    CHECK(normalized_volume(convex_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})) == 3);
    auto seg = convex_hull({{0, 0}, {1, 0}});
    auto tri = convex_hull({{0, 0}, {0, 1}, {-1, -1}});
    CHECK(normalized_volume(cayley_polytope({seg, tri})) == 3);
}

TEST_CASE("normalized volume of random polygons matches the shoelace formula")
{
    std::mt19937_64 gen(33);
    for (int t = 0; t < 40; ++t) {
        auto p = convex_hull(oracle::random_points(gen, 6, 2, -4, 4));
        if (!p.full_dimensional())
            continue;
        CHECK(normalized_volume(p) == oracle::shoelace2(p.vertices()));
    }
}

TEST_CASE("mixed volume examples")
{
    auto seg = convex_hull({{0, 0}, {1, 0}});
    auto tri = convex_hull({{0, 0}, {0, 1}, {-1, -1}});
    CHECK(mixed_volume({seg, seg}) == 0);
    CHECK(mixed_volume({seg, tri}) == 2);
    CHECK(mixed_volume({tri, tri}) == 1);
    // Polarization with twice-areas from the shoelace formula; the segment has area zero.
    auto sum = minkowski_sum(seg, tri);
    CHECK(Rational(oracle::shoelace2(sum.vertices()) - oracle::shoelace2(tri.vertices())) / 2 == 2);
    CHECK_THROWS_AS(mixed_volume({seg}), std::invalid_argument);
}

TEST_CASE("mixed volume is diagonal-normalized and symmetric")
{
    std::mt19937_64 gen(34);
    for (int t = 0; t < 20; ++t) {
        const std::size_t d = 2 + t % 2;
        std::vector<LatticePolytope> ps;
        for (std::size_t i = 0; i < d; ++i)
            ps.push_back(convex_hull(oracle::random_points(gen, d + 2, d, -2, 2)));
        std::vector<LatticePolytope> diag(d, ps[0]);
        CHECK(mixed_volume(diag) == Rational(ambient_volume(ps[0])));
        auto base = mixed_volume(ps);
        CHECK(base >= 0);
        auto perm = ps;
        std::shuffle(perm.begin(), perm.end(), gen);
        CHECK(mixed_volume(perm) == base);
        std::reverse(perm.begin(), perm.end());
        CHECK(mixed_volume(perm) == base);
    }
}

TEST_CASE("Cayley polytope structure")
{
    auto tri = simplex(2);
    auto c1 = cayley_polytope({tri});
    CHECK(c1.ambient_dim() == 3);
    for (const auto& v : c1.vertices())
        CHECK(v[2] == 1);
    CHECK(normalized_volume(c1) == normalized_volume(tri));
    auto seg = convex_hull({{0, 0}, {1, 0}});
    auto t2 = convex_hull({{0, 0}, {0, 1}, {-1, -1}});
    auto c = cayley_polytope({seg, t2});
    CHECK(c.affine_dim() == 3);
    CHECK(c.vertices().size() == seg.vertices().size() + t2.vertices().size());
    for (const auto& v : c.vertices())
        CHECK(v[2] + v[3] == 1);
    CHECK_THROWS_AS(cayley_polytope({seg, convex_hull({{0}, {1}})}), std::invalid_argument);
}

TEST_CASE("volume of the Cayley polytope is the sum of mixed volumes")
{
    std::mt19937_64 gen(35);
    for (int t = 0; t < 12; ++t) {
        const std::size_t d = 1 + t % 3;
        const std::size_t r = 1 + (t / 3) % 3;
        std::vector<LatticePolytope> parts;
        for (std::size_t i = 0; i < r; ++i)
            parts.push_back(convex_hull(oracle::random_points(gen, d + 1, d, -2, 2)));
        auto cay = cayley_polytope(parts);
        Rational sum = 0;
        for (const auto& k : multidegrees(r, static_cast<std::int64_t>(d), false)) {
            std::vector<LatticePolytope> args;
            for (std::size_t i = 0; i < r; ++i)
                for (std::int64_t c = 0; c < k.parts[i]; ++c)
                    args.push_back(parts[i]);
            sum += mixed_volume(args);
        }
        const bool full = cay.affine_dim() == d + r - 1;
        CHECK(sum == (full ? Rational(normalized_volume(cay)) : Rational(0)));
    }
}

TEST_CASE("reflexivity and duality")
{
    auto cross = convex_hull({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(is_reflexive(cross));
    CHECK(dual_polytope(cross) == convex_hull({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
    auto pent = convex_hull({{-1, -1}, {0, -1}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(is_reflexive(pent));
    for (const auto& f : pent.facets())
        CHECK(f.offset == 1);
    CHECK_FALSE(is_reflexive(simplex(2)));
    CHECK_THROWS_AS(dual_polytope(simplex(2)), std::invalid_argument);
    for (const auto& p : known_reflexive()) {
        CHECK(is_reflexive(p));
        CHECK(is_reflexive(dual_polytope(p)));
        CHECK(dual_polytope(dual_polytope(p)) == p);
    }
}

TEST_CASE("double dual of random reflexive polytopes")
{
    std::mt19937_64 gen(36);
    int found = 0;
    for (int t = 0; t < 400 && found < 15; ++t) {
        const std::size_t d = 2 + t % 2;
        auto p = convex_hull(oracle::random_points(gen, 2 * d + 2, d, -1, 1));
        if (!p.full_dimensional() || !is_reflexive(p))
            continue;
        ++found;
        CHECK(dual_polytope(dual_polytope(p)) == p);
        CHECK(interior_lattice_points(p) == std::vector<Point>{Point(d, 0)});
    }
    CHECK(found >= 10);
}

TEST_CASE("nef-partition checks")
{
    auto np = check_nef_partition(2, {{{1, 0}}, {{0, 1}, {-1, -1}}});
    CHECK(np.r() == 2);
    CHECK(np.vertex_partition[0].size() + np.vertex_partition[1].size() == 5);
    CHECK(np.generators() == std::vector<Point>{{1, 0}, {0, 1}, {-1, -1}});
    CHECK(np.part_of_generator() == std::vector<std::size_t>{0, 1, 1});

    auto single = check_nef_partition(2, {{{1, 0}, {0, 1}, {-1, -1}}});
    CHECK(single.r() == 1);
    CHECK(single.vertex_partition[0].size() == 3);

    try {
        check_nef_partition(2, {{{1, 0}}, {{0, 2}, {-1, -2}}});
        FAIL("expected rejection");
    } catch (const NefPartitionError& e) {
        CHECK(e.kind() == NefPartitionError::Kind::NotReflexive);
    }
    try {
        check_nef_partition(2, {{{1, 0}}, {{1, 0}, {0, 1}, {-1, -1}}});
        FAIL("expected rejection");
    } catch (const NefPartitionError& e) {
        CHECK(e.kind() == NefPartitionError::Kind::Overlap);
    }
    try {
        check_nef_partition(2, {{{0, 0}, {1, 0}}, {{0, 1}, {-1, -1}}});
        FAIL("expected rejection");
    } catch (const NefPartitionError& e) {
        CHECK(e.kind() == NefPartitionError::Kind::ZeroPoint);
    }
    CHECK_NOTHROW(check_nef_partition(2, {{{1, 0}, {0, 1}}, {{-1, -1}}}));
    CHECK_NOTHROW(check_nef_partition(2, {{{-1, 0}, {1, 0}}, {{0, 1}, {0, -1}}}));
    CHECK_THROWS_AS(check_nef_partition(2, {}), NefPartitionError);
    CHECK_THROWS_AS(check_nef_partition(2, {{{1, 0, 0}}}), NefPartitionError);
}

TEST_CASE("dual nef-partitions")
{
    auto self = check_nef_partition(2, {{{1, 0}, {0, 1}, {-1, -1}}});
    auto d1 = dual_nef_partition(self);
    REQUIRE(d1.nablas.size() == 1);
    CHECK(is_reflexive(d1.nablas[0]));
    CHECK(d1.nablas[0] == convex_hull({{-1, -1}, {2, -1}, {-1, 2}}));

    auto np = check_nef_partition(2, {{{1, 0}}, {{0, 1}, {-1, -1}}});
    auto dual = dual_nef_partition(np);
    REQUIRE(dual.nablas.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        std::vector<Point> pts{Point{0, 0}};
        pts.insert(pts.end(), np.vertex_partition[i].begin(), np.vertex_partition[i].end());
        CHECK(lattice_points(dual.nablas[i]) == lattice_points(convex_hull(pts)));
        // Halfspace description: <x, y> >= -delta_ij on Delta_j.
        for (const auto& y : lattice_points(dual.nablas[i]))
            for (std::size_t j = 0; j < 2; ++j)
                for (const auto& x : np.polytopes[j].vertices())
                    CHECK(dot(x, y) >= (i == j ? -1 : 0));
    }
    CHECK(is_reflexive(minkowski_sum(dual.nablas, 2)));
}

TEST_CASE("dual nef-partition twice gives back the polytopes")
{
    std::vector<std::pair<std::size_t, std::vector<std::vector<Point>>>> cases{
        {2, {{{1, 0}}, {{0, 1}, {-1, -1}}}},
        {2, {{{1, 0}, {0, 1}, {-1, -1}}}},
        {2, {{{1, 0}, {-1, 0}}, {{0, 1}, {0, -1}}}},
        {3, {{{1, 0, 0}, {0, 1, 0}}, {{0, 0, 1}, {-1, -1, -1}}}},
        {3, {{{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, 1}, {-1, -1, -1}}}},
    };
    for (const auto& [d, parts] : cases) {
        auto np = check_nef_partition(d, parts);
        auto back = dual_as_nef_partition(dual_as_nef_partition(np));
        REQUIRE(back.r() == np.r());
        for (std::size_t i = 0; i < np.r(); ++i)
            CHECK(back.polytopes[i] == np.polytopes[i]);
    }
}

TEST_CASE("five-dimensional nef-partition with a reflexive dual")
{
    auto np = check_nef_partition(5, {{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}},
                                      {{-1, -1, -1, -1, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, -1}}});
    auto dual = dual_nef_partition(np);
    CHECK(dual.nablas.size() == 2);
    CHECK(is_reflexive(minkowski_sum(dual.nablas, 5)));
    CHECK(is_reflexive(dual.delta_star));
    CHECK(is_reflexive(dual.nabla_star));
}
