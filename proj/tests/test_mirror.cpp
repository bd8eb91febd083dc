#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "toric/linalg.hpp"
#include "toric/mirror.hpp"
#include "toric/residue.hpp"

using namespace toric;

namespace {

LaurentPolynomial mono(std::size_t n, const Point& e, const Rational& c = 1)
{
    return LaurentPolynomial::monomial(e, c);
}

}  // namespace

TEST_CASE("weighted projective families validate their input")
{
    WpsFamily plane({1, 1, 1}, {{0}, {1, 2}});
    CHECK(plane.dim() == 2);
    CHECK(plane.r() == 2);
    CHECK(plane.degrees() == std::vector<std::int64_t>{1, 2});
    CHECK(plane.nu() == 1);
    CHECK(plane.mu() == 4);
    CHECK_THROWS_AS(WpsFamily({2, 2}, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(WpsFamily({1, 2}, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(WpsFamily({1, 1, 1}, {{0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(WpsFamily({1, 1, 1}, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(WpsFamily({1, 1, 2}, {{0, 2}, {1}}), std::invalid_argument);

    WpsFamily w112({1, 1, 2}, {{0, 1}, {2}});
    CHECK(w112.nu() == Rational(1, 2));
    CHECK(w112.mu() == 4);
}

TEST_CASE("fan vectors span the lattice and satisfy the weight relation")
{
    const std::vector<std::vector<std::int64_t>> weights{
        {1, 1, 1}, {1, 1, 2}, {1, 1, 1, 1, 1}, {1, 2, 3}, {1, 1, 2, 2, 2}, {1, 1, 1, 3}};
    for (const auto& w : weights) {
        std::vector<std::vector<std::size_t>> parts{{}};
        for (std::size_t i = 0; i < w.size(); ++i)
            parts[0].push_back(i);
        WpsFamily fam(w, parts);
        const auto& v = fam.fan_vectors();
        REQUIRE(v.size() == w.size());
        const std::size_t d = fam.dim();
        Point relation(d, 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t c = 0; c < d; ++c)
                relation[c] += w[i] * v[i][c];
        CHECK(relation == Point(d, 0));
        std::vector<std::vector<Integer>> rows(d, std::vector<Integer>(v.size()));
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t c = 0; c < d; ++c)
                rows[c][i] = v[i][c];
        CHECK(gcd_of_maximal_minors(rows) == 1);
    }
}

TEST_CASE("weighted projective nef-partition")
{
    WpsFamily plane({1, 1, 1}, {{0}, {1, 2}});
    auto np = plane.nef_partition();
    CHECK(np.r() == 2);
    CHECK(np.parts[0].size() == 1);
    CHECK(np.parts[1].size() == 2);
    CHECK(normalized_volume(cayley_polytope(np.polytopes)) == 3);
    CHECK(plane.generator_order() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("weighted projective series")
{
    WpsFamily plane({1, 1, 1}, {{0}, {1, 2}});
    auto s = wps_intersection_series(plane, mono(3, {1, 1, 0}), 10);
    Integer p = 1;
    for (std::int64_t b = 0; b <= 10; ++b, p *= 4)
        CHECK(s.coefficient({b}) == Rational(p));
    CHECK(s == expand_rational(wps_closed_form(plane, mono(3, {1, 1, 0})), 10));

    WpsFamily quintic({1, 1, 1, 1, 1}, {{0, 1, 2, 3, 4}});
    auto q = wps_intersection_series(quintic, mono(5, {4, 0, 0, 0, 0}), 6);
    Integer p5 = 1;
    for (std::int64_t b = 0; b <= 6; ++b, p5 *= 3125)
        CHECK(q.coefficient({b}) == Rational(p5));
    CHECK(q.coefficient({6}) == Rational(Integer("931322574615478515625")));

    WpsFamily w112({1, 1, 2}, {{0, 1}, {2}});
    auto t = wps_intersection_series(w112, mono(3, {1, 1, 0}), 5);
    CHECK(t.coefficient({0}) == Rational(1, 2));
    CHECK(t == expand_rational(wps_closed_form(w112, mono(3, {1, 1, 0})), 5));
    CHECK_THROWS_AS(wps_intersection_series(plane, mono(3, {1, 0, 0}), 3), std::invalid_argument);
}

TEST_CASE("product families")
{
    auto f = p3xp3_family();
    CHECK(f.dim() == 6);
    CHECK(f.r() == 3);
    CHECK(p4xp1_family().dim() == 5);
    CHECK(product_fixture_name(f) == "P3xP3");
    CHECK_FALSE(product_fixture_name(ProductFamily({2}, {{3}})).has_value());
    CHECK_THROWS_AS(ProductFamily({3}, {{3}}), std::invalid_argument);
    CHECK_THROWS_AS(ProductFamily({2}, {{3}}, {1, 1}), std::invalid_argument);
}

TEST_CASE("product intersection series examples")
{
    auto f = p3xp3_family();
    auto s21 = product_intersection_series(f, {2, 1}, 3);
    CHECK(s21.coefficient({0, 0}) == 9);
    CHECK(s21.coefficient({1, 0}) == 18);
    auto s30 = product_intersection_series(f, {3, 0}, 3);
    CHECK(s30.coefficient({0, 0}) == 0);
    CHECK(s30.coefficient({1, 0}) == 9);
    auto g = p4xp1_family();
    CHECK(product_intersection_series(g, {3, 0}, 2).coefficient({0, 0}) == 8);
    CHECK_THROWS_AS(product_intersection_series(f, {2, 2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(product_intersection_series(f, {3}, 3), std::invalid_argument);

    // Cubic in P^2 (a single factor, |k| = d): the degree is 3 at b = 0.
    ProductFamily cubic({2}, {{3}});
    CHECK(product_intersection_series(cubic, {1}, 0).coefficient({0}) == 3);
}

TEST_CASE("product series agree with closed forms and factorial formulas")
{
    for (const auto& fam : {p3xp3_family(), p4xp1_family()}) {
        const auto name = *product_fixture_name(fam);
        for (std::int64_t k1 = 0; k1 <= 3; ++k1) {
            const std::vector<std::int64_t> k{k1, 3 - k1};
            auto s = product_intersection_series(fam, k, 6);
            CHECK(s == expand_rational(yukawa_fixture(name, k), 6));
            for (const auto& [b, c] : s.coeffs())
                CHECK(product_factorial_coefficient(fam, k, std::vector<std::int64_t>(b.begin(), b.end())) == c);
            auto rep = trmc_check(fam, k, 6);
            CHECK(rep.ok);
            CHECK(rep.mismatches.empty());
            CHECK(rep.coefficients_compared == 2 * 28);
        }
    }
}

TEST_CASE("factorial formula spot values")
{
    // 9 (b1 + b2 + 1)! / ((b1 - k1 + 2)! (b2 - k2 + 2)!) at k = (2,1), b = (1,1): 9 * 3! / (1! 2!).
    CHECK(*product_factorial_coefficient(p3xp3_family(), {2, 1}, {1, 1}) == 27);
    CHECK(*product_factorial_coefficient(p3xp3_family(), {3, 0}, {0, 0}) == 0);
    CHECK(*product_factorial_coefficient(p4xp1_family(), {3, 0}, {0, 0}) == 8);
    CHECK_FALSE(product_factorial_coefficient(ProductFamily({2}, {{3}}), {1}, {0}).has_value());
}

TEST_CASE("diagonal Yukawa identity")
{
    auto f = p3xp3_family();
    auto diag = expand_rational(yukawa_fixture("P3xP3_diag", {}), 8);
    const long weights[] = {1, 3, 3, 1};
    TruncatedSeries from_series(1, 8), from_closed(1, 8);
    for (std::int64_t k1 = 0; k1 <= 3; ++k1) {
        const std::vector<std::int64_t> k{k1, 3 - k1};
        const Rational c(weights[k1]);
        from_series = from_series + product_intersection_series(f, k, 8).diagonal() * c;
        from_closed = from_closed + expand_rational(yukawa_fixture("P3xP3", k), 8).diagonal() * c;
    }
    CHECK(from_series == diag);
    CHECK(from_closed == diag);
    CHECK(diag.coefficient({0}) == 54);
    CHECK(yukawa_fixture("wps_diag", {}).numerator == yukawa_fixture("P3xP3_diag", {}).numerator);
}

TEST_CASE("yukawa fixtures")
{
    auto quintic = expand_rational(yukawa_fixture("Pd", {5}), 3);
    CHECK(quintic.coefficient({0}) == 5);
    CHECK(quintic.coefficient({1}) == 5 * 3125);
    auto cicy = expand_rational(yukawa_fixture("Pd", {1, 2}), 2);
    CHECK(cicy.coefficient({0}) == 2);
    CHECK(cicy.coefficient({1}) == 8);
    CHECK_THROWS_AS(yukawa_fixture("P3xP3", {2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(yukawa_fixture("Pd", {}), std::invalid_argument);
    CHECK_THROWS_AS(yukawa_fixture("P3xP3_diag", {1}), std::invalid_argument);
    CHECK_THROWS_AS(yukawa_fixture("nope", {}), std::invalid_argument);
}

TEST_CASE("Q to P multiplies by the part sums")
{
    // Parts {x1}, {x2, x3}, d = 2, r = 2: Q = 1 gives x1 (x2 + x3).
    auto p = q_to_p(LaurentPolynomial::constant(3, 1), {0, 1, 1}, 2, 2);
    CHECK(p == mono(3, {1, 1, 0}) + mono(3, {1, 0, 1}));
    auto p2 = q_to_p(mono(3, {0, 0, 1}), {0, 1, 1}, 2, 3);
    CHECK(p2 == mono(3, {1, 1, 1}) + mono(3, {1, 0, 2}));
    CHECK_THROWS_AS(q_to_p(mono(3, {1, 0, 0}), {0, 1, 1}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(q_to_p(mono(3, {1, 0, 0}) + mono(3, {0, 1, 0}), {0, 1, 1}, 2, 3), std::invalid_argument);
}

TEST_CASE("weighted projective residue values match the closed form")
{
    WpsFamily plane({1, 1, 1}, {{0}, {1, 2}});
    const std::vector<Rational> a{Rational(1, 3), Rational(1, 5), Rational(1, 7)};
    CHECK(wps_residue_value(plane, mono(3, {1, 1, 0}), a) == Rational(105, 101));
    // A mixture of group degrees is split and summed.
    auto mixed = mono(3, {1, 1, 0}) + mono(3, {0, 1, 1}) * Rational(2);
    CHECK(wps_residue_value(plane, mixed, a) == Rational(3 * 105, 101));

    auto rep = trmc_check(plane, mono(3, {1, 1, 0}), 10, 1, 3);
    CHECK(rep.ok);
    CHECK(rep.point_checks.size() == 3);
    for (const auto& pc : rep.point_checks) {
        CHECK(pc.equal);
        CHECK(pc.y == pc.a[0] * pc.a[1] * pc.a[2]);
    }
    // Parts listed out of order exercise the generator permutation.
    WpsFamily swapped({1, 1, 1}, {{1, 2}, {0}});
    CHECK(trmc_check(swapped, mono(3, {1, 1, 0}), 4, 5, 2).ok);
}

TEST_CASE("trmc reports are deterministic")
{
    WpsFamily plane({1, 1, 1}, {{0}, {1, 2}});
    auto a = trmc_check(plane, mono(3, {1, 0, 1}), 5, 9, 2);
    auto b = trmc_check(plane, mono(3, {1, 0, 1}), 5, 9, 2);
    REQUIRE(a.point_checks.size() == b.point_checks.size());
    for (std::size_t i = 0; i < a.point_checks.size(); ++i) {
        CHECK(a.point_checks[i].a == b.point_checks[i].a);
        CHECK(a.point_checks[i].residue == b.point_checks[i].residue);
    }
    CHECK(a.series == b.series);
}
