#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "toric/linalg.hpp"

using namespace toric;

namespace {

RatMatrix random_int_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols, long range)
{
    std::uniform_int_distribution<long> dist(-range, range);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = dist(gen);
    return m;
}

RatMatrix random_rat_matrix(std::mt19937_64& gen, std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = oracle::random_rational(gen);
    return m;
}

std::vector<std::vector<Rational>> rows_of(const RatMatrix& m)
{
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(m.row(i));
    return out;
}

}  // namespace

TEST_CASE("rationals print in lowest terms")
{
    CHECK(to_string(make_rational(4, 6)) == "2/3");
    CHECK(to_string(make_rational(-4, -6)) == "2/3");
    CHECK(to_string(make_rational(3, -6)) == "-1/2");
    CHECK(to_string(make_rational(0, 5)) == "0");
    CHECK(to_string(make_rational(10, 5)) == "2");
    CHECK(parse_rational("-12/18") == make_rational(-2, 3));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("factorial conventions")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(inverse_factorial(-1) == 0);
    CHECK(inverse_factorial(3) == make_rational(1, 6));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
}

TEST_CASE("checked int64 arithmetic refuses overflow")
{
    CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), std::overflow_error);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
}

TEST_CASE("determinant small cases")
{
    CHECK(determinant(RatMatrix::identity(3)) == 1);
    CHECK(determinant(RatMatrix{{1, 2}, {3, 4}}) == -2);
    CHECK(determinant(RatMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(RatMatrix{{make_rational(1, 2), 0}, {0, make_rational(2, 3)}}) == make_rational(1, 3));
    CHECK(determinant(RatMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant matches cofactor expansion on random matrices")
{
    std::mt19937_64 gen(11);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + t % 5;
        auto m = t % 2 ? random_int_matrix(gen, n, n, 9) : random_rat_matrix(gen, n);
        CHECK(determinant(m) == oracle::cofactor_det(rows_of(m)));
    }
}

TEST_CASE("determinant is alternating and multilinear in rows")
{
    std::mt19937_64 gen(12);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + t % 4;
        auto m = random_rat_matrix(gen, n);
        auto swapped = m;
        for (std::size_t j = 0; j < n; ++j)
            std::swap(swapped(0, j), swapped(n - 1, j));
        CHECK(determinant(swapped) == -determinant(m));
        auto scaled_m = m;
        Rational c = oracle::random_rational(gen);
        for (std::size_t j = 0; j < n; ++j)
            scaled_m(1, j) *= c;
        CHECK(determinant(scaled_m) == c * determinant(m));
        auto repeated = m;
        for (std::size_t j = 0; j < n; ++j)
            repeated(1, j) = repeated(0, j);
        CHECK(determinant(repeated) == 0);
    }
}

TEST_CASE("determinant is multiplicative")
{
    std::mt19937_64 gen(13);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + t % 4;
        auto a = random_rat_matrix(gen, n);
        auto b = random_int_matrix(gen, n, n, 5);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("rank and nullspace")
{
    RatMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m) == 2);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(inner(m.row(i), ns[0]) == 0);
    CHECK(primitive_integer_vector({make_rational(1, 2), make_rational(-3, 4), 0}) == std::vector<Integer>{2, -3, 0});
    CHECK(gcd_of_maximal_minors({{2, 0}, {0, 3}}) == 6);
    CHECK(gcd_of_maximal_minors({{1, 1, 0}, {0, 2, 2}}) == 2);
}

namespace {

void check_functional(const std::vector<RatVector>& span, const RatVector& target, const Rational& norm, const RatVector& lambda)
{
    for (const auto& v : span)
        CHECK(inner(v, lambda) == 0);
    CHECK(inner(target, lambda) == norm);
}

}  // namespace

TEST_CASE("solve_functional coordinate case")
{
    std::vector<RatVector> span{{1, 0, 0}, {0, 1, 0}};
    auto res = solve_functional(span, RatVector{0, 0, 2}, Rational(2));
    REQUIRE(std::holds_alternative<RatVector>(res));
    CHECK(std::get<RatVector>(res) == RatVector{0, 0, 1});
}

TEST_CASE("solve_functional reports rank deficiency")
{
    std::vector<RatVector> span{{1, 1, 0}};
    auto res = solve_functional(span, RatVector{0, 0, 1}, Rational(1));
    REQUIRE(std::holds_alternative<NotUnique>(res));
    CHECK(std::get<NotUnique>(res).annihilator_dim == 2);
}

TEST_CASE("solve_functional target inside the span is not normalizable")
{
    std::vector<RatVector> span{{1, 0}, };
    auto res = solve_functional(span, RatVector{3, 0}, Rational(1));
    REQUIRE(std::holds_alternative<NotUnique>(res));
    CHECK(std::get<NotUnique>(res).annihilator_dim == 1);
}

TEST_CASE("solve_functional rejects dimension mismatch")
{
    std::vector<RatVector> span{{1, 0, 0}};
    CHECK_THROWS_AS(solve_functional(span, RatVector{0, 1}, Rational(1)), std::invalid_argument);
}

TEST_CASE("solve_functional on random codimension-one spans matches a Gaussian nullspace")
{
    std::mt19937_64 gen(21);
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 5;
        std::vector<RatVector> span;
        // 4 random independent-ish vectors plus redundant combinations
        for (int i = 0; i < 4; ++i) {
            RatVector v(n);
            for (auto& x : v)
                x = oracle::random_rational(gen, 5);
            span.push_back(v);
        }
        RatVector combo(n);
        for (std::size_t j = 0; j < n; ++j)
            combo[j] = span[0][j] * 2 - span[3][j];
        span.push_back(combo);
        auto ns = oracle::nullspace(span, n);
        if (ns.size() != 1)
            continue;
        RatVector target(n);
        for (auto& x : target)
            x = oracle::random_rational(gen, 5);
        const Rational norm = oracle::random_rational(gen, 5);
        auto res = solve_functional(span, target, norm);
        const Rational tdot = inner(target, ns[0]);
        if (tdot == 0) {
            CHECK(std::holds_alternative<NotUnique>(res));
            continue;
        }
        REQUIRE(std::holds_alternative<RatVector>(res));
        const auto& lambda = std::get<RatVector>(res);
        check_functional(span, target, norm, lambda);
        for (std::size_t j = 0; j < n; ++j)
            CHECK(lambda[j] == ns[0][j] * norm / tdot);
    }
}

TEST_CASE("sparse and dense solve_functional agree")
{
    std::mt19937_64 gen(22);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 6;
        std::vector<RatVector> dense;
        std::vector<SparseRow> sparse;
        std::uniform_int_distribution<int> coin(0, 2);
        for (int i = 0; i < 7; ++i) {
            RatVector v(n);
            SparseRow row;
            for (std::size_t j = 0; j < n - 1; ++j)
                if (coin(gen) == 0) {
                    v[j] = oracle::random_rational(gen, 4);
                    if (v[j] != 0)
                        row.emplace_back(j, v[j]);
                }
            dense.push_back(v);
            sparse.push_back(row);
        }
        RatVector target(n);
        target[n - 1] = 3;
        target[0] = 1;
        auto a = solve_functional(dense, target, Rational(6));
        auto b = solve_functional(sparse, n, target, Rational(6));
        REQUIRE(a.index() == b.index());
        if (auto* la = std::get_if<RatVector>(&a)) {
            CHECK(*la == std::get<RatVector>(b));
            check_functional(dense, target, Rational(6), *la);
        } else {
            CHECK(std::get<NotUnique>(a).annihilator_dim == std::get<NotUnique>(b).annihilator_dim);
        }
    }
}
