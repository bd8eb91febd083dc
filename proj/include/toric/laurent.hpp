#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "toric/polytope.hpp"
#include "toric/rational.hpp"

namespace toric {

/// Sparse Laurent polynomial with exact rational coefficients. Terms are kept
/// in lexicographic exponent order and zero coefficients are never stored.
class LaurentPolynomial {
public:
    using Terms = std::map<Point, Rational>;

    explicit LaurentPolynomial(std::size_t dim = 0) : dim_(dim) {}
    LaurentPolynomial(std::size_t dim, const Terms& terms);

    static LaurentPolynomial monomial(const Point& exponent, const Rational& coefficient);
    static LaurentPolynomial constant(std::size_t dim, const Rational& c);

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Point& exponent) const;
    std::vector<Point> support() const;

    void add_term(const Point& exponent, const Rational& coefficient);

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const Rational& c);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    LatticePolytope newton_polytope() const;

    /// Terms whose last `k.size()` exponent coordinates equal k.
    LaurentPolynomial multigraded_component(const std::vector<std::int64_t>& k) const;

    /// Substitutes x_i -> value_i in a polynomial with nonnegative exponents.
    Rational evaluate(const std::vector<Rational>& values) const;

private:
    std::size_t dim_ = 0;
    Terms terms_;
};

/// Multidegree k = (k_1, ..., k_r) for the grading by the Cayley coordinates.
struct MultiDegree {
    std::vector<std::int64_t> parts;

    std::int64_t total() const;
    bool strictly_positive() const;
    /// k - (1, ..., 1).
    MultiDegree shifted_down() const;

    friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
    friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;
};

/// All k in Z^r_{>=0} (or Z^r_{>0}) with |k| = total, lexicographically descending
/// in the first coordinate, e.g. (2,0), (1,1), (0,2).
std::vector<MultiDegree> multidegrees(std::size_t r, std::int64_t total, bool strictly_positive);

/// F = t_{d+1} f_1 + ... + t_{d+r} f_r.
LaurentPolynomial cayley_polynomial(const std::vector<LaurentPolynomial>& fs);

/// t_i d/dt_i F, with a 0-based coordinate index.
LaurentPolynomial log_derivative(const LaurentPolynomial& f, std::size_t i);

/// det( (t_i d/dt_i)(t_j d/dt_j) F ), expanded symbolically.
LaurentPolynomial hessian(const LaurentPolynomial& f);

/// The same Hessian through the Cauchy-Binet expansion: sum over dim-subsets
/// S of the support of det(S)^2 * prod coefficient * t^(sum S).
LaurentPolynomial hessian_subset_sum(const LaurentPolynomial& f);

/// (det S)^2 where the rows of S are the differences s - s_i inside each S_i.
/// Requires sum_i (|S_i| - 1) == dim of the points.
Integer nu(const std::vector<std::vector<Point>>& subsets);

struct MixedHessian {
    LaurentPolynomial value;
    /// Set when some k_i = 0: the component vanishes because H_F is divisible
    /// by t_{d+1} ... t_{d+r}.
    bool structurally_zero = false;
};

/// The k-homogeneous component of the Hessian of the Cayley polynomial, via
/// the nu-weighted subset sum.
MixedHessian mixed_hessian(const std::vector<LaurentPolynomial>& fs, const MultiDegree& k);

}  // namespace toric
