#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "toric/laurent.hpp"
#include "toric/rational.hpp"

namespace toric {

/// Power series in nvars variables over the rationals, truncated by total
/// degree: only exponents with |e| <= order are kept.
class TruncatedSeries {
public:
    using Coeffs = std::map<Point, Rational>;

    TruncatedSeries(std::size_t nvars, std::int64_t order);
    /// Truncation of a polynomial with nonnegative exponents.
    static TruncatedSeries from_polynomial(const LaurentPolynomial& p, std::int64_t order);

    std::size_t nvars() const { return nvars_; }
    std::int64_t order() const { return order_; }
    const Coeffs& coeffs() const { return coeffs_; }
    Rational coefficient(const Point& exponent) const;
    void set(const Point& exponent, const Rational& value);
    void add_to(const Point& exponent, const Rational& value);
    bool is_zero() const { return coeffs_.empty(); }

    /// 1 / this, requires a nonzero constant term.
    TruncatedSeries inverse() const;
    TruncatedSeries truncated(std::int64_t order) const;
    /// Substitutes y_i -> y for all i (series in one variable).
    TruncatedSeries diagonal() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c);
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::size_t nvars_;
    std::int64_t order_;
    Coeffs coeffs_;
};

/// numerator / prod factor^multiplicity, all polynomials in the same variables.
struct RationalFunctionSpec {
    LaurentPolynomial numerator;
    std::vector<std::pair<LaurentPolynomial, int>> denominator_factors;

    std::size_t nvars() const { return numerator.dim(); }
};

/// Taylor expansion at 0 up to total degree `order`. The result is multiplied
/// back by the denominator and compared with the numerator; a nonzero
/// residual throws std::logic_error.
TruncatedSeries expand_rational(const RationalFunctionSpec& spec, std::int64_t order);

/// One factor (sum_i coeffs[i] z_i)^exponent.
struct LinearFormPower {
    std::vector<Integer> coeffs;
    std::int64_t exponent = 0;
};

/// Coefficient of z^target in prod_j (sum_i n_ij z_i)^{e_j}. Negative targets give 0.
Integer linear_form_power_coefficient(const std::vector<LinearFormPower>& forms, const std::vector<std::int64_t>& target);

}  // namespace toric
