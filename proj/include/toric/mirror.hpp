#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toric/laurent.hpp"
#include "toric/polytope.hpp"
#include "toric/series.hpp"

namespace toric {

/// Complete intersection in a weighted projective space P(w_1, ..., w_n),
/// with the divisors grouped into parts A_1, ..., A_r (0-based indices).
class WpsFamily {
public:
    WpsFamily(std::vector<std::int64_t> weights, std::vector<std::vector<std::size_t>> parts);

    const std::vector<std::int64_t>& weights() const { return weights_; }
    const std::vector<std::vector<std::size_t>>& parts() const { return parts_; }
    std::size_t n() const { return weights_.size(); }
    std::size_t dim() const { return weights_.size() - 1; }
    std::size_t r() const { return parts_.size(); }
    /// d_j = sum of the weights in part j.
    std::vector<std::int64_t> degrees() const;
    /// Primitive fan vectors v_1..v_n in Z^d with sum w_i v_i = 0, generating Z^d.
    const std::vector<Point>& fan_vectors() const { return fan_; }
    /// The nef-partition A_j = {v_i : i in part j}.
    NefPartition nef_partition() const;
    /// Variable indices in the generator order of nef_partition().
    std::vector<std::size_t> generator_order() const;

    /// 1 / prod w_i
    Rational nu() const;
    /// prod d_j^{d_j} / prod w_i^{w_i}
    Rational mu() const;

private:
    std::vector<std::int64_t> weights_;
    std::vector<std::vector<std::size_t>> parts_;
    std::vector<Point> fan_;
};

/// Complete intersection in P^{d_1} x ... x P^{d_p} cut out by r divisors whose
/// multidegrees are the columns of the p x r matrix `degrees`. The generating
/// function is written in y_i / y_scale_i.
class ProductFamily {
public:
    ProductFamily(std::vector<std::int64_t> dims,
                  std::vector<std::vector<std::int64_t>> degrees,
                  std::vector<std::int64_t> y_scale = {});

    const std::vector<std::int64_t>& dims() const { return dims_; }
    const std::vector<std::vector<std::int64_t>>& degrees() const { return degrees_; }
    const std::vector<std::int64_t>& y_scale() const { return y_scale_; }
    std::size_t p() const { return dims_.size(); }
    std::size_t r() const { return degrees_.front().size(); }
    std::int64_t dim() const;

    friend bool operator==(const ProductFamily&, const ProductFamily&) = default;

private:
    std::vector<std::int64_t> dims_;
    std::vector<std::vector<std::int64_t>> degrees_;
    std::vector<std::int64_t> y_scale_;
};

using Family = std::variant<WpsFamily, ProductFamily>;

/// P^3 x P^3 cut by degrees (3,0), (0,3), (1,1), with y_i scaled by 27.
ProductFamily p3xp3_family();
/// P^4 x P^1 cut by degrees (4,0), (1,2).
ProductFamily p4xp1_family();

/// sum_b P(w) (prod d_j^{d_j})^b / prod w_i^{w_i b + 1} y^b, computed termwise.
/// P is homogeneous of degree d in n variables.
TruncatedSeries wps_intersection_series(const WpsFamily& fam, const LaurentPolynomial& P, std::int64_t order);

/// nu P(w) / (1 - mu y).
RationalFunctionSpec wps_closed_form(const WpsFamily& fam, const LaurentPolynomial& P);

/// Intersection numbers of H_1^{k_1} ... H_p^{k_p} against the Morrison-Plesser
/// classes, one coefficient per b in Z^p_{>=0} with |b| <= order. With |k| = d - r
/// every divisor E_j contributes one extra power (the Yukawa form); with |k| = d
/// the monomial is used as is.
TruncatedSeries product_intersection_series(const ProductFamily& fam,
                                            const std::vector<std::int64_t>& k,
                                            std::int64_t order);

/// Closed factorial expression of a single coefficient for the two built-in
/// product families, or nullopt for other families.
std::optional<Rational> product_factorial_coefficient(const ProductFamily& fam,
                                                      const std::vector<std::int64_t>& k,
                                                      const std::vector<std::int64_t>& b);

/// Closed-form rational functions. Names: "P3xP3" and "P4xP1" with indices
/// k1,k2 summing to 3; "P3xP3_diag" (alias "wps_diag") for the sum
/// Y30 + 3 Y21 + 3 Y12 + Y03 on y1 = y2; "Pd" with indices d_1..d_r for the
/// complete intersection of those degrees in P^{d_1 + ... + d_r - 1} and Q = 1.
RationalFunctionSpec yukawa_fixture(const std::string& name, const std::vector<std::int64_t>& indices);

/// The fixture name matching a built-in product family, if any.
std::optional<std::string> product_fixture_name(const ProductFamily& fam);

/// P = prod_j (sum_{i in part j} x_i) * Q. `owner[i]` is the part of x_i and Q
/// must be group-homogeneous of total degree d - r.
LaurentPolynomial q_to_p(const LaurentPolynomial& Q, const std::vector<std::size_t>& owner, std::size_t r, std::size_t d);

struct CoefficientMismatch {
    std::string comparison;
    Point exponent;
    Rational expected;
    Rational actual;
};

struct ResiduePointCheck {
    std::vector<Rational> a;
    Rational y;
    Rational residue;
    Rational closed_form;
    bool equal = false;
};

struct TrmcReport {
    std::string family_type;
    std::string reference;  ///< what the series was compared against
    TruncatedSeries series{1, 0};
    std::size_t coefficients_compared = 0;
    std::vector<CoefficientMismatch> mismatches;
    std::vector<ResiduePointCheck> point_checks;
    bool ok = false;
};

/// WPS: termwise series against the closed-form expansion, plus exact residue
/// evaluations at `points` seeded coefficient points compared with the closed form.
TrmcReport trmc_check(const WpsFamily& fam, const LaurentPolynomial& P, std::int64_t order,
                      std::uint64_t seed, std::size_t points = 2);

/// Product: extraction series against the matching closed-form fixture and,
/// when available, the factorial formula.
TrmcReport trmc_check(const ProductFamily& fam, const std::vector<std::int64_t>& k, std::int64_t order);

/// Residue side of a WPS point check at the coefficient point a (indexed like
/// the weights): sum over group-homogeneous parts of P of the mixed residue.
Rational wps_residue_value(const WpsFamily& fam, const LaurentPolynomial& P, const std::vector<Rational>& a);

}  // namespace toric
