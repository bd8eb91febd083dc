#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/laurent.hpp"
#include "toric/linalg.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// Monomial basis of a graded piece of the Cayley semigroup ring. Exponents
/// live in dimension d + r; the last r coordinates carry the multidegree.
struct GradedPieceBasis {
    std::vector<MultiDegree> components;
    std::vector<Point> monomials;  ///< lexicographic
    std::map<Point, std::size_t> index;

    std::size_t size() const { return monomials.size(); }
    std::optional<std::size_t> position(const Point& exponent) const;
};

/// Thrown when a graded piece exceeds the basis-size guard.
class BasisTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Basis-size guard: TORIC_MAX_BASIS if set to a positive integer, else 20000.
std::size_t max_basis_size();

/// S^k: lattice points of k_1 Delta_1 + ... + k_r Delta_r at height k.
GradedPieceBasis graded_basis(const NefPartition& np, const MultiDegree& k);

/// I^k through the shift by t_{d+1} ... t_{d+r}: the points of S^{k - 1}
/// moved to height k. Empty unless every k_i >= 1.
GradedPieceBasis interior_basis(const NefPartition& np, const MultiDegree& k);

/// I^k computed directly as the interior lattice points of sum k_i Delta_i.
/// Slow path used to cross-check interior_basis.
GradedPieceBasis interior_basis_by_inequalities(const NefPartition& np, const MultiDegree& k);

/// I^(l): union of the interior pieces over k > 0 with |k| = l.
GradedPieceBasis interior_total_basis(const NefPartition& np, std::int64_t total);

struct ResidueFunctional {
    std::vector<LaurentPolynomial> fs;
    LaurentPolynomial F;
    LaurentPolynomial hessian;  ///< H_F
    GradedPieceBasis basis;     ///< I^(d+r)
    RatVector lambda;           ///< empty unless regular
    Integer vol;                ///< normalized volume of the Cayley polytope
    bool regular = false;
    std::size_t span_size = 0;
    std::size_t annihilator_dim = 0;
    std::string diagnostic;
};

/// f_j = 1 - sum_{v_i in A_j} a_i t^{v_i}, with a indexed like np.generators().
std::vector<LaurentPolynomial> nef_laurent_polynomials(const NefPartition& np, const std::vector<Rational>& a);

/// Solves for the residue functional on I^(d+r): it kills F_i * h for every
/// monomial h of I^(d+r-1) and sends H_F to Vol of the Cayley polytope.
ResidueFunctional residue_functional(const std::vector<LaurentPolynomial>& fs, const NefPartition& np);

/// lambda(h) for h supported on the basis. Throws if rf is not regular or h
/// has a monomial outside the basis.
Rational evaluate(const ResidueFunctional& rf, const LaurentPolynomial& h);

/// lambda(h) restricted to I^k; h must be k-homogeneous.
Rational mixed_residue(const ResidueFunctional& rf, const LaurentPolynomial& h, const MultiDegree& k);

struct MixedVolumeRow {
    MultiDegree k;
    Rational residue;
    Rational mixed_volume;
    bool equal = false;
};

struct ResidueVolumeReport {
    std::vector<MixedVolumeRow> rows;
    Rational residue_sum;
    Integer vol;
    bool all_equal = false;
    bool sum_matches = false;
};

/// For each k > 0 with |k| = d + r compares Res^k(H^k) with the mixed volume
/// of k_1 - 1 copies of Delta_1, ..., k_r - 1 copies of Delta_r, and checks
/// that the residues add up to Vol of the Cayley polytope.
ResidueVolumeReport residue_volume_report(const std::vector<LaurentPolynomial>& fs, const NefPartition& np);

/// Group degrees of a polynomial in x_1..x_n with respect to the parts of np,
/// or nullopt if it is not multihomogeneous.
std::optional<MultiDegree> group_degree(const LaurentPolynomial& p, const NefPartition& np);

/// (-1)^d lambda(x^e -> prod a_i^{e_i} t^{sum e_i v_i} at height kbar + 1).
/// P lives in n = #generators variables and must be kbar-homogeneous with |kbar| = d.
Rational residue_of_P(const ResidueFunctional& rf,
                      const NefPartition& np,
                      const LaurentPolynomial& P,
                      const std::vector<Rational>& a,
                      const MultiDegree& kbar);

/// Coefficients p/q with 1 <= p, q <= 9 drawn from a seeded mt19937_64.
std::vector<Rational> random_coefficients(std::size_t n, std::uint64_t seed);

struct SeededFunctional {
    std::vector<Rational> a;
    ResidueFunctional rf;
    std::size_t attempts = 0;
};

/// Draws coefficient points from the seed until the functional is regular.
SeededFunctional regular_functional_from_seed(const NefPartition& np, std::uint64_t seed, std::size_t max_attempts = 20);

}  // namespace toric
