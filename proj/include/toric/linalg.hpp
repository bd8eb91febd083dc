#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact determinant. Row denominators are cleared first, then fraction-free
/// Bareiss elimination runs over the integers.
Rational determinant(const RatMatrix& m);

/// Bareiss determinant of an integer matrix given as rows.
Integer determinant(std::vector<std::vector<Integer>> rows);

std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column of the reduced echelon form.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Clears denominators and divides by the content so the result is a
/// primitive integer vector with the same direction.
std::vector<Integer> primitive_integer_vector(const RatVector& v);

/// gcd of all k x k minors of a k x n integer matrix (k <= n). This is the
/// index of the lattice spanned by the rows inside its saturation.
Integer gcd_of_maximal_minors(const std::vector<std::vector<Integer>>& rows);

Rational inner(const RatVector& a, const RatVector& b);

/// A sparse row: (column, value) pairs with strictly increasing columns and
/// no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Reported by solve_functional when no unique normalized functional exists.
struct NotUnique {
    std::size_t annihilator_dim = 0;
    std::string reason;
};

using FunctionalResult = std::variant<RatVector, NotUnique>;

/// The unique lambda with lambda . v = 0 for all v in span and
/// lambda . target = normalization, or NotUnique.
FunctionalResult solve_functional(const std::vector<RatVector>& span,
                                  const RatVector& target,
                                  const Rational& normalization);

/// Same contract for sparse span rows living in dimension `dim`.
FunctionalResult solve_functional(const std::vector<SparseRow>& span,
                                  std::size_t dim,
                                  const RatVector& target,
                                  const Rational& normalization);

}  // namespace toric
