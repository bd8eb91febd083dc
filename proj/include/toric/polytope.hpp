#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Facet inequality <x, normal> >= -offset with a primitive normal.
struct Facet {
    Point normal;
    std::int64_t offset = 0;

    friend bool operator==(const Facet&, const Facet&) = default;
    friend auto operator<=>(const Facet&, const Facet&) = default;
};

/// Affine-hull equation <x, normal> == value.
struct AffineEquation {
    Point normal;
    std::int64_t value = 0;
};

/// Convex hull of finitely many lattice points, computed exactly and eagerly.
///
/// The hull lives in its affine hull. Facets are computed in a coordinate
/// chart: a set of affine_dim() ambient coordinates on which the projection
/// of the affine hull is injective. The reported facet normals are the chart
/// normals padded with zeros, so for a full-dimensional polytope they are the
/// usual primitive inner normals, and for a lower-dimensional one they are
/// valid on the affine hull together with equations().
class LatticePolytope {
public:
    LatticePolytope() = default;

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t affine_dim() const { return affine_dim_; }
    bool full_dimensional() const { return affine_dim_ == ambient_dim_; }

    /// Deduplicated generators, lexicographically sorted.
    const std::vector<Point>& points() const { return points_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    /// Sorted lexicographically by (normal, offset).
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<AffineEquation>& equations() const { return equations_; }

    bool contains(const Point& x) const;
    /// Inside the relative interior: every facet inequality strict.
    bool contains_in_relative_interior(const Point& x) const;

    /// Chart data used by volume computations.
    const std::vector<std::size_t>& chart_coordinates() const { return chart_; }
    const std::vector<Facet>& chart_facets() const { return chart_facets_; }
    const std::vector<Point>& chart_vertices() const { return chart_vertices_; }
    /// Index of the projected affine-hull lattice in Z^affine_dim.
    const Integer& chart_index() const { return chart_index_; }

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b)
    {
        return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
    }

    friend LatticePolytope convex_hull(std::vector<Point> points);

private:
    std::size_t ambient_dim_ = 0;
    std::size_t affine_dim_ = 0;
    std::vector<Point> points_;
    std::vector<Point> vertices_;
    std::vector<Facet> facets_;
    std::vector<AffineEquation> equations_;
    std::vector<std::size_t> chart_;
    std::vector<Facet> chart_facets_;
    std::vector<Point> chart_vertices_;
    Integer chart_index_ = 1;
};

/// Facets of a full-dimensional point set in Z^k by the double description
/// method. Exposed for testing against the exhaustive oracle.
std::vector<Facet> full_dimensional_facets(const std::vector<Point>& points);

LatticePolytope convex_hull(std::vector<Point> points);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& parts, std::size_t ambient_dim);
/// k * P for k >= 0 (0 * P = {0}).
LatticePolytope dilate(const LatticePolytope& p, std::int64_t k);

/// Lattice points in lexicographic order (bounding box scan with facet filter).
std::vector<Point> lattice_points(const LatticePolytope& p);
/// Lattice points strictly inside; requires a full-dimensional polytope.
std::vector<Point> interior_lattice_points(const LatticePolytope& p);

/// (affine_dim)! times the Euclidean volume, measured in the lattice of the
/// affine hull. A point has volume 1.
Integer normalized_volume(const LatticePolytope& p);
/// normalized_volume if full-dimensional, otherwise 0.
Integer ambient_volume(const LatticePolytope& p);

/// V(P_1, ..., P_d) normalized so that V(P, ..., P) = normalized_volume(P).
Rational mixed_volume(const std::vector<LatticePolytope>& polys);

/// conv(P_1 x {b_1} u ... u P_r x {b_r}) in dimension d + r.
LatticePolytope cayley_polytope(const std::vector<LatticePolytope>& parts);

bool is_reflexive(const LatticePolytope& p);
/// Polar dual of a reflexive polytope (convex hull of the facet normals).
LatticePolytope dual_polytope(const LatticePolytope& p);

class NefPartitionError : public std::runtime_error {
public:
    enum class Kind {
        EmptyInput,
        DimensionMismatch,
        ZeroPoint,
        Overlap,
        NotReflexive,
        BadMinimum,
        VertexCoverage,
    };

    NefPartitionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// A validated nef-partition Delta = Delta_1 + ... + Delta_r with
/// Delta_i = conv({0} u A_i).
struct NefPartition {
    std::size_t dim = 0;
    /// A_1, ..., A_r in the order given; their concatenation is v_1, ..., v_n.
    std::vector<std::vector<Point>> parts;
    std::vector<LatticePolytope> polytopes;
    LatticePolytope sum;
    /// B_1, ..., B_r: vertices e_j of the dual polytope with min over Delta_i equal to -1.
    std::vector<std::vector<Point>> vertex_partition;

    std::size_t r() const { return parts.size(); }
    std::vector<Point> generators() const;
    /// Index of the part containing v_i.
    std::vector<std::size_t> part_of_generator() const;
};

NefPartition check_nef_partition(std::size_t dim, const std::vector<std::vector<Point>>& parts);

struct DualNefPartition {
    std::vector<LatticePolytope> nablas;
    LatticePolytope delta_star;  ///< conv(nabla_1 u ... u nabla_r)
    LatticePolytope nabla_star;  ///< conv(Delta_1 u ... u Delta_r)
};

/// nabla_i = conv({0} u B_i), cross-checked against the halfspace description
/// {y : <x, y> >= -delta_ij for x in Delta_j}. A mismatch throws std::logic_error.
DualNefPartition dual_nef_partition(const NefPartition& np);

/// The dual nef-partition as a NefPartition in its own right (parts B_i).
NefPartition dual_as_nef_partition(const NefPartition& np);

}  // namespace toric
