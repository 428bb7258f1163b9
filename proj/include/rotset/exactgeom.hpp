#pragma once

#include "rotset/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rotset {

/// Convex hull of finitely many rational points, stored by its extreme points.
///
/// The vertex list is irredundant and sorted lexicographically, so two
/// polytopes are geometrically equal iff they compare equal. Instances are
/// only produced by extreme_points() (or trusted fixture code through
/// from_canonical), never from an arbitrary point list.
class RationalPolytope {
public:
    /// Single point. The zero polytope of a piece with trivial rotation is a valid value.
    static RationalPolytope point(HomologyVector p);

    /// Wraps an already canonical vertex list. Checks ordering only; irredundancy is
    /// the caller's responsibility (use extreme_points when in doubt).
    static RationalPolytope from_canonical(std::vector<HomologyVector> vertices);

    std::size_t dim_ambient() const { return vertices_.front().dim(); }
    const std::vector<HomologyVector>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    friend bool operator==(const RationalPolytope&, const RationalPolytope&) = default;

    std::string to_string() const;

private:
    explicit RationalPolytope(std::vector<HomologyVector> v) : vertices_(std::move(v)) {}
    friend RationalPolytope extreme_points(std::span<const HomologyVector> points);

    std::vector<HomologyVector> vertices_;
};

/// Linearly independent spanning set of a subspace of Q^{2g}.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    /// Throws ModelError if the vectors are dependent or of mixed dimension.
    SubspaceBasis(std::size_t dim_ambient, std::vector<HomologyVector> basis);

    std::size_t dim_ambient() const { return dim_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<HomologyVector>& basis() const { return basis_; }

    /// Smallest subspace containing both, reduced to an independent basis.
    SubspaceBasis sum(const SubspaceBasis& other) const;
    bool contains(const HomologyVector& v) const;

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<HomologyVector> basis_;
};

/// Closed parameter interval [lo, hi] inside [0, 1].
struct ParamInterval {
    Rational lo;
    Rational hi;
};

/// A maximal uncovered piece of [0, 1]. Endpoints shared with a covered
/// interval are open on that side.
struct ParamGap {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = true;
};

/// Rank over Q of a list of vectors (exact Gaussian elimination).
std::size_t rank(std::span<const HomologyVector> vectors);

/// Irredundant, lexicographically sorted vertex set of conv(points).
/// Throws ModelError on an empty set or mixed dimensions.
RationalPolytope extreme_points(std::span<const HomologyVector> points);

/// Exact convex-combination test (phase-one simplex with Bland's rule).
bool contains_point(const RationalPolytope& polytope, const HomologyVector& x);

/// Barycentric weights over polytope.vertices() reproducing x, if any.
std::optional<std::vector<Rational>> membership_witness(const RationalPolytope& polytope,
                                                        const HomologyVector& x);

/// Rank of {v - v0}; 0 for a point.
std::size_t affine_dim(const RationalPolytope& polytope);

/// {t in [0,1] : a + t (b - a) in P}, which is a closed interval or empty.
std::optional<ParamInterval> segment_parameters(const HomologyVector& a, const HomologyVector& b,
                                                const RationalPolytope& polytope);

/// Parts of [0,1] not covered by the members' parameter intervals, in increasing order.
std::vector<ParamGap> segment_gaps(const HomologyVector& a, const HomologyVector& b,
                                   std::span<const RationalPolytope> family);

/// [a, b] is contained in the union of the family.
bool segment_covered(const HomologyVector& a, const HomologyVector& b,
                     std::span<const RationalPolytope> family);

/// Every vertex of P lies in span(S).
bool in_span(const SubspaceBasis& subspace, const RationalPolytope& polytope);

/// Every vertex of inner lies in outer.
bool polytope_contains(const RationalPolytope& outer, const RationalPolytope& inner);

}  // namespace rotset
