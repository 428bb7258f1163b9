#pragma once

// Structural statements about rotation sets turned into decision procedures
// (chain classification, star shape, interior implies convex) plus a
// certified probe for convexity of a union of polytopes.

#include "rotset/conley.hpp"
#include "rotset/exactgeom.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rotset {

enum class ChainCase {
    contains_zero,  ///< 0 is in the chain set
    on_line,        ///< the set lies on a ray <[a]> minus 0
    inconsistent,   ///< neither; impossible for a genuine maximal chain
};

std::string_view to_string(ChainCase c);

struct ChainClassification {
    ChainCase kind = ChainCase::inconsistent;
    /// Primitive integer direction of the line, for ChainCase::on_line.
    std::optional<HomologyVector> direction;
};

ChainClassification classify_chain(const RationalPolytope& chain_set);

struct StarShapeResult {
    bool star_shaped = true;
    /// Lexicographically least probe point v whose segment [0, v] is not covered.
    std::optional<HomologyVector> witness;
    /// Uncovered parameters t of the witness segment, t v for t in [0,1].
    std::vector<ParamGap> gaps;
};

/// Probes [0, v] for every vertex v of every member and for midpoints of
/// vertex pairs within a member. Throws ModelError on mixed dimensions.
StarShapeResult star_shape_check(std::span<const RationalPolytope> members);

struct ConvexityProbeResult {
    /// True means no counterexample at this density, not a proof of convexity.
    bool no_counterexample = true;
    /// Lexicographically least grid point of the hull outside every member.
    std::optional<HomologyVector> witness;
    std::size_t points_tested = 0;
};

/// Tests all barycentric grid points with denominator <= density (and all
/// vertex-pair midpoints) of the hull of the union for membership in the union.
ConvexityProbeResult convexity_probe(std::span<const RationalPolytope> members, int density);

enum class InteriorVerdict { convex, not_applicable, violation };

std::string_view to_string(InteriorVerdict v);

struct InteriorReport {
    InteriorVerdict verdict = InteriorVerdict::not_applicable;
    /// Index of the block with non-empty interior.
    std::optional<std::size_t> full_block;
    /// Vertices of other blocks outside the full-dimensional one.
    std::vector<HomologyVector> stray;
};

/// If some block is full-dimensional in Q^{2g}, every other block must lie in it.
InteriorReport interior_check(std::span<const Block> blocks, int genus);

}  // namespace rotset
