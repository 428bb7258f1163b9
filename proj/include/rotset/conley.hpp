#pragma once

// Essential-decomposition bookkeeping: supports of chains, their left/right
// markings at repelling-initial and attracting-final annuli, and the convex
// blocks C_{A,X,Y} that make up the rotation set.

#include "rotset/exactgeom.hpp"
#include "rotset/heteroclinic.hpp"
#include "rotset/model.hpp"
#include "rotset/violation.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace rotset {

enum class Mark { left, zero, right };

std::string_view to_string(Mark m);

struct MarkedSupport {
    /// Sorted subsurface ids visited by the chain.
    std::vector<std::string> support;
    Mark x = Mark::zero;
    Mark y = Mark::zero;

    friend auto operator<=>(const MarkedSupport&, const MarkedSupport&) = default;
    /// "{A,S}|X=L|Y=0"
    std::string key() const;
};

struct Block {
    MarkedSupport key;
    /// conv({0} u all member chain polytopes)
    RationalPolytope polytope;
    /// Indices into the chain list the block was built from.
    std::vector<std::size_t> chains;
};

/// Pieces' polytopes, maximal chains with theirs, and the blocks.
struct Computation {
    PieceSets piece_sets;
    std::vector<ChainRotation> chains;
    std::vector<Block> blocks;
};

/// Decomposition invariants that do not need chains: ranks, counts, kinds,
/// assignment of pieces and packages.
Violations validate_decomposition(const Model& model);

/// All admissible marked supports of a non-trivial chain. X ranges over the
/// source marks of the first connection when the first piece sits on a
/// repelling annulus and the chain leaves it; Y symmetrically with target
/// marks at an attracting last annulus. Otherwise the marking is 0.
/// Throws ModelError when a required mark is missing.
std::vector<MarkedSupport> chain_marked_support(const Chain& chain, const Model& model);

/// Groups chains by marked support and cones each group's hull at 0.
/// Ordered by marked-support key.
std::vector<Block> enumerate_blocks(const Model& model, const std::vector<ChainRotation>& chains);
std::vector<Block> enumerate_blocks(const Model& model, const EngineOptions& options = {});

/// Full pipeline on a validated model.
Computation compute(const Model& model, const EngineOptions& options = {});

/// 4 * 2^(5g-5)
Integer block_count_bound(int genus);

/// conv(rho_C, 0) for every chain of the block.
std::vector<RationalPolytope> coned_members(const Block& block, const std::vector<ChainRotation>& chains);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
    std::vector<std::string> failures;
};

struct StructureReport {
    std::vector<CheckResult> checks;
    bool passed() const;
    const CheckResult* find(std::string_view name) const;
};

struct StructureOptions {
    /// Grid density for the per-block convexity probe; 0 disables it.
    int convex_density = 4;
};

/// Checks: block_count_bound, variants_per_support, support_span,
/// chain_containment and (if enabled) block_convexity.
StructureReport verify_structure(const Model& model, const Computation& computation,
                                 const StructureOptions& options = {});

}  // namespace rotset
