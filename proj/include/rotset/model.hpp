#pragma once

#include "rotset/exactgeom.hpp"
#include "rotset/heteroclinic.hpp"
#include "rotset/markov.hpp"
#include "rotset/violation.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rotset {

enum class SubsurfaceKind { annulus, curved_surface };

std::string_view to_string(SubsurfaceKind k);
std::optional<SubsurfaceKind> parse_subsurface_kind(std::string_view s);

/// One member of an essential decomposition, seen only through H_1(member; Q).
struct Subsurface {
    std::string id;
    SubsurfaceKind kind = SubsurfaceKind::curved_surface;
    SubspaceBasis subspace;
};

struct DecompositionModel {
    std::vector<Subsurface> subsurfaces;
    /// Non-trivial piece id -> subsurface id.
    std::map<std::string, std::string, std::less<>> assignment;

    const Subsurface* find(std::string_view id) const;
    /// Subsurface hosting a piece; throws ModelError if unassigned.
    const Subsurface& of_piece(std::string_view piece_id) const;
};

/// Everything the engine consumes about one map.
struct Model {
    int genus = 2;
    PieceTable pieces;
    HeteroclinicPoset heteroclinic;
    DecompositionModel decomposition;

    std::size_t dim() const { return static_cast<std::size_t>(2 * genus); }
};

struct EngineOptions {
    std::size_t cycle_cap = kDefaultCycleCap;
    std::size_t chain_cap = kDefaultChainCap;
};

/// Aggregated invariant check over pieces, relation and decomposition.
/// Errors make the model unusable; warnings are reported and carried along.
Violations validate_model(const Model& model, const EngineOptions& options = {});

}  // namespace rotset
