#pragma once

// The heteroclinic order on basic pieces, its maximal chains, and the chain
// rotation sets whose union is the rotation set of the whole map.

#include "rotset/exactgeom.hpp"
#include "rotset/markov.hpp"
#include "rotset/violation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rotset {

inline constexpr std::size_t kDefaultChainCap = 1'000'000;

/// Subset of {L, R}: the side(s) of an annular piece on which a connection lands.
struct SideSet {
    bool left = false;
    bool right = false;

    bool empty() const { return !left && !right; }
    SideSet& operator|=(SideSet o) {
        left = left || o.left;
        right = right || o.right;
        return *this;
    }
    friend bool operator==(SideSet, SideSet) = default;
};

/// from < to. source_marks qualify the connection at an annular `from`
/// (left/right of its annulus), target_marks at an annular `to`.
struct HeteroclinicEdge {
    std::string from;
    std::string to;
    SideSet source_marks;
    SideSet target_marks;
};

class HeteroclinicPoset {
public:
    HeteroclinicPoset() = default;
    /// Throws ModelError when an edge names an id outside `piece_ids`.
    HeteroclinicPoset(std::vector<std::string> piece_ids, std::vector<HeteroclinicEdge> edges);

    const std::vector<std::string>& piece_ids() const { return ids_; }
    const std::vector<HeteroclinicEdge>& edges() const { return edges_; }
    std::optional<std::size_t> index_of(std::string_view id) const;

    /// One directed cycle of the relation (ids, first repeated at the end), if any.
    std::optional<std::vector<std::string>> find_cycle() const;

    /// a < b in the transitive closure.
    bool precedes(std::string_view a, std::string_view b) const;

    /// Marks of the closure pair (a, b) at a: union of the source marks of direct
    /// edges a -> c with c = b or c < b.
    SideSet source_marks(std::string_view a, std::string_view b) const;
    /// Marks of the closure pair (a, b) at b: union of the target marks of direct
    /// edges c -> b with c = a or a < c.
    SideSet target_marks(std::string_view a, std::string_view b) const;

private:
    std::size_t idx(std::string_view id) const;

    std::vector<std::string> ids_;
    std::vector<HeteroclinicEdge> edges_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<bool>> reach_;  // strict reachability
};

/// Totally ordered piece ids, increasing in the closure.
struct Chain {
    std::vector<std::string> pieces;
    friend auto operator<=>(const Chain&, const Chain&) = default;
    std::string to_string() const;
};

struct ChainRotation {
    Chain chain;
    RationalPolytope polytope;
};

/// Acyclicity (error, names a cycle), connectivity of the comparability graph
/// (warning), marks only at annular endpoints (error).
Violations validate_poset(const HeteroclinicPoset& poset, const PieceTable& pieces);

/// Maximal chains of the closure restricted to non-trivial pieces, i.e. maximal
/// paths in that restriction's Hasse diagram, sorted lexicographically by ids.
/// Throws ModelError on a cyclic relation, ResourceError past `cap` chains.
std::vector<Chain> maximal_nontrivial_chains(const HeteroclinicPoset& poset, const PieceTable& pieces,
                                             std::size_t cap = kDefaultChainCap);

/// True iff consecutive members are related in the closure.
bool is_chain(const HeteroclinicPoset& poset, const Chain& chain);

/// Hull of the union of the member pieces' rotation polytopes.
RationalPolytope chain_rotation_set(const Chain& chain, const PieceSets& sets);
RationalPolytope chain_rotation_set(const Chain& chain, const PieceTable& pieces,
                                    std::size_t cycle_cap = kDefaultCycleCap);

/// One entry per maximal non-trivial chain; the union of the polytopes is the
/// rotation set.
std::vector<ChainRotation> global_rotation_union(const HeteroclinicPoset& poset, const PieceSets& sets,
                                                 const PieceTable& pieces);

}  // namespace rotset
