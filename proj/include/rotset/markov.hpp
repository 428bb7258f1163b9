#pragma once

// Basic pieces as displacement-labeled digraphs (the incidence matrix of a
// subshift of finite type with an integer deck translation per symbol) and
// their rotation polytopes.

#include "rotset/exactgeom.hpp"
#include "rotset/violation.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rotset {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

enum class PieceClass { trivial, annular, curved };
enum class FillBehavior { attracting, repelling, neither };

std::string_view to_string(PieceClass c);
std::string_view to_string(FillBehavior f);
std::optional<PieceClass> parse_piece_class(std::string_view s);
std::optional<FillBehavior> parse_fill_behavior(std::string_view s);

struct MarkovNode {
    std::string id;
    /// Deck translation of the partition element; integer coordinates.
    HomologyVector displacement;
};

class MarkovGraph {
public:
    MarkovGraph() = default;
    /// Throws ModelError on duplicate node ids or edges naming unknown nodes.
    MarkovGraph(std::vector<MarkovNode> nodes, std::span<const std::pair<std::string, std::string>> edges);

    std::size_t size() const { return nodes_.size(); }
    const std::vector<MarkovNode>& nodes() const { return nodes_; }
    /// Sorted, duplicate-free (from, to) index pairs.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::size_t>& successors(std::size_t node) const { return succ_[node]; }
    bool has_edge(std::size_t from, std::size_t to) const;
    std::optional<std::size_t> index_of(std::string_view id) const;

    /// Strongly connected components, each sorted, ordered by smallest member.
    std::vector<std::vector<std::size_t>> components() const;

private:
    std::vector<MarkovNode> nodes_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> succ_;
};

/// Complete digraph with self-loops on nodes "n0", "n1", ... carrying the given
/// displacements: the horseshoe-like piece whose rotation set is the hull of them.
MarkovGraph complete_graph(const std::vector<HomologyVector>& displacements);

struct BasicPieceModel {
    std::string id;
    PieceClass classification = PieceClass::curved;
    /// Annular package token; present iff annular.
    std::optional<std::string> package;
    /// Behaviour of the filled Conley annulus; present iff annular.
    std::optional<FillBehavior> fill_behavior;
    MarkovGraph graph;
};

/// Pieces in document order with lookup by id.
class PieceTable {
public:
    PieceTable() = default;
    /// Throws ModelError on duplicate ids.
    explicit PieceTable(std::vector<BasicPieceModel> pieces);

    const std::vector<BasicPieceModel>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }
    const BasicPieceModel* find(std::string_view id) const;
    /// Throws ModelError for an unknown id.
    const BasicPieceModel& at(std::string_view id) const;
    std::optional<std::size_t> index_of(std::string_view id) const;

private:
    std::vector<BasicPieceModel> pieces_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

/// Rotation polytope per piece id.
using PieceSets = std::map<std::string, RationalPolytope, std::less<>>;

/// Cyclic itinerary of node ids; the last node must lead back to the first.
struct PeriodicWord {
    std::vector<std::string> nodes;
};

/// Invariant check; an empty result means the piece is valid. Trivial pieces
/// get their rotation set computed, so the cycle cap applies.
Violations validate_piece(const BasicPieceModel& piece, std::size_t cycle_cap = kDefaultCycleCap);

/// Birkhoff average of the displacement along the periodic orbit coded by `word`.
/// Throws ModelError naming the first inadmissible transition.
HomologyVector word_rotation_vector(const BasicPieceModel& piece, const PeriodicWord& word);

/// Same, for a word given by node indices.
HomologyVector cycle_mean(const MarkovGraph& graph, std::span<const std::size_t> cycle);

/// Johnson's enumeration of elementary circuits. Each cycle is reported once,
/// starting at its smallest node index. Throws ResourceError when more than
/// `cap` cycles exist.
void for_each_simple_cycle(const MarkovGraph& graph, std::size_t cap,
                           const std::function<void(std::span<const std::size_t>)>& visit);

std::vector<std::vector<std::size_t>> simple_cycles(const MarkovGraph& graph,
                                                    std::size_t cap = kDefaultCycleCap);

/// Convex hull of the simple-cycle means: the rotation set of the subshift.
RationalPolytope piece_rotation_set(const BasicPieceModel& piece, std::size_t cycle_cap = kDefaultCycleCap);

/// piece_rotation_set for every piece of the table.
PieceSets compute_piece_sets(const PieceTable& pieces, std::size_t cycle_cap = kDefaultCycleCap);

}  // namespace rotset
