#include "rotset/model.hpp"

#include "rotset/conley.hpp"
#include "rotset/errors.hpp"

#include <algorithm>
#include <set>

namespace rotset {

std::string_view to_string(SubsurfaceKind k) {
    return k == SubsurfaceKind::annulus ? "annulus" : "curved_surface";
}

std::optional<SubsurfaceKind> parse_subsurface_kind(std::string_view s) {
    if (s == "annulus") return SubsurfaceKind::annulus;
    if (s == "curved_surface") return SubsurfaceKind::curved_surface;
    return std::nullopt;
}

const Subsurface* DecompositionModel::find(std::string_view id) const {
    for (const auto& s : subsurfaces) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

const Subsurface& DecompositionModel::of_piece(std::string_view piece_id) const {
    auto it = assignment.find(piece_id);
    if (it == assignment.end()) throw ModelError("piece '" + std::string(piece_id) + "' is not assigned to a subsurface");
    if (const auto* s = find(it->second)) return *s;
    throw ModelError("piece '" + std::string(piece_id) + "' assigned to unknown subsurface '" + it->second + "'");
}

namespace {

// Annuli that appear together in some chain support must have independent homology.
void check_direct_sums(const Model& model, const std::vector<ChainRotation>& chains, Violations& out) {
    std::set<std::vector<std::string>> reported;
    for (const auto& cr : chains) {
        std::set<std::string> annuli;
        for (const auto& id : cr.chain.pieces) {
            const auto& sub = model.decomposition.of_piece(id);
            if (sub.kind == SubsurfaceKind::annulus) annuli.insert(sub.id);
        }
        std::vector<HomologyVector> concat;
        std::size_t rank_sum = 0;
        for (const auto& a : annuli) {
            const auto& basis = model.decomposition.find(a)->subspace.basis();
            concat.insert(concat.end(), basis.begin(), basis.end());
            rank_sum += basis.size();
        }
        if (rank(concat) != rank_sum) {
            std::vector<std::string> key(annuli.begin(), annuli.end());
            if (!reported.insert(key).second) continue;
            std::string names;
            for (const auto& k : key) names += (names.empty() ? "" : ", ") + k;
            out.push_back({"annulus subspaces not in direct sum: {" + names + "} along chain " + cr.chain.to_string(),
                           "/decomposition/subsurfaces"});
        }
    }
}

// A trivial piece's rotation point must be covered by a chain it could be
// inserted into (or by any chain if it is comparable to none).
void check_trivial_points(const Model& model, const PieceSets& sets, const std::vector<ChainRotation>& chains,
                          Violations& out) {
    const auto& poset = model.heteroclinic;
    for (std::size_t i = 0; i < model.pieces.size(); ++i) {
        const auto& piece = model.pieces.pieces()[i];
        if (piece.classification != PieceClass::trivial) continue;
        const auto& point = sets.at(piece.id).vertices().front();
        std::vector<const ChainRotation*> hosts;
        for (const auto& cr : chains) {
            const bool comparable = std::all_of(cr.chain.pieces.begin(), cr.chain.pieces.end(), [&](const auto& p) {
                return poset.precedes(p, piece.id) || poset.precedes(piece.id, p);
            });
            if (comparable) hosts.push_back(&cr);
        }
        if (hosts.empty()) {
            for (const auto& cr : chains) hosts.push_back(&cr);
        }
        const bool covered = std::any_of(hosts.begin(), hosts.end(),
                                         [&](const ChainRotation* cr) { return contains_point(cr->polytope, point); });
        if (!covered && !hosts.empty()) {
            out.push_back({"trivial piece outside every covering chain: '" + piece.id + "' rotates by " +
                               point.to_string(),
                           "/pieces/" + std::to_string(i)});
        }
    }
}

}  // namespace

Violations validate_model(const Model& model, const EngineOptions& options) {
    Violations out;
    if (model.genus < 2) out.push_back({"genus must be at least 2", "/genus"});

    for (std::size_t i = 0; i < model.pieces.size(); ++i) {
        const auto& piece = model.pieces.pieces()[i];
        const std::string path = "/pieces/" + std::to_string(i);
        bool dims_ok = true;
        for (std::size_t n = 0; n < piece.graph.size(); ++n) {
            const auto& d = piece.graph.nodes()[n].displacement;
            if (d.dim() != model.dim()) {
                dims_ok = false;
                out.push_back({"displacement dimension mismatch: expected " + std::to_string(model.dim()) + ", got " +
                                   std::to_string(d.dim()) + " at node '" + piece.graph.nodes()[n].id + "'",
                               path + "/graph/nodes/" + std::to_string(n) + "/displacement"});
            }
        }
        if (!dims_ok) continue;
        for (auto& v : validate_piece(piece, options.cycle_cap)) {
            v.path = path;
            out.push_back(std::move(v));
        }
    }
    for (const auto& id : model.heteroclinic.piece_ids()) {
        if (!model.pieces.find(id)) out.push_back({"relation names unknown piece '" + id + "'", "/heteroclinic"});
    }
    for (const auto& p : model.pieces.pieces()) {
        if (!model.heteroclinic.index_of(p.id)) {
            out.push_back({"piece missing from relation: '" + p.id + "'", "/heteroclinic"});
        }
    }
    if (has_errors(out)) return out;

    for (auto& v : validate_poset(model.heteroclinic, model.pieces)) out.push_back(std::move(v));
    for (auto& v : validate_decomposition(model)) out.push_back(std::move(v));
    if (has_errors(out)) return out;

    const auto sets = compute_piece_sets(model.pieces, options.cycle_cap);
    std::vector<ChainRotation> chains;
    for (auto& chain : maximal_nontrivial_chains(model.heteroclinic, model.pieces, options.chain_cap)) {
        auto poly = chain_rotation_set(chain, sets);
        chains.push_back({std::move(chain), std::move(poly)});
    }
    check_direct_sums(model, chains, out);
    check_trivial_points(model, sets, chains, out);
    const HomologyVector zero(model.dim());
    if (!chains.empty() && std::none_of(chains.begin(), chains.end(), [&](const ChainRotation& cr) {
            return contains_point(cr.polytope, zero);
        })) {
        out.push_back({"rotation set misses 0: the model omits an irrotational fixed point", "/pieces",
                       Severity::warning});
    }
    for (const auto& cr : chains) {
        try {
            chain_marked_support(cr.chain, model);
        } catch (const ModelError& e) {
            out.push_back({std::string("missing orientation mark: ") + e.what(), "/heteroclinic/edges"});
        }
    }
    return out;
}

}  // namespace rotset
