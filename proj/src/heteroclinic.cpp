#include "rotset/heteroclinic.hpp"

#include "rotset/errors.hpp"

#include <algorithm>
#include <functional>

namespace rotset {

std::string Chain::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i) out += " < ";
        out += pieces[i];
    }
    return out + ")";
}

HeteroclinicPoset::HeteroclinicPoset(std::vector<std::string> piece_ids, std::vector<HeteroclinicEdge> edges)
    : ids_(std::move(piece_ids)), edges_(std::move(edges)), out_(ids_.size()) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto f = index_of(edges_[e].from);
        const auto t = index_of(edges_[e].to);
        if (!f) throw ModelError("heteroclinic edge references unknown piece '" + edges_[e].from + "'");
        if (!t) throw ModelError("heteroclinic edge references unknown piece '" + edges_[e].to + "'");
        out_[*f].push_back(*t);
    }
    const std::size_t n = ids_.size();
    reach_.assign(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> todo(out_[s].begin(), out_[s].end());
        while (!todo.empty()) {
            const std::size_t v = todo.back();
            todo.pop_back();
            if (reach_[s][v]) continue;
            reach_[s][v] = true;
            todo.insert(todo.end(), out_[v].begin(), out_[v].end());
        }
    }
}

std::optional<std::size_t> HeteroclinicPoset::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (ids_[i] == id) return i;
    }
    return std::nullopt;
}

std::size_t HeteroclinicPoset::idx(std::string_view id) const {
    if (auto i = index_of(id)) return *i;
    throw ModelError("unknown piece '" + std::string(id) + "'");
}

std::optional<std::vector<std::string>> HeteroclinicPoset::find_cycle() const {
    const std::size_t n = ids_.size();
    enum Color { white, grey, black };
    std::vector<Color> color(n, white);
    std::vector<std::size_t> stack;
    std::optional<std::vector<std::string>> found;

    std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
        color[v] = grey;
        stack.push_back(v);
        auto succ = out_[v];
        std::sort(succ.begin(), succ.end());
        for (std::size_t w : succ) {
            if (color[w] == grey) {
                std::vector<std::string> cyc;
                auto it = std::find(stack.begin(), stack.end(), w);
                for (; it != stack.end(); ++it) cyc.push_back(ids_[*it]);
                cyc.push_back(ids_[w]);
                found = std::move(cyc);
                return true;
            }
            if (color[w] == white && dfs(w)) return true;
        }
        stack.pop_back();
        color[v] = black;
        return false;
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (color[v] == white && dfs(v)) break;
    }
    return found;
}

bool HeteroclinicPoset::precedes(std::string_view a, std::string_view b) const {
    return reach_[idx(a)][idx(b)];
}

SideSet HeteroclinicPoset::source_marks(std::string_view a, std::string_view b) const {
    idx(a);
    const std::size_t ib = idx(b);
    SideSet marks;
    for (const auto& e : edges_) {
        if (e.from != a) continue;
        const std::size_t c = idx(e.to);
        if (c == ib || reach_[c][ib]) marks |= e.source_marks;
    }
    return marks;
}

SideSet HeteroclinicPoset::target_marks(std::string_view a, std::string_view b) const {
    const std::size_t ia = idx(a);
    idx(b);
    SideSet marks;
    for (const auto& e : edges_) {
        if (e.to != b) continue;
        const std::size_t c = idx(e.from);
        if (c == ia || reach_[ia][c]) marks |= e.target_marks;
    }
    return marks;
}

Violations validate_poset(const HeteroclinicPoset& poset, const PieceTable& pieces) {
    Violations out;
    for (std::size_t e = 0; e < poset.edges().size(); ++e) {
        const auto& edge = poset.edges()[e];
        const std::string path = "/heteroclinic/edges/" + std::to_string(e);
        const auto* from = pieces.find(edge.from);
        const auto* to = pieces.find(edge.to);
        if (edge.from == edge.to) {
            out.push_back({"reflexive relation: " + edge.from + " < " + edge.to, path});
        }
        if (from && from->classification != PieceClass::annular && !edge.source_marks.empty()) {
            out.push_back({"source marks on non-annular piece: '" + edge.from + "'", path + "/source_marks"});
        }
        if (to && to->classification != PieceClass::annular && !edge.target_marks.empty()) {
            out.push_back({"target marks on non-annular piece: '" + edge.to + "'", path + "/target_marks"});
        }
    }
    if (auto cyc = poset.find_cycle()) {
        std::string text;
        for (std::size_t i = 0; i < cyc->size(); ++i) text += (i ? " -> " : "") + (*cyc)[i];
        out.push_back({"heteroclinic cycle: " + text, "/heteroclinic/edges"});
    }

    // Comparability graph connectivity (union-find over direct edges).
    const auto& ids = poset.piece_ids();
    std::vector<std::size_t> parent(ids.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (const auto& e : poset.edges()) parent[root(*poset.index_of(e.from))] = root(*poset.index_of(e.to));
    std::size_t classes = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) classes += root(i) == i ? 1 : 0;
    if (classes > 1) {
        out.push_back({"heteroclinic graph not connected: " + std::to_string(classes) +
                           " classes (the sinks and sources joining them are not modelled)",
                       "/heteroclinic", Severity::warning});
    }
    return out;
}

bool is_chain(const HeteroclinicPoset& poset, const Chain& chain) {
    for (std::size_t i = 1; i < chain.pieces.size(); ++i) {
        if (!poset.precedes(chain.pieces[i - 1], chain.pieces[i])) return false;
    }
    return !chain.pieces.empty();
}

std::vector<Chain> maximal_nontrivial_chains(const HeteroclinicPoset& poset, const PieceTable& pieces,
                                             std::size_t cap) {
    if (auto cyc = poset.find_cycle()) {
        std::string text;
        for (std::size_t i = 0; i < cyc->size(); ++i) text += (i ? " -> " : "") + (*cyc)[i];
        throw ModelError("heteroclinic cycle: " + text, "/heteroclinic/edges");
    }
    std::vector<std::string> nodes;
    for (const auto& id : poset.piece_ids()) {
        if (pieces.at(id).classification != PieceClass::trivial) nodes.push_back(id);
    }
    std::sort(nodes.begin(), nodes.end());
    const std::size_t n = nodes.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rel[i][j] = i != j && poset.precedes(nodes[i], nodes[j]);
    }
    std::vector<std::vector<std::size_t>> covers(n);
    std::vector<bool> minimal(n, true);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!rel[i][j]) continue;
            minimal[j] = false;
            bool direct = true;
            for (std::size_t k = 0; k < n && direct; ++k) direct = !(rel[i][k] && rel[k][j]);
            if (direct) covers[i].push_back(j);
        }
    }

    std::vector<Chain> out;
    std::vector<std::size_t> path;
    std::function<void(std::size_t)> extend = [&](std::size_t v) {
        path.push_back(v);
        if (covers[v].empty()) {
            if (out.size() >= cap) {
                throw ResourceError("maximal chain enumeration exceeded the cap of " + std::to_string(cap), cap);
            }
            Chain c;
            for (std::size_t p : path) c.pieces.push_back(nodes[p]);
            out.push_back(std::move(c));
        } else {
            for (std::size_t w : covers[v]) extend(w);
        }
        path.pop_back();
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (minimal[i]) extend(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

RationalPolytope chain_rotation_set(const Chain& chain, const PieceSets& sets) {
    std::vector<HomologyVector> pts;
    for (const auto& id : chain.pieces) {
        auto it = sets.find(id);
        if (it == sets.end()) throw ModelError("no rotation set for piece '" + id + "'");
        pts.insert(pts.end(), it->second.vertices().begin(), it->second.vertices().end());
    }
    if (pts.empty()) throw ModelError("empty chain");
    return extreme_points(pts);
}

RationalPolytope chain_rotation_set(const Chain& chain, const PieceTable& pieces, std::size_t cycle_cap) {
    PieceSets sets;
    for (const auto& id : chain.pieces) {
        if (!sets.contains(id)) sets.emplace(id, piece_rotation_set(pieces.at(id), cycle_cap));
    }
    return chain_rotation_set(chain, sets);
}

std::vector<ChainRotation> global_rotation_union(const HeteroclinicPoset& poset, const PieceSets& sets,
                                                 const PieceTable& pieces) {
    std::vector<ChainRotation> out;
    for (auto& chain : maximal_nontrivial_chains(poset, pieces)) {
        auto poly = chain_rotation_set(chain, sets);
        out.push_back({std::move(chain), std::move(poly)});
    }
    return out;
}

}  // namespace rotset
