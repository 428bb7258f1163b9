#include "rotset/markov.hpp"

#include "rotset/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rotset {

std::string_view to_string(PieceClass c) {
    switch (c) {
        case PieceClass::trivial: return "trivial";
        case PieceClass::annular: return "annular";
        case PieceClass::curved: return "curved";
    }
    return "?";
}

std::string_view to_string(FillBehavior f) {
    switch (f) {
        case FillBehavior::attracting: return "attracting";
        case FillBehavior::repelling: return "repelling";
        case FillBehavior::neither: return "neither";
    }
    return "?";
}

std::optional<PieceClass> parse_piece_class(std::string_view s) {
    if (s == "trivial") return PieceClass::trivial;
    if (s == "annular") return PieceClass::annular;
    if (s == "curved") return PieceClass::curved;
    return std::nullopt;
}

std::optional<FillBehavior> parse_fill_behavior(std::string_view s) {
    if (s == "attracting") return FillBehavior::attracting;
    if (s == "repelling") return FillBehavior::repelling;
    if (s == "neither") return FillBehavior::neither;
    return std::nullopt;
}

MarkovGraph::MarkovGraph(std::vector<MarkovNode> nodes,
                         std::span<const std::pair<std::string, std::string>> edges)
    : nodes_(std::move(nodes)), succ_(nodes_.size()) {
    std::map<std::string_view, std::size_t> index;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!index.emplace(nodes_[i].id, i).second) {
            throw ModelError("duplicate node id '" + nodes_[i].id + "'");
        }
    }
    for (const auto& [from, to] : edges) {
        auto f = index.find(from);
        auto t = index.find(to);
        if (f == index.end()) throw ModelError("edge references unknown node '" + from + "'");
        if (t == index.end()) throw ModelError("edge references unknown node '" + to + "'");
        edges_.emplace_back(f->second, t->second);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& [f, t] : edges_) succ_[f].push_back(t);
}

MarkovGraph complete_graph(const std::vector<HomologyVector>& displacements) {
    std::vector<MarkovNode> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < displacements.size(); ++i) {
        nodes.push_back({"n" + std::to_string(i), displacements[i]});
    }
    for (const auto& a : nodes) {
        for (const auto& b : nodes) edges.emplace_back(a.id, b.id);
    }
    return MarkovGraph(std::move(nodes), edges);
}

bool MarkovGraph::has_edge(std::size_t from, std::size_t to) const {
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(from, to));
}

std::optional<std::size_t> MarkovGraph::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].id == id) return i;
    }
    return std::nullopt;
}

namespace {

// Tarjan over the subgraph induced by `allowed`.
std::vector<std::vector<std::size_t>> tarjan(const MarkovGraph& g, const std::vector<bool>& allowed) {
    const std::size_t n = g.size();
    const std::size_t unset = n;
    std::vector<std::size_t> index(n, unset), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> out;
    std::size_t counter = 0;

    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w : g.successors(v)) {
            if (!allowed[w]) continue;
            if (index[w] == unset) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (allowed[v] && index[v] == unset) visit(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

class Johnson {
public:
    Johnson(const MarkovGraph& g, std::size_t cap,
            const std::function<void(std::span<const std::size_t>)>& visit)
        : g_(g), cap_(cap), visit_(visit), blocked_(g.size(), false), blockers_(g.size()),
          in_scope_(g.size(), false) {}

    void run() {
        const std::size_t n = g_.size();
        std::vector<bool> allowed(n, true);
        for (std::size_t s = 0; s < n; ++s) {
            // Component of s in the subgraph induced by {s, ..., n-1}.
            for (const auto& comp : tarjan(g_, allowed)) {
                if (comp.front() != s) continue;
                const bool nontrivial = comp.size() > 1 || g_.has_edge(s, s);
                if (nontrivial) {
                    std::fill(in_scope_.begin(), in_scope_.end(), false);
                    for (std::size_t v : comp) {
                        in_scope_[v] = true;
                        blocked_[v] = false;
                        blockers_[v].clear();
                    }
                    start_ = s;
                    circuit(s);
                }
                break;
            }
            allowed[s] = false;
        }
    }

private:
    bool circuit(std::size_t v) {
        bool found = false;
        path_.push_back(v);
        blocked_[v] = true;
        for (std::size_t w : g_.successors(v)) {
            if (!in_scope_[w]) continue;
            if (w == start_) {
                emit();
                found = true;
            } else if (!blocked_[w] && circuit(w)) {
                found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (std::size_t w : g_.successors(v)) {
                if (in_scope_[w]) blockers_[w].insert(v);
            }
        }
        path_.pop_back();
        return found;
    }

    void unblock(std::size_t u) {
        blocked_[u] = false;
        auto pending = std::move(blockers_[u]);
        blockers_[u].clear();
        for (std::size_t w : pending) {
            if (blocked_[w]) unblock(w);
        }
    }

    void emit() {
        if (++count_ > cap_) {
            throw ResourceError("simple-cycle enumeration exceeded the cap of " + std::to_string(cap_) +
                                    " cycles",
                                cap_);
        }
        visit_(path_);
    }

    const MarkovGraph& g_;
    std::size_t cap_;
    const std::function<void(std::span<const std::size_t>)>& visit_;
    std::vector<bool> blocked_;
    std::vector<std::set<std::size_t>> blockers_;
    std::vector<bool> in_scope_;
    std::vector<std::size_t> path_;
    std::size_t start_ = 0;
    std::size_t count_ = 0;
};

}  // namespace

std::vector<std::vector<std::size_t>> MarkovGraph::components() const {
    return tarjan(*this, std::vector<bool>(size(), true));
}

void for_each_simple_cycle(const MarkovGraph& graph, std::size_t cap,
                           const std::function<void(std::span<const std::size_t>)>& visit) {
    Johnson(graph, cap, visit).run();
}

std::vector<std::vector<std::size_t>> simple_cycles(const MarkovGraph& graph, std::size_t cap) {
    std::vector<std::vector<std::size_t>> out;
    for_each_simple_cycle(graph, cap, [&](std::span<const std::size_t> c) {
        out.emplace_back(c.begin(), c.end());
    });
    return out;
}

HomologyVector cycle_mean(const MarkovGraph& graph, std::span<const std::size_t> cycle) {
    if (cycle.empty()) throw ModelError("periodic word must be nonempty");
    HomologyVector sum = graph.nodes()[cycle.front()].displacement;
    for (std::size_t j = 1; j < cycle.size(); ++j) sum += graph.nodes()[cycle[j]].displacement;
    return sum * Rational(1, cycle.size());
}

HomologyVector word_rotation_vector(const BasicPieceModel& piece, const PeriodicWord& word) {
    if (word.nodes.empty()) throw ModelError("periodic word must be nonempty");
    std::vector<std::size_t> idx;
    idx.reserve(word.nodes.size());
    for (const auto& id : word.nodes) {
        auto i = piece.graph.index_of(id);
        if (!i) throw ModelError("word visits unknown node '" + id + "' of piece '" + piece.id + "'");
        idx.push_back(*i);
    }
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const std::size_t next = (j + 1) % idx.size();
        if (!piece.graph.has_edge(idx[j], idx[next])) {
            throw ModelError("inadmissible transition " + word.nodes[j] + " -> " + word.nodes[next] +
                             " in piece '" + piece.id + "'");
        }
    }
    return cycle_mean(piece.graph, idx);
}

RationalPolytope piece_rotation_set(const BasicPieceModel& piece, std::size_t cycle_cap) {
    std::set<HomologyVector> means;
    for_each_simple_cycle(piece.graph, cycle_cap, [&](std::span<const std::size_t> c) {
        means.insert(cycle_mean(piece.graph, c));
    });
    if (means.empty()) throw ModelError("piece '" + piece.id + "' has no periodic orbit");
    std::vector<HomologyVector> pts(means.begin(), means.end());
    return extreme_points(pts);
}

Violations validate_piece(const BasicPieceModel& piece, std::size_t cycle_cap) {
    Violations out;
    auto fail = [&](std::string msg) { out.push_back({std::move(msg), {}, Severity::error}); };
    const std::string who = "piece '" + piece.id + "'";
    const bool annular = piece.classification == PieceClass::annular;

    if (annular && !piece.package) fail("annular piece without package: " + who);
    if (!annular && piece.package) fail("package on non-annular piece: " + who);
    if (annular && !piece.fill_behavior) fail("annular piece without fill_behavior: " + who);
    if (!annular && piece.fill_behavior) fail("fill_behavior on non-annular piece: " + who);

    const auto& g = piece.graph;
    if (g.size() == 0) {
        fail("empty graph: " + who);
        return out;
    }
    const std::size_t dim = g.nodes().front().displacement.dim();
    bool dims_ok = true;
    std::vector<bool> has_in(g.size(), false), has_out(g.size(), false);
    for (const auto& [f, t] : g.edges()) {
        has_out[f] = true;
        has_in[t] = true;
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& node = g.nodes()[i];
        if (node.displacement.dim() != dim) {
            fail("displacement dimension mismatch: node '" + node.id + "' of " + who);
            dims_ok = false;
        }
        for (const auto& c : node.displacement.coords()) {
            if (!is_integer(c)) {
                fail("non-integer displacement: node '" + node.id + "' of " + who);
                break;
            }
        }
    }
    const auto comps = g.components();
    if (comps.size() > 1) {
        fail("not strongly connected: " + who + " splits into " + std::to_string(comps.size()) +
             " components (node '" + g.nodes()[comps[1].front()].id + "' and node '" +
             g.nodes()[comps[0].front()].id + "' are not mutually reachable)");
    } else {
        // Only a lone node without its loop can get here.
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!has_out[i]) fail("node without outgoing edge: '" + g.nodes()[i].id + "' of " + who);
            if (!has_in[i]) fail("node without incoming edge: '" + g.nodes()[i].id + "' of " + who);
        }
    }
    if (out.empty() && dims_ok && piece.classification == PieceClass::trivial) {
        const auto rot = piece_rotation_set(piece, cycle_cap);
        if (rot.size() != 1) {
            fail("trivial piece with non-singleton rotation set: " + who + " has " + rot.to_string());
        }
    }
    return out;
}

}  // namespace rotset

namespace rotset {

PieceTable::PieceTable(std::vector<BasicPieceModel> pieces) : pieces_(std::move(pieces)) {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (!index_.emplace(pieces_[i].id, i).second) {
            throw ModelError("duplicate piece id '" + pieces_[i].id + "'");
        }
    }
}

const BasicPieceModel* PieceTable::find(std::string_view id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &pieces_[it->second];
}

const BasicPieceModel& PieceTable::at(std::string_view id) const {
    if (const auto* p = find(id)) return *p;
    throw ModelError("unknown piece '" + std::string(id) + "'");
}

std::optional<std::size_t> PieceTable::index_of(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

PieceSets compute_piece_sets(const PieceTable& pieces, std::size_t cycle_cap) {
    PieceSets out;
    for (const auto& p : pieces.pieces()) out.emplace(p.id, piece_rotation_set(p, cycle_cap));
    return out;
}

}  // namespace rotset
