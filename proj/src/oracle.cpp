#include "rotset/oracle.hpp"

#include "rotset/errors.hpp"

#include <deque>
#include <set>
#include <utility>

namespace rotset {

std::uint32_t Lcg64::below(std::uint32_t n) {
    const std::uint64_t range = std::uint64_t{1} << 32;
    const std::uint64_t limit = range - range % n;
    for (;;) {
        const std::uint64_t r = next() >> 32;
        if (r < limit) return static_cast<std::uint32_t>(r % n);
    }
}

RationalPolytope oracle_piece_set(const BasicPieceModel& piece, std::size_t max_len, std::size_t state_cap) {
    const auto& g = piece.graph;
    if (g.size() == 0) throw ModelError("piece '" + piece.id + "' has an empty graph");
    if (max_len < g.size()) {
        throw ModelError("max_len " + std::to_string(max_len) + " is below the node count " + std::to_string(g.size()));
    }

    // Walks from `start` are merged when they agree on (current node, length,
    // displacement sum): their closed extensions have the same means.
    using State = std::pair<std::size_t, HomologyVector>;
    std::set<HomologyVector> means;
    std::size_t visited = 0;
    for (std::size_t start = 0; start < g.size(); ++start) {
        std::set<State> layer{{start, g.nodes()[start].displacement}};
        for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
            visited += layer.size();
            if (visited > state_cap) {
                throw ResourceError("oracle state cap exceeded for piece '" + piece.id + "'", state_cap);
            }
            const Rational inv(1, static_cast<unsigned long>(len));
            std::set<State> next;
            for (const auto& [node, sum] : layer) {
                if (g.has_edge(node, start)) means.insert(sum * inv);
                if (len == max_len) continue;
                for (std::size_t v : g.successors(node)) next.emplace(v, sum + g.nodes()[v].displacement);
            }
            layer = std::move(next);
        }
    }
    if (means.empty()) throw ModelError("piece '" + piece.id + "' has no closed walk of length <= max_len");
    return extreme_points(std::vector<HomologyVector>(means.begin(), means.end()));
}

HomologyVector chain_average(const Chain& chain, const PieceTable& pieces, const std::vector<Rational>& weights,
                             const std::vector<PeriodicWord>& words) {
    if (chain.pieces.empty()) throw ModelError("empty chain");
    if (weights.size() != chain.pieces.size() || words.size() != chain.pieces.size()) {
        throw ModelError("chain_average: need one weight and one word per piece");
    }
    Rational total = 0;
    for (const auto& w : weights) {
        if (w < 0) throw ModelError("chain_average: negative weight");
        total += w;
    }
    if (total != 1) throw ModelError("chain_average: weights sum to " + format_rational(total));

    std::optional<HomologyVector> out;
    for (std::size_t s = 0; s < chain.pieces.size(); ++s) {
        const auto& piece = pieces.at(chain.pieces[s]);
        HomologyVector term = word_rotation_vector(piece, words[s]) * weights[s];
        if (out) {
            *out += term;
        } else {
            out = std::move(term);
        }
    }
    return *out;
}

namespace {

// Shortest path from `from` to `to` excluding `from`, including `to`.
std::vector<std::size_t> shortest_path(const MarkovGraph& g, std::size_t from, std::size_t to) {
    std::vector<std::size_t> parent(g.size(), g.size());
    std::deque<std::size_t> queue{from};
    std::vector<bool> seen(g.size(), false);
    seen[from] = true;
    bool found = false;
    while (!queue.empty() && !found) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : g.successors(u)) {
            if (v == to) {
                parent[v] = u;
                found = true;
                break;
            }
            if (!seen[v]) {
                seen[v] = true;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    if (!found) throw ModelError("no path back to node '" + g.nodes()[to].id + "'");
    std::vector<std::size_t> path{to};
    for (std::size_t u = parent[to]; u != from; u = parent[u]) path.push_back(u);
    return {path.rbegin(), path.rend()};
}

PeriodicWord random_word(const MarkovGraph& g, Lcg64& rng) {
    const auto n = static_cast<std::uint32_t>(g.size());
    const std::size_t start = rng.below(n);
    const std::size_t steps = rng.below(2 * n);
    std::vector<std::size_t> walk{start};
    for (std::size_t i = 0; i < steps; ++i) {
        const auto& succ = g.successors(walk.back());
        if (succ.empty()) break;
        walk.push_back(succ[rng.below(static_cast<std::uint32_t>(succ.size()))]);
    }
    for (std::size_t v : shortest_path(g, walk.back(), start)) walk.push_back(v);
    walk.pop_back();  // the word is cyclic; `start` closes it

    PeriodicWord word;
    for (std::size_t v : walk) word.nodes.push_back(g.nodes()[v].id);
    return word;
}

}  // namespace

std::vector<HomologyVector> sample_chain_averages(const Chain& chain, const PieceTable& pieces, std::size_t samples,
                                                  std::uint64_t seed) {
    if (chain.pieces.empty()) throw ModelError("empty chain");
    const std::size_t k = chain.pieces.size();
    std::vector<HomologyVector> out;
    out.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        Lcg64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
        rng.next();
        const std::uint32_t denominator = 1 + rng.below(64);
        std::vector<unsigned long> units(k, 0);
        for (std::uint32_t u = 0; u < denominator; ++u) ++units[rng.below(static_cast<std::uint32_t>(k))];

        std::vector<Rational> weights;
        std::vector<PeriodicWord> words;
        for (std::size_t s = 0; s < k; ++s) {
            weights.emplace_back(units[s], denominator);
            weights.back().canonicalize();
            words.push_back(random_word(pieces.at(chain.pieces[s]).graph, rng));
        }
        out.push_back(chain_average(chain, pieces, weights, words));
    }
    return out;
}

}  // namespace rotset
