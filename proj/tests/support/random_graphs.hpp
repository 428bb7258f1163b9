#pragma once

#include "rotset/markov.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace rotset::testing {

inline BasicPieceModel make_piece(std::string id, PieceClass cls, std::vector<HomologyVector> displacements,
                                  std::vector<std::pair<std::string, std::string>> edges) {
    std::vector<MarkovNode> nodes;
    for (std::size_t i = 0; i < displacements.size(); ++i) {
        nodes.push_back({"n" + std::to_string(i), std::move(displacements[i])});
    }
    BasicPieceModel p;
    p.id = std::move(id);
    p.classification = cls;
    if (cls == PieceClass::annular) {
        p.package = "pkg_" + p.id;
        p.fill_behavior = FillBehavior::neither;
    }
    p.graph = MarkovGraph(std::move(nodes), edges);
    return p;
}

/// Strongly connected: a random Hamiltonian cycle plus each other edge with
/// probability `density`. Integer displacements in [-3, 3]^dim.
inline BasicPieceModel random_piece(std::mt19937_64& rng, std::size_t max_nodes = 6, std::size_t dim = 4,
                                    double density = 0.3) {
    std::uniform_int_distribution<std::size_t> size(1, max_nodes);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::bernoulli_distribution extra(density);
    const std::size_t n = size(rng);
    std::vector<HomologyVector> disp;
    for (std::size_t i = 0; i < n; ++i) {
        HomologyVector v(dim);
        for (std::size_t k = 0; k < dim; ++k) v[k] = coord(rng);
        disp.push_back(std::move(v));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::pair<std::string, std::string>> edges;
    auto name = [](std::size_t i) { return "n" + std::to_string(i); };
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(name(order[i]), name(order[(i + 1) % n]));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (extra(rng)) edges.emplace_back(name(a), name(b));
        }
    }
    return make_piece("R", PieceClass::curved, std::move(disp), std::move(edges));
}

}  // namespace rotset::testing
