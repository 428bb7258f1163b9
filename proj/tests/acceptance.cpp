// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include "rotset/analysis.hpp"
#include "rotset/conley.hpp"
#include "rotset/fixtures.hpp"
#include "rotset/oracle.hpp"
#include "support/caratheodory.hpp"
#include "support/random_geometry.hpp"
#include "support/random_graphs.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace rotset;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

// Records the first failure; later ones are counted.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures_++ == 0) first_ = what;
    }
    Outcome finish(std::string summary) const {
        if (failures_ == 0) return {true, std::move(summary)};
        return {false, std::to_string(failures_) + " failure(s), first: " + first_};
    }

private:
    std::size_t failures_ = 0;
    std::string first_;
};

std::vector<ModelDocument> all_fixtures() {
    return {genus2_nonconvex(), genus2_full(), genus2_blocks(), exp_family(1), exp_family(2), exp_family(3)};
}

Outcome nonconvex_pair() {
    Tally t;
    const auto comp = compute(genus2_nonconvex().model);
    t.expect(comp.blocks.size() == 2, "expected 2 blocks, got " + std::to_string(comp.blocks.size()));
    std::vector<RationalPolytope> members;
    for (const auto& b : comp.blocks) members.push_back(b.polytope);
    const auto probe = convexity_probe(members, 4);
    t.expect(!probe.no_counterexample, "convexity probe found no counterexample");
    if (probe.witness) {
        for (const auto& m : members) t.expect(!contains_point(m, *probe.witness), "witness inside a member");
    }
    std::vector<RationalPolytope> chains;
    for (const auto& c : comp.chains) chains.push_back(c.polytope);
    t.expect(star_shape_check(chains).star_shaped, "union not star-shaped");
    return t.finish("2 blocks, union not convex (witness " + (probe.witness ? probe.witness->to_string() : "-") +
                    "), star-shaped about 0");
}

Outcome joined_pair() {
    Tally t;
    const auto comp = compute(genus2_full().model);
    t.expect(comp.blocks.size() == 1, "expected 1 block, got " + std::to_string(comp.blocks.size()));
    const std::size_t dim = comp.blocks.empty() ? 0 : affine_dim(comp.blocks[0].polytope);
    t.expect(dim == 4, "affine_dim " + std::to_string(dim));
    const auto verdict = interior_check(comp.blocks, 2).verdict;
    t.expect(verdict == InteriorVerdict::convex, "interior verdict " + std::string(to_string(verdict)));
    return t.finish("1 block, affine_dim 4, interior check: convex");
}

Outcome exponential_family() {
    Tally t;
    std::ostringstream summary;
    for (int k = 1; k <= 3; ++k) {
        const auto doc = exp_family(k);
        const auto& m = doc.model;
        const auto comp = compute(m);
        const std::size_t expected = std::size_t{1} << k;
        t.expect(comp.blocks.size() == expected,
                 "k=" + std::to_string(k) + ": " + std::to_string(comp.blocks.size()) + " blocks");
        t.expect(Integer(comp.blocks.size()) <= block_count_bound(m.genus), "bound exceeded");
        std::vector<SubspaceBasis> spans;
        for (const auto& b : comp.blocks) {
            t.expect(affine_dim(b.polytope) == static_cast<std::size_t>(k), b.key.key() + " has wrong dimension");
            SubspaceBasis s(m.dim(), {});
            for (const auto& id : b.key.support) s = s.sum(m.decomposition.find(id)->subspace);
            spans.push_back(s);
        }
        std::size_t worst = 0;
        for (std::size_t i = 0; i < spans.size(); ++i) {
            for (std::size_t j = i + 1; j < spans.size(); ++j) {
                std::vector<HomologyVector> both = spans[i].basis();
                both.insert(both.end(), spans[j].basis().begin(), spans[j].basis().end());
                const std::size_t meet = spans[i].rank() + spans[j].rank() - rank(both);
                worst = std::max(worst, meet);
                t.expect(meet + 1 <= static_cast<std::size_t>(k), "support subspaces meet in rank " + std::to_string(meet));
            }
        }
        summary << (k > 1 ? "; " : "") << "k=" << k << ": " << comp.blocks.size() << " blocks of dim " << k
                << ", max meet rank " << worst;
    }
    return t.finish(summary.str());
}

Outcome oracle_equivalence() {
    Tally t;
    std::mt19937_64 rng(20240601);
    std::size_t nodes = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto piece = testing::random_piece(rng, 6, 4);
        const std::size_t n = piece.graph.size();
        nodes += n;
        t.expect(piece_rotation_set(piece) == oracle_piece_set(piece, 2 * n),
                 "graph " + std::to_string(trial) + " with " + std::to_string(n) + " nodes differs");
    }
    return t.finish("100 random graphs (" + std::to_string(nodes) + " nodes total) match exactly");
}

Outcome chain_sampling() {
    Tally t;
    std::size_t total = 0;
    for (const auto& doc : all_fixtures()) {
        const auto comp = compute(doc.model);
        const std::size_t chains = comp.chains.size();
        for (std::size_t c = 0; c < chains; ++c) {
            const std::size_t n = 1000 / chains + (c < 1000 % chains ? 1 : 0);
            const auto samples = sample_chain_averages(comp.chains[c].chain, doc.model.pieces, n, 77 + c);
            for (const auto& s : samples) {
                ++total;
                t.expect(contains_point(comp.chains[c].polytope, s), comp.chains[c].chain.to_string() + " misses " + s.to_string());
                for (const auto& b : comp.blocks) {
                    if (std::find(b.chains.begin(), b.chains.end(), c) == b.chains.end()) continue;
                    t.expect(contains_point(b.polytope, s), b.key.key() + " misses " + s.to_string());
                }
            }
        }
    }
    return t.finish(std::to_string(total) + " samples over 6 fixtures, all inside chain set and block");
}

Outcome structural_suite() {
    Tally t;
    for (const auto& doc : all_fixtures()) {
        const auto comp = compute(doc.model);
        const auto report = verify_structure(doc.model, comp, StructureOptions{0});
        const std::string name = doc.metadata.value("fixture", "?");
        for (const auto* check : {"variants_per_support", "support_span", "chain_containment"}) {
            const auto* c = report.find(check);
            t.expect(c && c->passed, name + ": " + check + (c && !c->failures.empty() ? " " + c->failures[0] : ""));
        }
        std::map<std::vector<std::string>, std::size_t> variants;
        for (const auto& b : comp.blocks) ++variants[b.key.support];
        for (const auto& [s, n] : variants) t.expect(n == 1 || n == 2 || n == 4, name + ": " + std::to_string(n) + " variants");
    }

    const auto plain = genus2_full();
    const auto with_t = genus2_full_with_trivial();
    t.expect(!has_errors(validate_model(with_t.model)), "model with trivial piece invalid");
    const auto a = compute(plain.model);
    const auto b = compute(with_t.model);
    t.expect(a.chains.size() == b.chains.size() && a.blocks.size() == b.blocks.size(), "trivial piece changed counts");
    for (std::size_t i = 0; i < std::min(a.chains.size(), b.chains.size()); ++i) {
        t.expect(a.chains[i].chain == b.chains[i].chain && a.chains[i].polytope == b.chains[i].polytope,
                 "trivial piece changed a chain");
    }
    for (std::size_t i = 0; i < std::min(a.blocks.size(), b.blocks.size()); ++i) {
        t.expect(a.blocks[i].key == b.blocks[i].key && a.blocks[i].polytope == b.blocks[i].polytope,
                 "trivial piece changed a block");
    }
    for (const auto& [id, poly] : a.piece_sets) t.expect(b.piece_sets.at(id) == poly, "piece set changed: " + id);
    return t.finish("6 fixtures pass variant/span/containment checks; trivial pass-through leaves polytopes unchanged");
}

Outcome geometry_kernel() {
    Tally t;
    std::mt19937_64 rng(8675309);
    std::size_t inside = 0, outside = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(trial % 7);
        const std::size_t n = d + 1 + rng() % 3;
        const auto pts = testing::random_points(rng, d, n);
        const auto p = extreme_points(pts);
        t.expect(extreme_points(p.vertices()) == p, "extreme_points not idempotent");

        const auto w = testing::random_weights(rng, n);
        HomologyVector combo(d);
        for (std::size_t i = 0; i < n; ++i) combo += w[i] * pts[i];
        t.expect(contains_point(p, combo), "convex combination rejected");

        const auto probe = testing::random_vector(rng, d);
        const bool in = contains_point(p, probe);
        (in ? inside : outside) += 1;
        t.expect(in == testing::caratheodory_contains(pts, probe), "membership disagrees with Caratheodory oracle");
        if (const auto lambda = membership_witness(p, probe)) {
            HomologyVector back(d);
            Rational sum = 0;
            for (std::size_t i = 0; i < lambda->size(); ++i) {
                back += (*lambda)[i] * p.vertices()[i];
                sum += (*lambda)[i];
                t.expect((*lambda)[i] >= 0, "negative witness weight");
            }
            t.expect(back == probe && sum == 1, "witness does not reproduce the point");
        }
    }

    // Gap families: [0, a v] and [b v, v], thickened off the segment, leave exactly (a, b) uncovered.
    std::size_t gaps = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(trial % 7);
        HomologyVector v = testing::random_vector(rng, d);
        if (v.is_zero()) continue;
        Rational a(1 + static_cast<long>(rng() % 5), 12), b(7 + static_cast<long>(rng() % 5), 12);
        a.canonicalize();
        b.canonicalize();
        HomologyVector off = HomologyVector::unit(d, 0);
        if (rank(std::vector{v, off}) < 2) off = HomologyVector::unit(d, 1);
        std::vector<RationalPolytope> family{
            extreme_points(std::vector{HomologyVector(d), v * a, v * a + off, HomologyVector(d) - off}),
            extreme_points(std::vector{v * b, v, v + off, v * b - off}),
        };
        const auto found = segment_gaps(HomologyVector(d), v, family);
        const bool exact = found.size() == 1 && found[0].lo == a && found[0].hi == b && !found[0].lo_closed &&
                           !found[0].hi_closed;
        t.expect(exact, "gap (" + format_rational(a) + ", " + format_rational(b) + ") not reported exactly");
        t.expect(!segment_covered(HomologyVector(d), v, family), "gapped segment reported covered");
        const Rational mid = (a + b) / 2;
        t.expect(segment_covered(HomologyVector(d), v * a, family) && segment_covered(v * b, v, family),
                 "covered part reported uncovered");
        t.expect(!std::any_of(family.begin(), family.end(), [&](const auto& m) { return contains_point(m, v * mid); }),
                 "gap midpoint covered");
        ++gaps;
    }
    return t.finish("1000 random instances in dims 2-8 (" + std::to_string(inside) + " probes inside, " +
                    std::to_string(outside) + " outside), " + std::to_string(gaps) + " gap families exact");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"genus2_nonconvex: two blocks, non-convex union, star-shaped", 1, nonconvex_pair},
        {"genus2_full: one full-dimensional convex block", 1, joined_pair},
        {"exp_family(k), k=1..3: 2^k simplices of dimension k", 5, exponential_family},
        {"oracle equivalence on 100 random graphs", 30, oracle_equivalence},
        {"chain-sampling containment on every fixture", 10, chain_sampling},
        {"structural invariants and trivial-piece regression", 5, structural_suite},
        {"geometry kernel properties", 30, geometry_kernel},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& c = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.passed && secs > c.budget_s) {
            o.passed = false;
            o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
        }
        all = all && o.passed;
        std::printf("%s criterion %zu: %s | %s | %.2f s\n", o.passed ? "PASS" : "FAIL", i + 1, c.name, o.detail.c_str(),
                    secs);
    }
    return all ? 0 : 1;
}
