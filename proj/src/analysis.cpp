#include "rotset/analysis.hpp"

#include "rotset/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace rotset {

std::string_view to_string(ChainCase c) {
    switch (c) {
        case ChainCase::contains_zero: return "contains_zero";
        case ChainCase::on_line: return "on_line";
        case ChainCase::inconsistent: return "inconsistent";
    }
    return "?";
}

std::string_view to_string(InteriorVerdict v) {
    switch (v) {
        case InteriorVerdict::convex: return "convex";
        case InteriorVerdict::not_applicable: return "not-applicable";
        case InteriorVerdict::violation: return "violation";
    }
    return "?";
}

namespace {

// Positive multiple with coprime integer coordinates.
HomologyVector primitive(const HomologyVector& v) {
    Integer lcm_den = 1;
    for (const auto& c : v.coords()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    HomologyVector out = v * Rational(lcm_den);
    Integer g = 0;
    for (const auto& c : out.coords()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    if (g != 0) out *= Rational(1, g);
    return out;
}

void require_common_dim(std::span<const RationalPolytope> members, const char* what) {
    for (const auto& m : members) {
        if (m.dim_ambient() != members.front().dim_ambient()) {
            throw ModelError(std::string(what) + ": dimension mismatch");
        }
    }
}

bool in_union(std::span<const RationalPolytope> members, const HomologyVector& x) {
    return std::any_of(members.begin(), members.end(), [&](const auto& m) { return contains_point(m, x); });
}

}  // namespace

ChainClassification classify_chain(const RationalPolytope& chain_set) {
    const HomologyVector zero(chain_set.dim_ambient());
    if (contains_point(chain_set, zero)) return {ChainCase::contains_zero, std::nullopt};
    // 0 is not a vertex here, so rank 1 means every vertex is a multiple of one
    // vector, and those multiples share a sign because 0 is outside the hull.
    if (rank(chain_set.vertices()) == 1) {
        return {ChainCase::on_line, primitive(chain_set.vertices().front())};
    }
    return {ChainCase::inconsistent, std::nullopt};
}

StarShapeResult star_shape_check(std::span<const RationalPolytope> members) {
    if (members.empty()) throw ModelError("star_shape_check: empty union");
    require_common_dim(members, "star_shape_check");

    std::set<HomologyVector> probes;
    for (const auto& m : members) {
        const auto& vs = m.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            probes.insert(vs[i]);
            for (std::size_t j = i + 1; j < vs.size(); ++j) probes.insert(Rational(1, 2) * (vs[i] + vs[j]));
        }
    }
    const HomologyVector zero(members.front().dim_ambient());
    StarShapeResult out;
    for (const auto& v : probes) {  // lexicographic order
        auto gaps = segment_gaps(zero, v, members);
        if (!gaps.empty()) {
            out.star_shaped = false;
            out.witness = v;
            out.gaps = std::move(gaps);
            return out;
        }
    }
    return out;
}

ConvexityProbeResult convexity_probe(std::span<const RationalPolytope> members, int density) {
    if (density < 1) throw ModelError("convexity_probe: density must be at least 1");
    ConvexityProbeResult out;
    if (members.empty()) return out;
    require_common_dim(members, "convexity_probe");

    std::vector<HomologyVector> all;
    for (const auto& m : members) all.insert(all.end(), m.vertices().begin(), m.vertices().end());
    const auto hull = extreme_points(all);
    const auto& hv = hull.vertices();
    const std::size_t n = hv.size();

    std::set<HomologyVector> grid;
    std::vector<int> counts(n, 0);
    for (int d = 1; d <= density; ++d) {
        // Every composition of d into n non-negative parts.
        std::function<void(std::size_t, int)> place = [&](std::size_t i, int left) {
            if (i + 1 == n) {
                counts[i] = left;
                HomologyVector p(hull.dim_ambient());
                for (std::size_t k = 0; k < n; ++k) {
                    if (counts[k]) p += Rational(counts[k], d) * hv[k];
                }
                grid.insert(std::move(p));
                return;
            }
            for (int c = left; c >= 0; --c) {
                counts[i] = c;
                place(i + 1, left - c);
            }
        };
        place(0, d);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) grid.insert(Rational(1, 2) * (hv[i] + hv[j]));
    }

    for (const auto& p : grid) {
        ++out.points_tested;
        if (!in_union(members, p)) {
            out.no_counterexample = false;
            out.witness = p;
            return out;
        }
    }
    return out;
}

InteriorReport interior_check(std::span<const Block> blocks, int genus) {
    InteriorReport out;
    const std::size_t full = static_cast<std::size_t>(2 * genus);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].polytope.dim_ambient() == full && affine_dim(blocks[b].polytope) == full) {
            out.full_block = b;
            break;
        }
    }
    if (!out.full_block) return out;
    const auto& big = blocks[*out.full_block].polytope;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b == *out.full_block) continue;
        for (const auto& v : blocks[b].polytope.vertices()) {
            if (!contains_point(big, v)) out.stray.push_back(v);
        }
    }
    out.verdict = out.stray.empty() ? InteriorVerdict::convex : InteriorVerdict::violation;
    return out;
}

}  // namespace rotset
