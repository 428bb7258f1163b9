#include "rotset/conley.hpp"

#include "rotset/analysis.hpp"
#include "rotset/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rotset {

std::string_view to_string(Mark m) {
    switch (m) {
        case Mark::left: return "L";
        case Mark::zero: return "0";
        case Mark::right: return "R";
    }
    return "?";
}

std::string MarkedSupport::key() const {
    std::string out = "{";
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i) out += ",";
        out += support[i];
    }
    out += "}|X=";
    out += to_string(x);
    out += "|Y=";
    out += to_string(y);
    return out;
}

Violations validate_decomposition(const Model& model) {
    Violations out;
    const auto& dec = model.decomposition;
    const int g = model.genus;
    auto fail = [&](std::string msg, std::string path, Severity sev = Severity::error) {
        out.push_back({std::move(msg), std::move(path), sev});
    };

    std::set<std::string, std::less<>> seen;
    std::size_t annuli = 0;
    for (std::size_t i = 0; i < dec.subsurfaces.size(); ++i) {
        const auto& s = dec.subsurfaces[i];
        const std::string path = "/decomposition/subsurfaces/" + std::to_string(i);
        if (!seen.insert(s.id).second) fail("duplicate subsurface id '" + s.id + "'", path + "/id");
        if (s.subspace.dim_ambient() != model.dim()) {
            fail("subspace dimension mismatch: subsurface '" + s.id + "'", path + "/subspace");
        }
        if (s.kind == SubsurfaceKind::annulus) {
            ++annuli;
            if (s.subspace.rank() > 1) {
                fail("annulus subspace rank exceeds 1: subsurface '" + s.id + "' has rank " +
                         std::to_string(s.subspace.rank()),
                     path + "/subspace");
            }
        }
    }
    const std::size_t max_surfaces = static_cast<std::size_t>(std::max(0, 5 * g - 5));
    const std::size_t max_annuli = static_cast<std::size_t>(std::max(0, 3 * g - 3));
    if (dec.subsurfaces.size() > max_surfaces) {
        fail("too many subsurfaces: " + std::to_string(dec.subsurfaces.size()) + " > 5g-5 = " +
                 std::to_string(max_surfaces),
             "/decomposition/subsurfaces");
    }
    if (annuli > max_annuli) {
        fail("too many annuli: " + std::to_string(annuli) + " > 3g-3 = " + std::to_string(max_annuli),
             "/decomposition/subsurfaces");
    }

    std::map<std::string, std::string> package_home;  // package -> subsurface
    std::map<std::string, std::string> home_package;  // subsurface -> package
    for (const auto& piece : model.pieces.pieces()) {
        const std::string path = "/decomposition/assignment/" + piece.id;
        auto it = dec.assignment.find(piece.id);
        if (piece.classification == PieceClass::trivial) {
            if (it != dec.assignment.end()) {
                fail("assignment of trivial piece ignored: '" + piece.id + "'", path, Severity::warning);
            }
            continue;
        }
        if (it == dec.assignment.end()) {
            fail("unassigned non-trivial piece: '" + piece.id + "'", path);
            continue;
        }
        const auto* sub = dec.find(it->second);
        if (!sub) {
            fail("assignment references unknown subsurface '" + it->second + "'", path);
            continue;
        }
        if (piece.classification == PieceClass::annular && sub->kind != SubsurfaceKind::annulus) {
            fail("annular piece on non-annulus subsurface: '" + piece.id + "' -> '" + sub->id + "'", path);
        }
        if (piece.classification == PieceClass::curved && sub->kind != SubsurfaceKind::curved_surface) {
            fail("curved piece on annulus subsurface: '" + piece.id + "' -> '" + sub->id + "'", path);
        }
        if (piece.classification == PieceClass::annular && piece.package) {
            auto [p, fresh] = package_home.emplace(*piece.package, sub->id);
            if (!fresh && p->second != sub->id) {
                fail("package split across subsurfaces: package '" + *piece.package + "' on '" + p->second +
                         "' and '" + sub->id + "'",
                     path);
            }
            auto [h, fresh_home] = home_package.emplace(sub->id, *piece.package);
            if (!fresh_home && h->second != *piece.package) {
                fail("packages share an annulus: '" + h->second + "' and '" + *piece.package + "' on '" +
                         sub->id + "'",
                     path);
            }
        }
    }
    for (const auto& [piece_id, sub_id] : dec.assignment) {
        if (!model.pieces.find(piece_id)) {
            fail("assignment references unknown piece '" + piece_id + "'", "/decomposition/assignment/" + piece_id);
        }
    }
    return out;
}

std::vector<MarkedSupport> chain_marked_support(const Chain& chain, const Model& model) {
    if (chain.pieces.empty()) throw ModelError("empty chain");
    std::set<std::string> support;
    for (const auto& id : chain.pieces) {
        if (model.pieces.at(id).classification == PieceClass::trivial) {
            throw ModelError("chain " + chain.to_string() + " contains trivial piece '" + id + "'");
        }
        support.insert(model.decomposition.of_piece(id).id);
    }
    const bool leaves_home = support.size() >= 2;

    auto marks_of = [](SideSet s) {
        std::vector<Mark> m;
        if (s.left) m.push_back(Mark::left);
        if (s.right) m.push_back(Mark::right);
        return m;
    };

    std::vector<Mark> xs{Mark::zero};
    const auto& first = model.pieces.at(chain.pieces.front());
    if (leaves_home && first.classification == PieceClass::annular &&
        first.fill_behavior == FillBehavior::repelling) {
        const auto marks = model.heteroclinic.source_marks(chain.pieces[0], chain.pieces[1]);
        if (marks.empty()) {
            throw ModelError("repelling annular piece '" + first.id + "' has no source mark toward '" +
                             chain.pieces[1] + "'");
        }
        xs = marks_of(marks);
    }
    std::vector<Mark> ys{Mark::zero};
    const auto& last = model.pieces.at(chain.pieces.back());
    if (leaves_home && last.classification == PieceClass::annular &&
        last.fill_behavior == FillBehavior::attracting) {
        const auto& before = chain.pieces[chain.pieces.size() - 2];
        const auto marks = model.heteroclinic.target_marks(before, last.id);
        if (marks.empty()) {
            throw ModelError("attracting annular piece '" + last.id + "' has no target mark from '" + before + "'");
        }
        ys = marks_of(marks);
    }

    std::vector<MarkedSupport> out;
    const std::vector<std::string> sorted(support.begin(), support.end());
    for (Mark x : xs) {
        for (Mark y : ys) out.push_back({sorted, x, y});
    }
    return out;
}

std::vector<Block> enumerate_blocks(const Model& model, const std::vector<ChainRotation>& chains) {
    std::map<MarkedSupport, std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < chains.size(); ++c) {
        for (auto& key : chain_marked_support(chains[c].chain, model)) groups[std::move(key)].push_back(c);
    }
    std::vector<Block> out;
    for (auto& [key, members] : groups) {
        std::vector<HomologyVector> pts{HomologyVector(model.dim())};
        for (std::size_t c : members) {
            const auto& vs = chains[c].polytope.vertices();
            pts.insert(pts.end(), vs.begin(), vs.end());
        }
        out.push_back({key, extreme_points(pts), members});
    }
    return out;
}

Computation compute(const Model& model, const EngineOptions& options) {
    Computation out;
    out.piece_sets = compute_piece_sets(model.pieces, options.cycle_cap);
    for (auto& chain : maximal_nontrivial_chains(model.heteroclinic, model.pieces, options.chain_cap)) {
        auto poly = chain_rotation_set(chain, out.piece_sets);
        out.chains.push_back({std::move(chain), std::move(poly)});
    }
    out.blocks = enumerate_blocks(model, out.chains);
    return out;
}

std::vector<Block> enumerate_blocks(const Model& model, const EngineOptions& options) {
    return compute(model, options).blocks;
}

Integer block_count_bound(int genus) {
    Integer bound = 4;
    const long exp = 5L * genus - 5;
    if (exp > 0) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exp));
        bound *= p;
    }
    return bound;
}

std::vector<RationalPolytope> coned_members(const Block& block, const std::vector<ChainRotation>& chains) {
    std::vector<RationalPolytope> out;
    for (std::size_t c : block.chains) {
        std::vector<HomologyVector> pts = chains.at(c).polytope.vertices();
        pts.push_back(HomologyVector(block.polytope.dim_ambient()));
        out.push_back(extreme_points(pts));
    }
    return out;
}

bool StructureReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* StructureReport::find(std::string_view name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

StructureReport verify_structure(const Model& model, const Computation& computation,
                                 const StructureOptions& options) {
    StructureReport report;
    const auto& blocks = computation.blocks;

    {
        CheckResult c{"block_count_bound", true, {}, {}};
        const Integer bound = block_count_bound(model.genus);
        c.passed = Integer(blocks.size()) <= bound;
        c.detail = std::to_string(blocks.size()) + " blocks <= " + bound.get_str();
        if (!c.passed) c.failures.push_back(c.detail);
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"variants_per_support", true, {}, {}};
        std::map<std::vector<std::string>, std::size_t> per_support;
        for (const auto& b : blocks) ++per_support[b.key.support];
        std::size_t worst = 0;
        for (const auto& [support, n] : per_support) {
            worst = std::max(worst, n);
            if (n > 4) {
                MarkedSupport probe{support, Mark::zero, Mark::zero};
                c.failures.push_back(probe.key() + " has " + std::to_string(n) + " marked variants");
            }
        }
        c.passed = c.failures.empty();
        c.detail = std::to_string(per_support.size()) + " supports, at most " + std::to_string(worst) +
                   " marked variants each";
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"support_span", true, {}, {}};
        for (const auto& b : blocks) {
            SubspaceBasis span(model.dim(), {});
            for (const auto& id : b.key.support) {
                const auto* sub = model.decomposition.find(id);
                if (!sub) throw ModelError("block support names unknown subsurface '" + id + "'");
                span = span.sum(sub->subspace);
            }
            for (const auto& v : b.polytope.vertices()) {
                if (!span.contains(v)) {
                    c.failures.push_back(b.key.key() + ": vertex " + v.to_string() + " outside span of support");
                }
            }
        }
        c.passed = c.failures.empty();
        c.detail = c.passed ? "every block lies in the homology of its support"
                            : std::to_string(c.failures.size()) + " vertices outside their support span";
        report.checks.push_back(std::move(c));
    }
    {
        CheckResult c{"chain_containment", true, {}, {}};
        std::vector<std::vector<std::size_t>> homes(computation.chains.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (std::size_t ch : blocks[b].chains) homes.at(ch).push_back(b);
        }
        for (std::size_t ch = 0; ch < computation.chains.size(); ++ch) {
            const auto& cr = computation.chains[ch];
            if (homes[ch].empty()) c.failures.push_back(cr.chain.to_string() + " belongs to no block");
            for (std::size_t b : homes[ch]) {
                for (const auto& v : cr.polytope.vertices()) {
                    if (!contains_point(blocks[b].polytope, v)) {
                        c.failures.push_back(cr.chain.to_string() + ": vertex " + v.to_string() + " outside " +
                                             blocks[b].key.key());
                    }
                }
            }
        }
        c.passed = c.failures.empty();
        c.detail = c.passed ? "every chain set lies in its blocks" : "chain sets escape their blocks";
        report.checks.push_back(std::move(c));
    }
    if (options.convex_density > 0) {
        CheckResult c{"block_convexity", true, {}, {}};
        for (const auto& b : blocks) {
            const auto members = coned_members(b, computation.chains);
            const auto probe = convexity_probe(members, options.convex_density);
            if (!probe.no_counterexample) {
                c.failures.push_back(b.key.key() + ": union of coned chain sets misses " + probe.witness->to_string());
            }
        }
        c.passed = c.failures.empty();
        c.detail = "grid density " + std::to_string(options.convex_density);
        report.checks.push_back(std::move(c));
    }
    return report;
}

}  // namespace rotset
