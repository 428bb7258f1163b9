#include "rotset/report.hpp"

#include "rotset/oracle.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace rotset {

std::string input_digest(const ModelDocument& doc) {
    const std::string bytes = to_json(doc).dump();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

CheckOptions CheckOptions::all() {
    CheckOptions o;
    o.star = o.bound = o.subspace = o.interior = true;
    o.convex_density = 4;
    o.oracle_samples = 100;
    return o;
}

bool CheckOutcome::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

Json gaps_json(const std::vector<ParamGap>& gaps) {
    Json out = Json::array();
    for (const auto& g : gaps) {
        out.push_back({{"lo", format_rational(g.lo)},
                       {"hi", format_rational(g.hi)},
                       {"lo_closed", g.lo_closed},
                       {"hi_closed", g.hi_closed}});
    }
    return out;
}

Json optional_vector(const std::optional<HomologyVector>& v) {
    return v ? to_json(*v) : Json(nullptr);
}

CheckResult star_check(const Computation& comp, Json& details) {
    CheckResult c{"star_shape", true, {}, {}};
    if (comp.chains.empty()) {
        c.detail = "no non-trivial chains";
        details["star_shape"] = {{"star_shaped", true}, {"witness", nullptr}, {"gaps", Json::array()}};
        return c;
    }
    std::vector<RationalPolytope> members;
    for (const auto& cr : comp.chains) members.push_back(cr.polytope);
    const auto r = star_shape_check(members);
    c.passed = r.star_shaped;
    c.detail = r.star_shaped ? "union of chain sets is star-shaped about 0"
                             : "segment from 0 to " + r.witness->to_string() + " leaves the union";
    if (!c.passed) c.failures.push_back(c.detail);
    details["star_shape"] = {{"star_shaped", r.star_shaped}, {"witness", optional_vector(r.witness)},
                             {"gaps", gaps_json(r.gaps)}};
    return c;
}

CheckResult interior_result(const ModelDocument& doc, const Computation& comp, Json& details) {
    CheckResult c{"interior", true, {}, {}};
    const auto r = interior_check(comp.blocks, doc.model.genus);
    c.passed = r.verdict != InteriorVerdict::violation;
    c.detail = std::string(to_string(r.verdict));
    Json stray = Json::array();
    for (const auto& v : r.stray) {
        stray.push_back(to_json(v));
        c.failures.push_back("vertex " + v.to_string() + " outside the full-dimensional block");
    }
    details["interior"] = {{"verdict", to_string(r.verdict)},
                           {"full_block", r.full_block ? Json(comp.blocks[*r.full_block].key.key()) : Json(nullptr)},
                           {"stray", std::move(stray)}};
    return c;
}

CheckResult sampling_check(const ModelDocument& doc, const Computation& comp, const CheckOptions& options,
                           Json& details) {
    CheckResult c{"chain_sampling", true, {}, {}};
    std::vector<std::vector<std::size_t>> homes(comp.chains.size());
    for (std::size_t b = 0; b < comp.blocks.size(); ++b) {
        for (std::size_t ch : comp.blocks[b].chains) homes[ch].push_back(b);
    }
    std::size_t tested = 0;
    for (std::size_t ch = 0; ch < comp.chains.size(); ++ch) {
        const auto& cr = comp.chains[ch];
        for (const auto& s : sample_chain_averages(cr.chain, doc.model.pieces, options.oracle_samples, options.seed + ch)) {
            ++tested;
            if (!contains_point(cr.polytope, s)) {
                c.failures.push_back(cr.chain.to_string() + ": sample " + s.to_string() + " outside chain set");
            }
            for (std::size_t b : homes[ch]) {
                if (!contains_point(comp.blocks[b].polytope, s)) {
                    c.failures.push_back(cr.chain.to_string() + ": sample " + s.to_string() + " outside " +
                                         comp.blocks[b].key.key());
                }
            }
        }
    }
    std::size_t compared = 0;
    for (const auto& piece : doc.model.pieces.pieces()) {
        const std::size_t n = piece.graph.size();
        if (n > 6) continue;
        ++compared;
        if (oracle_piece_set(piece, 2 * n) != comp.piece_sets.at(piece.id)) {
            c.failures.push_back("piece '" + piece.id + "': closed-walk hull differs from the simple-cycle hull");
        }
    }
    c.passed = c.failures.empty();
    c.detail = std::to_string(tested) + " samples, " + std::to_string(compared) + " pieces cross-checked";
    details["chain_sampling"] = {{"samples", tested}, {"seed", options.seed}, {"pieces_cross_checked", compared}};
    return c;
}

}  // namespace

CheckOutcome run_checks(const ModelDocument& doc, const Computation& computation, const CheckOptions& options) {
    CheckOutcome out;
    const auto structure = verify_structure(doc.model, computation, StructureOptions{options.convex_density});
    auto take = [&](std::string_view name) {
        if (const auto* c = structure.find(name)) out.checks.push_back(*c);
    };

    if (options.star) out.checks.push_back(star_check(computation, out.details));
    if (options.bound) {
        take("block_count_bound");
        take("variants_per_support");
        out.details["bound"] = {{"blocks", computation.blocks.size()},
                                {"bound", block_count_bound(doc.model.genus).get_str()}};
    }
    if (options.subspace) {
        take("support_span");
        take("chain_containment");
    }
    if (options.convex_density > 0) {
        take("block_convexity");
        std::vector<RationalPolytope> members;
        for (const auto& b : computation.blocks) members.push_back(b.polytope);
        const auto probe = convexity_probe(members, options.convex_density);
        out.details["union_convexity"] = {{"density", options.convex_density},
                                          {"no_counterexample", probe.no_counterexample},
                                          {"witness", optional_vector(probe.witness)},
                                          {"points_tested", probe.points_tested}};
    }
    if (options.interior) out.checks.push_back(interior_result(doc, computation, out.details));
    if (options.oracle_samples > 0) out.checks.push_back(sampling_check(doc, computation, options, out.details));
    return out;
}

Json result_document(const ModelDocument& doc, const Computation& computation,
                     const std::optional<CheckOutcome>& checks) {
    Json out;
    out["engine"] = {{"name", "rotset"}, {"version", kEngineVersion}};
    out["input_digest"] = "sha256:" + input_digest(doc);
    out["genus"] = doc.model.genus;

    Json pieces = Json::array();
    for (const auto& p : doc.model.pieces.pieces()) {
        pieces.push_back({{"id", p.id}, {"polytope", to_json(computation.piece_sets.at(p.id))}});
    }
    out["pieces"] = std::move(pieces);

    Json chains = Json::array();
    for (const auto& cr : computation.chains) {
        const auto cls = classify_chain(cr.polytope);
        Json jc{{"pieces", cr.chain.pieces},
                {"polytope", to_json(cr.polytope)},
                {"affine_dim", affine_dim(cr.polytope)},
                {"classification", to_string(cls.kind)}};
        if (cls.direction) jc["direction"] = to_json(*cls.direction);
        chains.push_back(std::move(jc));
    }
    out["chains"] = std::move(chains);

    Json blocks = Json::array();
    for (const auto& b : computation.blocks) {
        blocks.push_back({{"key", b.key.key()},
                          {"support", b.key.support},
                          {"x", to_string(b.key.x)},
                          {"y", to_string(b.key.y)},
                          {"polytope", to_json(b.polytope)},
                          {"affine_dim", affine_dim(b.polytope)},
                          {"chains", b.chains}});
    }
    out["blocks"] = std::move(blocks);

    Json warnings = Json::array();
    for (const auto& w : doc.warnings) warnings.push_back({{"message", w.message}, {"path", w.path}});
    out["warnings"] = std::move(warnings);

    if (checks) {
        Json cs = Json::array();
        for (const auto& c : checks->checks) {
            cs.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"failures", c.failures}});
        }
        out["checks"] = std::move(cs);
        out["details"] = checks->details;
        out["passed"] = checks->passed();
    }
    return out;
}

std::string blocks_csv(const Computation& computation) {
    std::string out;
    for (const auto& b : computation.blocks) {
        for (const auto& v : b.polytope.vertices()) {
            out += '"' + b.key.key() + '"';
            for (const auto& c : v.coords()) out += "," + format_rational(c);
            out += '\n';
        }
    }
    return out;
}

}  // namespace rotset
