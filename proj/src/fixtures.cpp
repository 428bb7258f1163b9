#include "rotset/fixtures.hpp"

#include <charconv>
#include <stdexcept>

namespace rotset {

namespace {

HomologyVector vec(std::size_t dim, std::initializer_list<std::pair<std::size_t, long>> entries) {
    HomologyVector v(dim);
    for (auto [axis, value] : entries) v[axis] = value;
    return v;
}

BasicPieceModel horseshoe(std::string id, PieceClass cls, const std::vector<HomologyVector>& displacements) {
    BasicPieceModel p;
    p.id = std::move(id);
    p.classification = cls;
    p.graph = complete_graph(displacements);
    return p;
}

BasicPieceModel annular(std::string id, FillBehavior fill, const std::vector<HomologyVector>& displacements) {
    auto p = horseshoe(id, PieceClass::annular, displacements);
    p.package = "pkg_" + id;
    p.fill_behavior = fill;
    return p;
}

Subsurface subsurface(std::string id, SubsurfaceKind kind, std::size_t dim, std::vector<HomologyVector> basis) {
    return {std::move(id), kind, SubspaceBasis(dim, std::move(basis))};
}

std::vector<std::string> ids_of(const std::vector<BasicPieceModel>& pieces) {
    std::vector<std::string> ids;
    for (const auto& p : pieces) ids.push_back(p.id);
    return ids;
}

// Two triangles {0, e1, e1+e2} and {0, e3, e3+e4} on disjoint curved subsurfaces.
ModelDocument two_triangles(std::vector<HeteroclinicEdge> edges) {
    const std::size_t d = 4;
    std::vector<BasicPieceModel> pieces{
        horseshoe("L1", PieceClass::curved, {vec(d, {}), vec(d, {{0, 1}}), vec(d, {{0, 1}, {1, 1}})}),
        horseshoe("L2", PieceClass::curved, {vec(d, {}), vec(d, {{2, 1}}), vec(d, {{2, 1}, {3, 1}})}),
    };
    ModelDocument doc;
    doc.model.genus = 2;
    doc.model.heteroclinic = HeteroclinicPoset(ids_of(pieces), std::move(edges));
    doc.model.pieces = PieceTable(std::move(pieces));
    doc.model.decomposition.subsurfaces = {
        subsurface("T", SubsurfaceKind::curved_surface, d, {vec(d, {{0, 1}}), vec(d, {{1, 1}})}),
        subsurface("T2", SubsurfaceKind::curved_surface, d, {vec(d, {{2, 1}}), vec(d, {{3, 1}})}),
    };
    doc.model.decomposition.assignment = {{"L1", "T"}, {"L2", "T2"}};
    return doc;
}

}  // namespace

std::vector<std::string> fixture_names() {
    return {"genus2_nonconvex", "genus2_full", "genus2_blocks", "exp_family(k)"};
}

ModelDocument genus2_nonconvex() {
    auto doc = two_triangles({});
    doc.metadata = {{"fixture", "genus2_nonconvex"},
                    {"description", "two unrelated curved pieces with triangle rotation sets in complementary planes"}};
    return doc;
}

ModelDocument genus2_full() {
    auto doc = two_triangles({{"L1", "L2", {}, {}}});
    doc.metadata = {{"fixture", "genus2_full"},
                    {"description", "the two triangle pieces joined by one heteroclinic connection"}};
    return doc;
}

ModelDocument genus2_full_with_trivial() {
    auto doc = two_triangles({});
    const std::size_t d = 4;
    auto pieces = doc.model.pieces.pieces();
    pieces.push_back(horseshoe("t", PieceClass::trivial, {vec(d, {})}));
    doc.model.heteroclinic = HeteroclinicPoset(ids_of(pieces), {{"L1", "t", {}, {}}, {"t", "L2", {}, {}}});
    doc.model.pieces = PieceTable(std::move(pieces));
    doc.metadata = {{"fixture", "genus2_full_with_trivial"},
                    {"description", "genus2_full with a fixed point of zero rotation between the two pieces"}};
    return doc;
}

ModelDocument genus2_blocks() {
    const std::size_t d = 4;
    const auto e1 = vec(d, {{0, 1}});
    const auto e2 = vec(d, {{1, 1}});
    const auto diag = vec(d, {{0, 1}, {1, 1}});
    std::vector<BasicPieceModel> pieces{
        horseshoe("C1", PieceClass::curved, {vec(d, {}), vec(d, {{0, 2}}), vec(d, {{1, 2}})}),
        horseshoe("C2", PieceClass::curved, {vec(d, {}), vec(d, {{0, 2}, {1, 1}}), vec(d, {{0, 1}, {1, 2}})}),
        annular("IA", FillBehavior::attracting, {vec(d, {}), e1}),
        annular("IB", FillBehavior::attracting, {vec(d, {}), e2}),
        annular("IC", FillBehavior::attracting, {vec(d, {{0, -1}, {1, -1}}), diag}),
    };

    // The two curved sets must share interior points of the plane V = <e1, e2>.
    const auto witness = diag;
    for (const auto& name : {"C1", "C2"}) {
        for (const auto& p : pieces) {
            if (p.id == name && !contains_point(piece_rotation_set(p), witness)) {
                throw std::logic_error(std::string("genus2_blocks: overlap witness outside ") + name);
            }
        }
    }

    ModelDocument doc;
    doc.model.genus = 2;
    doc.model.heteroclinic = HeteroclinicPoset(ids_of(pieces), {});
    doc.model.pieces = PieceTable(std::move(pieces));
    doc.model.decomposition.subsurfaces = {
        subsurface("S1", SubsurfaceKind::curved_surface, d, {e1, e2}),
        subsurface("S2", SubsurfaceKind::curved_surface, d, {e1, e2}),
        subsurface("A", SubsurfaceKind::annulus, d, {e1}),
        subsurface("B", SubsurfaceKind::annulus, d, {e2}),
        subsurface("C", SubsurfaceKind::annulus, d, {diag}),
    };
    doc.model.decomposition.assignment = {{"C1", "S1"}, {"C2", "S2"}, {"IA", "A"}, {"IB", "B"}, {"IC", "C"}};
    doc.metadata = {{"fixture", "genus2_blocks"},
                    {"description", "two overlapping curved sets in one plane plus three annular intervals"},
                    {"coordinates", "derived"},
                    {"overlap_witness", to_json(witness)}};
    return doc;
}

ModelDocument exp_family(int k) {
    if (k < 1) throw std::invalid_argument("exp_family: k must be at least 1");
    const std::size_t d = static_cast<std::size_t>(4 * k);
    std::vector<BasicPieceModel> pieces;
    std::vector<HeteroclinicEdge> edges;
    ModelDocument doc;
    auto& dec = doc.model.decomposition;
    const SideSet right{false, true};
    const SideSet left{true, false};
    for (int i = 1; i <= k; ++i) {
        const std::string level = std::to_string(i);
        const std::string star = "L" + level + "_s";
        for (int j = 0; j < 2; ++j) {
            const std::string id = "L" + level + "_" + std::to_string(j);
            const auto e = HomologyVector::unit(d, static_cast<std::size_t>(2 * (i - 1) + j));
            pieces.push_back(annular(id, FillBehavior::neither, {HomologyVector(d), e}));
            dec.subsurfaces.push_back(subsurface("A" + level + "_" + std::to_string(j), SubsurfaceKind::annulus, d, {e}));
            dec.assignment[id] = dec.subsurfaces.back().id;
            edges.push_back({id, star, right, left});
            if (i > 1) edges.push_back({"L" + std::to_string(i - 1) + "_s", id, right, left});
        }
        pieces.push_back(annular(star, FillBehavior::neither, {HomologyVector(d)}));
        dec.subsurfaces.push_back(subsurface("A" + level + "_s", SubsurfaceKind::annulus, d, {}));
        dec.assignment[star] = dec.subsurfaces.back().id;
    }
    doc.model.genus = 2 * k;
    doc.model.heteroclinic = HeteroclinicPoset(ids_of(pieces), std::move(edges));
    doc.model.pieces = PieceTable(std::move(pieces));
    doc.metadata = {{"fixture", "exp_family(" + std::to_string(k) + ")"},
                    {"description", "one choice of two annular pieces per level, levels joined through a zero-rotation annulus"},
                    {"k", k}};
    return doc;
}

std::optional<ModelDocument> make_fixture(std::string_view name) {
    if (name == "genus2_nonconvex") return genus2_nonconvex();
    if (name == "genus2_full") return genus2_full();
    if (name == "genus2_blocks") return genus2_blocks();
    constexpr std::string_view prefix = "exp_family(";
    if (name.starts_with(prefix) && name.ends_with(")")) {
        const auto digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        int k = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc{} && end == digits.data() + digits.size() && k >= 1 && k <= 16) return exp_family(k);
    }
    return std::nullopt;
}

}  // namespace rotset
