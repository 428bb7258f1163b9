#include "rotset/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace rotset {

std::string_view to_string(LoadErrorKind k) {
    switch (k) {
        case LoadErrorKind::parse: return "parse";
        case LoadErrorKind::reference: return "reference";
        case LoadErrorKind::invariant: return "invariant";
    }
    return "?";
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, const std::string& path) {
    throw LoadError(LoadErrorKind::parse, what + " at " + (path.empty() ? "/" : path), path);
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) parse_fail("expected an object", path);
    auto it = obj.find(key);
    if (it == obj.end()) parse_fail(std::string("missing field '") + key + "'", path);
    return *it;
}

const Json& array_at(const Json& obj, const char* key, const std::string& path) {
    const Json& a = member(obj, key, path);
    if (!a.is_array()) parse_fail("expected an array", path + "/" + key);
    return a;
}

std::string string_at(const Json& j, const std::string& path) {
    if (!j.is_string()) parse_fail("expected a string", path);
    return j.get<std::string>();
}

Rational rational_at(const Json& j, const std::string& path) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
        return Rational(Integer(std::to_string(j.get<std::int64_t>())));
    }
    if (!j.is_string()) parse_fail("expected a rational string \"p/q\"", path);
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        parse_fail(e.what(), path);
    }
}

HomologyVector vector_at(const Json& j, const std::string& path) {
    if (!j.is_array()) parse_fail("expected an array of rationals", path);
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(rational_at(j[i], path + "/" + std::to_string(i)));
    return HomologyVector(std::move(coords));
}

SideSet marks_at(const Json& j, const std::string& path) {
    SideSet s;
    if (j.is_null()) return s;
    if (!j.is_array()) parse_fail("expected an array of \"L\"/\"R\"", path);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto m = string_at(j[i], path + "/" + std::to_string(i));
        if (m == "L") {
            s.left = true;
        } else if (m == "R") {
            s.right = true;
        } else {
            parse_fail("unknown mark '" + m + "'", path + "/" + std::to_string(i));
        }
    }
    return s;
}

BasicPieceModel piece_at(const Json& j, const std::string& path) {
    BasicPieceModel piece;
    piece.id = string_at(member(j, "id", path), path + "/id");
    const auto cls = string_at(member(j, "classification", path), path + "/classification");
    auto parsed = parse_piece_class(cls);
    if (!parsed) parse_fail("unknown classification '" + cls + "'", path + "/classification");
    piece.classification = *parsed;
    if (auto it = j.find("package"); it != j.end() && !it->is_null()) {
        piece.package = string_at(*it, path + "/package");
    }
    if (auto it = j.find("fill_behavior"); it != j.end() && !it->is_null()) {
        const auto f = string_at(*it, path + "/fill_behavior");
        auto fb = parse_fill_behavior(f);
        if (!fb) parse_fail("unknown fill_behavior '" + f + "'", path + "/fill_behavior");
        piece.fill_behavior = *fb;
    }

    const std::string gpath = path + "/graph";
    const Json& graph = member(j, "graph", path);
    const Json& nodes = array_at(graph, "nodes", gpath);
    std::vector<MarkovNode> ns;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::string npath = gpath + "/nodes/" + std::to_string(i);
        ns.push_back({string_at(member(nodes[i], "id", npath), npath + "/id"),
                      vector_at(member(nodes[i], "displacement", npath), npath + "/displacement")});
    }
    const Json& edges = array_at(graph, "edges", gpath);
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string epath = gpath + "/edges/" + std::to_string(i);
        if (!edges[i].is_array() || edges[i].size() != 2) parse_fail("expected a pair [from, to]", epath);
        es.emplace_back(string_at(edges[i][0], epath + "/0"), string_at(edges[i][1], epath + "/1"));
    }
    try {
        piece.graph = MarkovGraph(std::move(ns), es);
    } catch (const ModelError& e) {
        throw LoadError(LoadErrorKind::reference, e.what(), gpath);
    }
    return piece;
}

}  // namespace

ModelDocument model_from_json(const Json& doc) {
    ModelDocument out;
    Model& m = out.model;
    const Json& genus = member(doc, "genus", "");
    if (!genus.is_number_integer()) parse_fail("genus must be an integer", "/genus");
    const auto g = genus.get<std::int64_t>();
    if (g < 0 || g > 64) throw LoadError(LoadErrorKind::invariant, "genus out of range", "/genus");
    m.genus = static_cast<int>(g);

    const Json& pieces = array_at(doc, "pieces", "");
    std::vector<BasicPieceModel> ps;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        ps.push_back(piece_at(pieces[i], "/pieces/" + std::to_string(i)));
        ids.push_back(ps.back().id);
    }
    try {
        m.pieces = PieceTable(std::move(ps));
    } catch (const ModelError& e) {
        throw LoadError(LoadErrorKind::reference, e.what(), "/pieces");
    }

    std::vector<HeteroclinicEdge> edges;
    if (auto it = doc.find("heteroclinic"); it != doc.end()) {
        const Json& hedges = array_at(*it, "edges", "/heteroclinic");
        for (std::size_t i = 0; i < hedges.size(); ++i) {
            const std::string path = "/heteroclinic/edges/" + std::to_string(i);
            const Json& e = hedges[i];
            HeteroclinicEdge edge;
            edge.from = string_at(member(e, "from", path), path + "/from");
            edge.to = string_at(member(e, "to", path), path + "/to");
            if (auto s = e.find("source_marks"); s != e.end()) edge.source_marks = marks_at(*s, path + "/source_marks");
            if (auto t = e.find("target_marks"); t != e.end()) edge.target_marks = marks_at(*t, path + "/target_marks");
            if (!m.pieces.find(edge.from)) {
                throw LoadError(LoadErrorKind::reference, "unknown piece '" + edge.from + "'", path + "/from");
            }
            if (!m.pieces.find(edge.to)) {
                throw LoadError(LoadErrorKind::reference, "unknown piece '" + edge.to + "'", path + "/to");
            }
            edges.push_back(std::move(edge));
        }
    }
    m.heteroclinic = HeteroclinicPoset(ids, std::move(edges));

    const std::string dpath = "/decomposition";
    const Json& dec = member(doc, "decomposition", "");
    const Json& subs = array_at(dec, "subsurfaces", dpath);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        const std::string path = dpath + "/subsurfaces/" + std::to_string(i);
        Subsurface s;
        s.id = string_at(member(subs[i], "id", path), path + "/id");
        const auto kind = string_at(member(subs[i], "kind", path), path + "/kind");
        auto k = parse_subsurface_kind(kind);
        if (!k) parse_fail("unknown subsurface kind '" + kind + "'", path + "/kind");
        s.kind = *k;
        const Json& basis = array_at(subs[i], "subspace", path);
        std::vector<HomologyVector> vs;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::string bpath = path + "/subspace/" + std::to_string(b);
            vs.push_back(vector_at(basis[b], bpath));
            if (vs.back().dim() != m.dim()) {
                throw LoadError(LoadErrorKind::invariant,
                                "dimension mismatch: expected " + std::to_string(m.dim()) + " coordinates, got " +
                                    std::to_string(vs.back().dim()),
                                bpath);
            }
        }
        try {
            s.subspace = SubspaceBasis(m.dim(), std::move(vs));
        } catch (const ModelError& e) {
            throw LoadError(LoadErrorKind::invariant, e.what(), path + "/subspace");
        }
        m.decomposition.subsurfaces.push_back(std::move(s));
    }
    const Json& assignment = member(dec, "assignment", dpath);
    if (!assignment.is_object()) parse_fail("expected an object", dpath + "/assignment");
    for (const auto& [piece, sub] : assignment.items()) {
        const std::string path = dpath + "/assignment/" + piece;
        const auto sid = string_at(sub, path);
        if (!m.pieces.find(piece)) throw LoadError(LoadErrorKind::reference, "unknown piece '" + piece + "'", path);
        if (!m.decomposition.find(sid)) {
            throw LoadError(LoadErrorKind::reference, "unknown subsurface '" + sid + "'", path);
        }
        m.decomposition.assignment.emplace(piece, sid);
    }

    if (auto it = doc.find("metadata"); it != doc.end()) out.metadata = *it;
    return out;
}

void validate_document(ModelDocument& doc, const EngineOptions& options) {
    Violations errors;
    doc.warnings.clear();
    for (auto& v : validate_model(doc.model, options)) {
        (v.severity == Severity::error ? errors : doc.warnings).push_back(std::move(v));
    }
    if (!errors.empty()) {
        const auto first = errors.front();
        throw LoadError(LoadErrorKind::invariant, first.message, first.path, std::move(errors));
    }
}

ModelDocument load_model_text(std::string_view text, const EngineOptions& options) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw LoadError(LoadErrorKind::parse, e.what(), "");
    }
    auto out = model_from_json(doc);
    validate_document(out, options);
    return out;
}

ModelDocument load_model_file(const std::filesystem::path& path, const EngineOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError(LoadErrorKind::parse, "cannot read " + path.string(), "");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_model_text(buf.str(), options);
}

Json to_json(const HomologyVector& v) {
    Json out = Json::array();
    for (const auto& c : v.coords()) out.push_back(format_rational(c));
    return out;
}

Json to_json(const RationalPolytope& p) {
    Json out = Json::array();
    for (const auto& v : p.vertices()) out.push_back(to_json(v));
    return out;
}

namespace {

Json marks_json(SideSet s) {
    Json out = Json::array();
    if (s.left) out.push_back("L");
    if (s.right) out.push_back("R");
    return out;
}

}  // namespace

Json to_json(const ModelDocument& doc) {
    const Model& m = doc.model;
    Json out;
    out["genus"] = m.genus;
    out["pieces"] = Json::array();
    for (const auto& p : m.pieces.pieces()) {
        Json jp;
        jp["id"] = p.id;
        jp["classification"] = std::string(to_string(p.classification));
        if (p.package) jp["package"] = *p.package;
        if (p.fill_behavior) jp["fill_behavior"] = std::string(to_string(*p.fill_behavior));
        Json nodes = Json::array();
        for (const auto& n : p.graph.nodes()) nodes.push_back({{"id", n.id}, {"displacement", to_json(n.displacement)}});
        Json edges = Json::array();
        for (const auto& [a, b] : p.graph.edges()) {
            edges.push_back(Json::array({p.graph.nodes()[a].id, p.graph.nodes()[b].id}));
        }
        jp["graph"] = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
        out["pieces"].push_back(std::move(jp));
    }
    Json hedges = Json::array();
    for (const auto& e : m.heteroclinic.edges()) {
        Json je{{"from", e.from}, {"to", e.to}};
        if (!e.source_marks.empty()) je["source_marks"] = marks_json(e.source_marks);
        if (!e.target_marks.empty()) je["target_marks"] = marks_json(e.target_marks);
        hedges.push_back(std::move(je));
    }
    out["heteroclinic"] = {{"edges", std::move(hedges)}};
    Json subs = Json::array();
    for (const auto& s : m.decomposition.subsurfaces) {
        Json basis = Json::array();
        for (const auto& v : s.subspace.basis()) basis.push_back(to_json(v));
        subs.push_back({{"id", s.id}, {"kind", std::string(to_string(s.kind))}, {"subspace", std::move(basis)}});
    }
    Json assignment = Json::object();
    for (const auto& [piece, sub] : m.decomposition.assignment) assignment[piece] = sub;
    out["decomposition"] = {{"subsurfaces", std::move(subs)}, {"assignment", std::move(assignment)}};
    if (!doc.metadata.empty()) out["metadata"] = doc.metadata;
    return out;
}

}  // namespace rotset
