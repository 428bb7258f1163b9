#include "rotset/cli.hpp"
#include "rotset/fixtures.hpp"
#include "rotset/report.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace rotset;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "rotset");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t hasse_edges(const HeteroclinicPoset& p) {
    const auto& ids = p.piece_ids();
    std::size_t n = 0;
    for (const auto& a : ids) {
        for (const auto& b : ids) {
            if (!p.precedes(a, b)) continue;
            const bool covered = std::none_of(ids.begin(), ids.end(), [&](const auto& c) {
                return p.precedes(a, c) && p.precedes(c, b);
            });
            n += covered;
        }
    }
    return n;
}

Json fixture_json(std::string_view name) { return to_json(*make_fixture(name)); }

LoadError load_error(const Json& doc) {
    try {
        load_model_text(doc.dump());
    } catch (const LoadError& e) {
        return e;
    }
    FAIL("document was accepted");
    throw;
}

}  // namespace

TEST_CASE("fixture catalog") {
    CHECK(fixture_names() == std::vector<std::string>{"genus2_nonconvex", "genus2_full", "genus2_blocks", "exp_family(k)"});
    CHECK_FALSE(make_fixture("genus3_none"));
    CHECK_FALSE(make_fixture("exp_family(0)"));
    CHECK_FALSE(make_fixture("exp_family(x)"));

    const auto exp3 = *make_fixture("exp_family(3)");
    CHECK(exp3.model.pieces.size() == 9);
    CHECK(hasse_edges(exp3.model.heteroclinic) == 10);

    const auto nonconvex = load_model_text(fixture_json("genus2_nonconvex").dump());
    CHECK(nonconvex.model.pieces.size() == 2);
    CHECK(nonconvex.model.heteroclinic.edges().empty());

    const auto full = compute(genus2_full().model);
    REQUIRE(full.blocks.size() == 1);
    CHECK(affine_dim(full.blocks[0].polytope) == 4);
}

TEST_CASE("every fixture round-trips and validates") {
    for (const auto* name : {"genus2_nonconvex", "genus2_full", "genus2_blocks", "exp_family(1)", "exp_family(2)", "exp_family(3)"}) {
        CAPTURE(name);
        const Json j = fixture_json(name);
        const auto loaded = load_model_text(j.dump());
        CHECK(to_json(loaded) == j);
        CHECK(load_model_text(to_json(loaded).dump(2)).model.pieces.size() == loaded.model.pieces.size());
    }
}

TEST_CASE("load errors carry kind and location") {
    SUBCASE("vector of the wrong length") {
        Json j = fixture_json("genus2_nonconvex");
        j["pieces"][1]["graph"]["nodes"][2]["displacement"].push_back("0");
        const auto e = load_error(j);
        CHECK(e.kind() == LoadErrorKind::invariant);
        CHECK(e.path() == "/pieces/1/graph/nodes/2/displacement");
    }
    SUBCASE("heteroclinic cycle") {
        Json j = fixture_json("genus2_nonconvex");
        j["heteroclinic"]["edges"] = Json::array({Json{{"from", "L1"}, {"to", "L2"}}, Json{{"from", "L2"}, {"to", "L1"}}});
        const auto e = load_error(j);
        CHECK(e.kind() == LoadErrorKind::invariant);
        CHECK(std::string(e.what()).find("L1 -> L2 -> L1") != std::string::npos);
    }
    SUBCASE("float rationals are rejected") {
        Json j = fixture_json("genus2_nonconvex");
        j["pieces"][0]["graph"]["nodes"][1]["displacement"][0] = 1.0;
        const auto e = load_error(j);
        CHECK(e.kind() == LoadErrorKind::parse);
        CHECK(e.path() == "/pieces/0/graph/nodes/1/displacement/0");
    }
    SUBCASE("unknown reference") {
        Json j = fixture_json("genus2_nonconvex");
        j["decomposition"]["assignment"]["L1"] = "nowhere";
        const auto e = load_error(j);
        CHECK(e.kind() == LoadErrorKind::reference);
        CHECK(e.path() == "/decomposition/assignment/L1");
    }
    SUBCASE("malformed text") {
        try {
            load_model_text("{\"genus\": ");
            FAIL("accepted");
        } catch (const LoadError& e) {
            CHECK(e.kind() == LoadErrorKind::parse);
        }
    }
    SUBCASE("integers are accepted for coordinates") {
        Json j = fixture_json("genus2_nonconvex");
        j["pieces"][0]["graph"]["nodes"][1]["displacement"] = Json::array({1, 0, 0, 0});
        CHECK(load_model_text(j.dump()).model.pieces.size() == 2);
    }
}

TEST_CASE("cli exit codes and reports") {
    auto r = cli({"check", "genus2_nonconvex", "--star", "--bound"});
    CHECK(r.code == exit_ok);
    auto doc = Json::parse(r.out);
    CHECK(doc["details"]["star_shape"]["star_shaped"] == true);
    CHECK(doc["details"]["bound"]["blocks"] == 2);
    CHECK(doc["details"]["bound"]["bound"] == "128");

    r = cli({"check", "genus2_nonconvex", "--interior"});
    CHECK(r.code == exit_ok);
    CHECK(Json::parse(r.out)["details"]["interior"]["verdict"] == "not-applicable");

    CHECK(cli({"compute", "missing.json"}).code == exit_invalid_input);
    CHECK(cli({"frobnicate"}).code == exit_invalid_input);
    CHECK(cli({"--help"}).code == exit_ok);
    CHECK(cli({"validate", "exp_family(2)"}).code == exit_ok);
    CHECK(cli({"--cycle-cap", "2", "compute", "genus2_full"}).code == exit_resource_cap);

    const auto list = Json::parse(cli({"list-fixtures"}).out);
    CHECK(list.size() == 4);
}

TEST_CASE("cli checks every fixture") {
    for (const auto* name : {"genus2_nonconvex", "genus2_full", "genus2_blocks", "exp_family(1)", "exp_family(2)"}) {
        CAPTURE(name);
        const auto r = cli({"check", name, "--star", "--bound", "--subspace", "--interior", "--convex-density", "4"});
        CHECK(r.code == exit_ok);
        CHECK(cli({"validate", name}).code == exit_ok);
    }
}

TEST_CASE("cli failing check exits 1") {
    auto doc = genus2_full();
    doc.model.decomposition.subsurfaces[0].subspace = SubspaceBasis(4, {HomologyVector::unit(4, 0)});
    const auto path = std::filesystem::temp_directory_path() / "rotset_bad_span.json";
    std::ofstream(path) << to_json(doc).dump();
    const auto r = cli({"check", path.string(), "--subspace"});
    CHECK(r.code == exit_checks_failed);
    CHECK(r.err.find("FAIL support_span") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("compute output is reproducible and written where asked") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "rotset_a.json";
    const auto b = dir / "rotset_b.json";
    const auto csv = dir / "rotset_blocks.csv";
    CHECK(cli({"compute", "genus2_blocks", "--out", a.string()}).code == exit_ok);
    CHECK(cli({"--csv", csv.string(), "compute", "genus2_blocks", "--out", b.string()}).code == exit_ok);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    CHECK(slurp(a) == slurp(b));
    const auto result = Json::parse(slurp(a));
    CHECK(result["engine"]["version"] == kEngineVersion);
    CHECK(result["input_digest"].get<std::string>().size() == 7 + 64);
    CHECK(result["blocks"].size() == 5);
    const auto rows = slurp(csv);
    CHECK(rows.starts_with("\"{A}|X=0|Y=0\",0,0,0,0\n"));

    const auto fixture_file = dir / "rotset_fixture.json";
    CHECK(cli({"fixture", "genus2_blocks", "--write", fixture_file.string()}).code == exit_ok);
    CHECK(cli({"compute", fixture_file.string()}).out == cli({"compute", "genus2_blocks"}).out);
    for (const auto& p : {a, b, csv, fixture_file}) std::filesystem::remove(p);
}
