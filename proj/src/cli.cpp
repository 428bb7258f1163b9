#include "rotset/cli.hpp"

#include "rotset/fixtures.hpp"
#include "rotset/report.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>

namespace rotset {

namespace {

struct Args {
    std::string model;
    std::string out_file;
    std::string csv_file;
    std::string fixture;
    std::string write_file;
    std::size_t cycle_cap = kDefaultCycleCap;
    CheckOptions check;
};

// A path that exists is read as a file; otherwise the name may be a fixture.
ModelDocument resolve_model(const std::string& arg, const EngineOptions& options) {
    if (std::filesystem::exists(arg)) return load_model_file(arg, options);
    if (auto doc = make_fixture(arg)) {
        validate_document(*doc, options);
        return std::move(*doc);
    }
    throw LoadError(LoadErrorKind::parse, "no such file or fixture: " + arg, "");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw LoadError(LoadErrorKind::parse, "cannot write " + path, "");
    f << text;
}

void report_warnings(const ModelDocument& doc, std::ostream& err) {
    for (const auto& w : doc.warnings) err << "warning: " << w.message << " (at " << w.path << ")\n";
}

Json violations_json(const LoadError& e) {
    Json vs = Json::array();
    if (e.violations().empty()) {
        vs.push_back({{"message", e.what()}, {"path", e.path()}});
    } else {
        for (const auto& v : e.violations()) vs.push_back({{"message", v.message}, {"path", v.path}});
    }
    return {{"valid", false}, {"error_kind", to_string(e.kind())}, {"violations", std::move(vs)}};
}

int cmd_validate(const Args& a, const EngineOptions& eo, std::ostream& out, std::ostream& err) {
    const auto doc = resolve_model(a.model, eo);
    report_warnings(doc, err);
    Json warnings = Json::array();
    for (const auto& w : doc.warnings) warnings.push_back({{"message", w.message}, {"path", w.path}});
    out << Json{{"valid", true}, {"warnings", std::move(warnings)}}.dump(2) << '\n';
    err << "valid: genus " << doc.model.genus << ", " << doc.model.pieces.size() << " pieces, "
        << doc.model.heteroclinic.edges().size() << " relation edges\n";
    return exit_ok;
}

int cmd_compute(const Args& a, const EngineOptions& eo, std::ostream& out, std::ostream& err) {
    const auto doc = resolve_model(a.model, eo);
    report_warnings(doc, err);
    const auto comp = compute(doc.model, eo);
    const std::string json = result_document(doc, comp).dump(2) + "\n";
    if (a.out_file.empty()) {
        out << json;
    } else {
        write_file(a.out_file, json);
    }
    if (!a.csv_file.empty()) write_file(a.csv_file, blocks_csv(comp));
    err << comp.chains.size() << " maximal chains, " << comp.blocks.size() << " blocks\n";
    return exit_ok;
}

int cmd_check(const Args& a, const EngineOptions& eo, std::ostream& out, std::ostream& err) {
    const auto doc = resolve_model(a.model, eo);
    report_warnings(doc, err);
    const auto comp = compute(doc.model, eo);
    const CheckOptions opts = a.check.any() ? a.check : CheckOptions::all();
    const auto outcome = run_checks(doc, comp, opts);
    out << result_document(doc, comp, outcome).dump(2) << '\n';
    if (!a.csv_file.empty()) write_file(a.csv_file, blocks_csv(comp));
    for (const auto& c : outcome.checks) {
        err << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        for (const auto& f : c.failures) err << "  " << f << '\n';
    }
    return outcome.passed() ? exit_ok : exit_checks_failed;
}

int cmd_fixture(const Args& a, std::ostream& out, std::ostream& err) {
    auto doc = make_fixture(a.fixture);
    if (!doc) {
        err << "unknown fixture '" << a.fixture << "'\n";
        return exit_invalid_input;
    }
    const std::string json = to_json(*doc).dump(2) + "\n";
    if (a.write_file.empty()) {
        out << json;
    } else {
        write_file(a.write_file, json);
        err << "wrote " << a.write_file << '\n';
    }
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rotation sets of surface maps from symbolic models", "rotset"};
    app.require_subcommand(1);
    Args a;
    app.add_option("--cycle-cap", a.cycle_cap, "Abort when a piece has more simple cycles");
    app.add_option("--csv", a.csv_file, "Also write block vertices as CSV");

    auto* validate = app.add_subcommand("validate", "Check a model's invariants");
    validate->add_option("model", a.model, "Model file or fixture name")->required();

    auto* comp = app.add_subcommand("compute", "Compute maximal chains and blocks");
    comp->add_option("model", a.model, "Model file or fixture name")->required();
    comp->add_option("--out", a.out_file, "Write the result document here instead of stdout");

    auto* check = app.add_subcommand("check", "Compute and verify structural properties");
    check->add_option("model", a.model, "Model file or fixture name")->required();
    check->add_flag("--star", a.check.star, "Star shape about 0");
    check->add_flag("--bound", a.check.bound, "Block count bound and marked variants per support");
    check->add_flag("--subspace", a.check.subspace, "Blocks in their support span, chains in their blocks");
    check->add_option("--convex-density", a.check.convex_density, "Grid density of the convexity probes")
        ->check(CLI::NonNegativeNumber);
    check->add_flag("--interior", a.check.interior, "A full-dimensional block must contain the others");
    check->add_option("--oracle-samples", a.check.oracle_samples, "Sampled chain averages per chain");
    check->add_option("--seed", a.check.seed, "Sampling seed");

    auto* fixture = app.add_subcommand("fixture", "Print an embedded model");
    fixture->add_option("name", a.fixture, "Fixture name")->required();
    fixture->add_option("--write", a.write_file, "Write to this file instead of stdout");

    auto* list = app.add_subcommand("list-fixtures", "List embedded models");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_invalid_input;
    }

    const EngineOptions eo{a.cycle_cap, kDefaultChainCap};
    try {
        if (*validate) return cmd_validate(a, eo, out, err);
        if (*comp) return cmd_compute(a, eo, out, err);
        if (*check) return cmd_check(a, eo, out, err);
        if (*fixture) return cmd_fixture(a, out, err);
        if (*list) {
            out << Json(fixture_names()).dump(2) << '\n';
            return exit_ok;
        }
    } catch (const LoadError& e) {
        out << violations_json(e).dump(2) << '\n';
        err << "invalid model (" << to_string(e.kind()) << "): " << e.what() << '\n';
        for (const auto& v : e.violations()) err << "  " << v.message << " (at " << v.path << ")\n";
        return exit_invalid_input;
    } catch (const ModelError& e) {
        err << "invalid model: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const ResourceError& e) {
        err << "resource cap " << e.cap() << " exceeded: " << e.what() << '\n';
        return exit_resource_cap;
    }
    return exit_invalid_input;
}

}  // namespace rotset
