#pragma once

// JSON model documents. Rationals travel as "p/q" or "n" strings; JSON
// integers are accepted on input, JSON floats never.

#include "rotset/errors.hpp"
#include "rotset/model.hpp"
#include "rotset/violation.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace rotset {

using Json = nlohmann::ordered_json;

struct ModelDocument {
    Model model;
    /// Free-form, carried through unchanged.
    Json metadata = Json::object();
    /// Non-fatal findings of validation.
    Violations warnings;
};

enum class LoadErrorKind { parse, reference, invariant };

std::string_view to_string(LoadErrorKind k);

/// Rejected document. path() points at the first offending element;
/// violations() lists every invariant error when kind is invariant.
class LoadError : public ModelError {
public:
    LoadError(LoadErrorKind kind, const std::string& what, std::string path, Violations violations = {})
        : ModelError(what, std::move(path)), kind_(kind), violations_(std::move(violations)) {}

    LoadErrorKind kind() const { return kind_; }
    const Violations& violations() const { return violations_; }

private:
    LoadErrorKind kind_;
    Violations violations_;
};

/// Builds the model without running invariant checks.
ModelDocument model_from_json(const Json& doc);

/// Parses and validates. Throws LoadError; ResourceError passes through.
ModelDocument load_model_text(std::string_view text, const EngineOptions& options = {});
ModelDocument load_model_file(const std::filesystem::path& path, const EngineOptions& options = {});
/// Validates an already built document, filling its warnings.
void validate_document(ModelDocument& doc, const EngineOptions& options = {});

Json to_json(const ModelDocument& doc);
Json to_json(const HomologyVector& v);
Json to_json(const RationalPolytope& p);

}  // namespace rotset
