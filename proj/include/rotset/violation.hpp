#pragma once

#include <string>
#include <vector>

namespace rotset {

enum class Severity { error, warning };

/// One failed invariant. `message` starts with the invariant's name, followed
/// by the offending element; `path` is a JSON pointer into the model document
/// when the check runs on a loaded model.
struct Violation {
    std::string message;
    std::string path;
    Severity severity = Severity::error;
};

using Violations = std::vector<Violation>;

inline bool has_errors(const Violations& vs) {
    for (const auto& v : vs) {
        if (v.severity == Severity::error) return true;
    }
    return false;
}

}  // namespace rotset
