#pragma once

// Result documents: computed chains and blocks plus optional check reports.

#include "rotset/analysis.hpp"
#include "rotset/conley.hpp"
#include "rotset/io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace rotset {

inline constexpr const char* kEngineVersion = "0.1.0";

/// Hex SHA-256 of the canonical serialization of the model.
std::string input_digest(const ModelDocument& doc);

struct CheckOptions {
    bool star = false;
    bool bound = false;
    bool subspace = false;
    bool interior = false;
    /// 0 disables the convexity probes.
    int convex_density = 0;
    std::size_t oracle_samples = 0;
    std::uint64_t seed = 1;

    bool any() const { return star || bound || subspace || interior || convex_density > 0 || oracle_samples > 0; }
    /// Every check, density 4, 100 samples.
    static CheckOptions all();
};

struct CheckOutcome {
    std::vector<CheckResult> checks;
    /// Per-analysis details for the JSON report.
    Json details = Json::object();
    bool passed() const;
};

CheckOutcome run_checks(const ModelDocument& doc, const Computation& computation, const CheckOptions& options);

/// Chains, blocks, version and digest. Byte-identical across runs.
Json result_document(const ModelDocument& doc, const Computation& computation,
                     const std::optional<CheckOutcome>& checks = std::nullopt);

/// One row per block vertex: key, then coordinates as p/q.
std::string blocks_csv(const Computation& computation);

}  // namespace rotset
