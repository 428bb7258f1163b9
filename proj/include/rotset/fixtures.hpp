#pragma once

// Embedded example models.

#include "rotset/io.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rotset {

/// Catalog entries; the parametric family is listed as "exp_family(k)".
std::vector<std::string> fixture_names();

/// Builds a fixture by name, e.g. "genus2_full" or "exp_family(3)".
/// Returns nullopt for an unknown name. The model is not validated.
std::optional<ModelDocument> make_fixture(std::string_view name);

ModelDocument genus2_nonconvex();
ModelDocument genus2_full();
ModelDocument genus2_blocks();
/// Genus 2k; 3k annular pieces whose maximal chains pick one of two pieces per level.
ModelDocument exp_family(int k);

/// genus2_full with a trivial piece of zero rotation inserted between the two
/// curved pieces.
ModelDocument genus2_full_with_trivial();

}  // namespace rotset
