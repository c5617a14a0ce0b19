#pragma once

#include <vector>

#include "eatxt/diagnostics.hpp"
#include "eatxt/model.hpp"

namespace eatxt {

/// Semantic validation against the model's version registry: containment and
/// attribute legality (E006), required attributes (E006), sibling-name
/// uniqueness (E004), reference resolution (E003) and connector endpoint
/// direction compatibility (W102). Findings are ordered by span.
std::vector<Diagnostic> validate(const Model& model);

} // namespace eatxt
