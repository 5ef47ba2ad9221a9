#pragma once

#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpack/frames.hpp"
#include "gpack/heisenberg.hpp"
#include "gpack/idempotents.hpp"
#include "gpack/permgroup.hpp"
#include "gpack/scheme.hpp"

namespace gpack {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::filesystem::path& path);

// {"degree": n, "generators": [[images...], ...]}; generators may also be
// cycle-notation strings.
PermutationGroup group_from_json(const Json& j);
Json group_to_json(const PermutationGroup& group);

Json scheme_to_json(const SchurianScheme& scheme);
Json decomposition_to_json(const IsotypicDecomposition& dec, bool with_projections);

// {"n": n, "entries": [[[re, im], ...], ...]}, optionally with an integer
// "scale": [num, den] applied to every entry. Integer entries are treated as
// exact rationals.
GramMatrix gram_from_json(const Json& j);
Json gram_to_json(const GramMatrix& gram);
Json report_to_json(const PackingReport& report);
Json exact_gram_to_json(const heis::ExactRootGram& gram);

}  // namespace gpack
