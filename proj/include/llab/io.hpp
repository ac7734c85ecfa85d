#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "llab/expansion.hpp"

namespace llab {

using Json = nlohmann::json;

/// {"degree": n, "generators": [[images...], ...]} with 0-based images
FiniteGroup parse_group(const Json& j);
/// A path to a group file, or the name of a shipped example (s3, s4, s5, a4, a5, a6, c6, d8).
std::shared_ptr<const FiniteGroup> load_group(const std::string& path_or_name);
std::vector<std::string> example_names();

/// all | s | q | c | cr | cr-closure | top, optionally joined with '+'; the result must be F-closed.
std::vector<SubMask> parse_delta(const std::string& spec, const FusionSystem& F);

Json subgroup_json(const PGroup& S, SubMask P);
Json subgroup_list_json(const PGroup& S, const std::vector<SubMask>& v);
Json check_report_json(const CheckReport& r);
Json classification_json(const FusionSystem& F);
Json locality_json(const Locality& L, const FusionSystem& F);
Json expansion_json(const Expansion& E, const FusionSystem& F);

/// aligned text table of the classification
std::string classification_text(const FusionSystem& F);

}  // namespace llab
