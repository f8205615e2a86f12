#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "ambicard/burnside.hpp"
#include "ambicard/cardinality.hpp"
#include "ambicard/group.hpp"
#include "ambicard/gset.hpp"
#include "ambicard/poset.hpp"

namespace ambicard {

using Json = nlohmann::json;

/// Reads and parses a JSON file; InputError on any failure.
Json read_json_file(const std::filesystem::path& path);

/// {"degree": n, "generators": [[...], ...]} or {"family": "S|A|C|D|GL2", "n": k}.
PermGroup group_from_json(const Json& spec, std::size_t max_order = PermGroup::default_max_order);
PermGroup group_from_family(const std::string& family, unsigned n, std::size_t max_order = PermGroup::default_max_order);
Json group_to_json(const PermGroup& G);

/// {"size": m, "generator_images": [[...], ...], "basepoint": i?}
GSet gset_from_json(const Json& spec, GroupPtr group);
Json gset_to_json(const GSet& X);

/// {"elements": [...], "covers": [[a, b], ...]}; rejects cycles.
FinitePoset poset_from_json(const Json& spec);

/// {"group": <group spec>, "homotopy": [{"level", "size", "op_table", "action"}, ...]}
SpaceSpec space_from_json(const Json& spec, std::size_t max_order = PermGroup::default_max_order);
Json space_to_json(const SpaceSpec& space);

/// {"prime": p, "terms": [{"exp", "num", "den"}, ...], "string": "..."}
Json card_expr_to_json(const CardExpr& e);
CardExpr card_expr_from_json(const Json& j);

/// {"group": <spec>, "coeffs": [{"class_order", "class_index", "num", "den"}, ...]}
Json burnside_element_to_json(const BurnsideElement& x, const Json& group_spec);
BurnsideElement burnside_element_from_json(const Json& j, const BurnsideRing::Ptr& ring);

Json rational_to_json_num(const Integer& v);
Integer integer_from_json(const Json& v);

}  // namespace ambicard
