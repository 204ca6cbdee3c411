#pragma once

#include <json.hpp>

#include "chartable.hpp"
#include "surface.hpp"

namespace primhom {

using Json = nlohmann::ordered_json;

Json cyclo_to_json(const Cyclo& c);
Cyclo cyclo_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

// {"kind": "metacyclic"|"metacyclic_ext"|"abelian"|"nilpotent2"|"permutation"|"table", ...}
GroupPtr group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);  // always the explicit table form

// {"group": <spec>, "images": [index-or-label...], "rank": n?}
Hom hom_from_json(const Json& j);

Json table_to_json(const CharacterTable& t);
TablePtr table_from_json(const Json& j);  // rejects tables failing exact orthogonality

SurfacePreset preset_from_json(const Json& j);
Json preset_to_json(const SurfacePreset& p);

Json parse_json_text(const std::string& text);  // Err::Schema on parse failure

}  // namespace primhom
