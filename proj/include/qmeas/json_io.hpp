#pragma once

#include "qmeas/diagbox.hpp"
#include "qmeas/kernel.hpp"
#include "qmeas/polymeasure.hpp"

#include "json.hpp"

#include <string>

namespace qmeas {

// Insertion-ordered so serialized artifacts are byte-stable.
using Json = nlohmann::ordered_json;

/**
 * Artifact formats. Scalars are strings ("3/2", "-1"); bare JSON integers
 * are accepted on input, floating point never is. An optional "_meta"
 * object is tolerated at the top level of every artifact and ignored.
 *
 *   Space           {"atoms": ["a","b","c"]}
 *   SetFunction     {"space": {...}, "values": {"": "0", "0": "1", ...}}
 *   PolyMeasure     {"factors": [space...], "tensor": nested arrays, axis 0 outermost}
 *   CylinderTable   {"factors": [space...], "entries": [{"sets": ["0,1","2"], "value": "3/2"}, ...]}
 *   BoxUnion        {"dim": 2, "boxes": [{"sides": [["0","1/2"], ...]}, ...]}
 */

Scalar scalar_from_json(const Json& node);

SpacePtr space_from_json(const Json& node);
SetFunction set_function_from_json(const Json& node);
PolyMeasure polymeasure_from_json(const Json& node);
RawCylinderTable cylinder_table_from_json(const Json& node);
BoxUnion box_union_from_json(const Json& node);

Json space_to_json(const FiniteSpace& space);
Json set_function_to_json(const SetFunction& mu);       // values in mask order
Json polymeasure_to_json(const PolyMeasure& lambda);
Json cylinder_table_to_json(const RawCylinderTable& raw);
Json box_union_to_json(const BoxUnion& t);
Json growth_row_to_json(const GrowthRow& row);

// Parse failures surface as Error with the position carried in the message.
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

} // namespace qmeas
