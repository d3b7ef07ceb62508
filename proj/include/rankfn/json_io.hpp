#pragma once

#include "rankfn/additive.hpp"
#include "rankfn/angulated.hpp"
#include "rankfn/cone.hpp"
#include "rankfn/gallery.hpp"
#include "rankfn/nakayama.hpp"
#include "rankfn/rank_objects.hpp"
#include "rankfn/report.hpp"

#include <json.hpp>

#include <string>

namespace rankfn {

using Json = nlohmann::ordered_json;

/// Parses text; InputError carries the byte offset of a syntax error.
Json parse_json(const std::string& text, const std::string& source);

CategorySkeleton skeleton_from_json(const Json& j);
Json to_json(const CategorySkeleton& s);
Json to_json(const AngleTemplate& a);
AngleTemplate angle_from_json(const Json& j, int d, const std::string& where);

RankOnObjects rank_from_json(const Json& j);
Json to_json(const RankOnObjects& r);

NakayamaAlgebra algebra_from_json(const Json& j);
Json to_json(const NakayamaAlgebra& a);

NakayamaModule module_from_json(const Json& j);
Json to_json(const NakayamaModule& m);

ProjMorphism morphism_from_json(const Json& j);
Json to_json(const ProjMorphism& f);

AdditiveFn additive_from_json(const Json& j, int n);
Json to_json(const AdditiveFn& a);

Json to_json(const Report& r);
Json to_json(const GalleryEntry& e);
Json to_json(const IntVector& v);
Json to_json(const ProjAngle& x);

/// A gallery-entry document: {"name", "skeleton", "ranks": {name: rank}}.
bool is_gallery_entry(const Json& j);

}  // namespace rankfn
