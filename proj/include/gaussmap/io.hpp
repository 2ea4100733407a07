#pragma once

#include <string>

#include <json.hpp>

#include "gaussmap/arrangement.hpp"
#include "gaussmap/chords.hpp"
#include "gaussmap/spherical.hpp"
#include "gaussmap/star.hpp"

namespace gaussmap {

using Json = nlohmann::ordered_json;

Json to_json(const UnitVec& v);
Json to_json(const SphericalPolygon& p);
Json to_json(const VertexStar& s);
Json to_json(const ChordDiagram& d);
Json arrangement_to_json(const Arrangement& arr, const LayerProfile* profile);

SphericalPolygon polygon_from_json(const Json& j);
VertexStar star_from_json(const Json& j);
ChordDiagram diagram_from_json(const Json& j);

// JSON text with floats at 17 significant digits and stable key order;
// identical inputs produce byte-identical output.
std::string dump_json(const Json& j, int indent = 2);

Json load_json_file(const std::string& path);

}  // namespace gaussmap
