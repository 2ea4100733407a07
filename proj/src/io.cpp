#include "gaussmap/io.hpp"

#include <cstdio>
#include <fstream>

namespace gaussmap {

Json to_json(const UnitVec& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json to_json(const SphericalPolygon& p) {
  Json j = Json::array();
  for (const UnitVec& v : p.vertices) j.push_back(to_json(v));
  return j;
}

Json to_json(const VertexStar& s) {
  Json j;
  j["center"] = Json::array({s.center().x, s.center().y, s.center().z});
  Json ring = Json::array();
  for (const Face& f : s.faces()) {
    const Vec3& p = f.corners[1];
    ring.push_back(Json::array({p.x, p.y, p.z}));
  }
  j["ring"] = ring;
  bool all_triangles = true;
  for (const Face& f : s.faces())
    if (f.corners.size() != 3) all_triangles = false;
  if (!all_triangles) {
    Json faces = Json::array();
    for (const Face& f : s.faces()) {
      Json chain = Json::array();
      for (std::size_t k = 1; k < f.corners.size(); ++k)
        chain.push_back(
            Json::array({f.corners[k].x, f.corners[k].y, f.corners[k].z}));
      faces.push_back(chain);
    }
    j["faces"] = faces;
  }
  return j;
}

Json to_json(const ChordDiagram& d) {
  Json j;
  j["r"] = d.r;
  j["pi"] = d.pi;
  Json upper = Json::array(), lower = Json::array();
  for (int k = 0; k < d.r; ++k) {
    upper.push_back(
        Json::array({d.upper_chord(k).first, d.upper_chord(k).second}));
    lower.push_back(
        Json::array({d.lower_chord(k).first, d.lower_chord(k).second}));
  }
  j["upper"] = upper;
  j["lower"] = lower;
  return j;
}

Json arrangement_to_json(const Arrangement& arr, const LayerProfile* profile) {
  Json j;
  Json nodes = Json::array();
  for (const ArrangementNode& n : arr.nodes()) {
    Json node;
    node["point"] = to_json(n.point);
    node["crossing"] = n.is_crossing;
    nodes.push_back(node);
  }
  j["nodes"] = nodes;
  Json segments = Json::array();
  for (const ArrangementSegment& s : arr.segments()) {
    Json seg;
    seg["from"] = s.from;
    seg["to"] = s.to;
    seg["normal"] = to_json(s.circle_normal);
    seg["source_edge"] = s.source_edge;
    seg["left_face"] = s.left_face;
    seg["right_face"] = s.right_face;
    segments.push_back(seg);
  }
  j["segments"] = segments;
  Json faces = Json::array();
  for (std::size_t f = 0; f < arr.faces().size(); ++f) {
    Json face;
    face["boundary"] = arr.faces()[f].boundary;
    face["area"] = arr.faces()[f].area;
    if (profile) face["winding"] = profile->winding[f];
    faces.push_back(face);
  }
  j["faces"] = faces;
  return j;
}

namespace {

Vec3 vec_from_json(const Json& j) {
  require(j.is_array() && j.size() == 3, ErrorCode::ParseError,
          "expected [x, y, z]");
  return Vec3{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

SphericalPolygon polygon_from_json(const Json& j) {
  require(j.is_array() && j.size() >= 3, ErrorCode::ParseError,
          "polygon JSON must be an array of at least 3 vertices");
  std::vector<UnitVec> verts;
  for (const Json& v : j) verts.push_back(UnitVec(vec_from_json(v)));
  return SphericalPolygon(std::move(verts));
}

VertexStar star_from_json(const Json& j) {
  require(j.is_object() && j.contains("center") && j.contains("ring"),
          ErrorCode::ParseError, "star JSON needs center and ring");
  Vec3 center = vec_from_json(j["center"]);
  if (j.contains("faces")) {
    std::vector<std::vector<Vec3>> chains;
    for (const Json& face : j["faces"]) {
      std::vector<Vec3> chain{center};
      for (const Json& p : face) chain.push_back(vec_from_json(p));
      chains.push_back(std::move(chain));
    }
    return VertexStar(center, std::move(chains));
  }
  std::vector<Vec3> ring;
  for (const Json& p : j["ring"]) ring.push_back(vec_from_json(p));
  return VertexStar::fan(center, ring);
}

ChordDiagram diagram_from_json(const Json& j) {
  require(j.is_object() && j.contains("r") && j.contains("pi"),
          ErrorCode::ParseError, "diagram JSON needs r and pi");
  ChordDiagram d;
  d.r = j["r"].get<int>();
  d.pi = j["pi"].get<std::vector<int>>();
  require(d.r == 0 || d.valid(), ErrorCode::ParseError,
          "invalid chord diagram");
  return d;
}

namespace {

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
  auto pad = [&](int d) { out.append(static_cast<std::size_t>(d) * indent, ' '); };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        out += Json(it.key()).dump();
        out += ": ";
        dump_rec(it.value(), out, indent, depth + 1);
      }
      out += "\n";
      pad(depth);
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool scalars = true;
      for (const Json& e : j)
        if (e.is_structured()) scalars = false;
      if (scalars) {
        out += "[";
        bool first = true;
        for (const Json& e : j) {
          if (!first) out += ", ";
          first = false;
          dump_rec(e, out, indent, depth);
        }
        out += "]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const Json& e : j) {
        if (!first) out += ",\n";
        first = false;
        pad(depth + 1);
        dump_rec(e, out, indent, depth + 1);
      }
      out += "\n";
      pad(depth);
      out += "]";
      return;
    }
    case Json::value_t::number_float: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_rec(j, out, indent, 0);
  out += "\n";
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot open " + path);
  Json j = Json::parse(in, nullptr, false);
  require(!j.is_discarded(), ErrorCode::ParseError,
          "malformed JSON in " + path);
  return j;
}

}  // namespace gaussmap
