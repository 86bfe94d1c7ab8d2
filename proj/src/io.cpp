#include "polynorm/io.hpp"

#include <fstream>
#include <sstream>

namespace polynorm {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rational field_rational(const json& j, const char* where) {
  if (!j.is_string())
    throw ParseError(std::string(where) + ": rationals must be strings like \"3/2\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(std::string(where) + ": " + e.what());
  }
}

Point field_point(const json& j, int dim, const char* where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError(std::string(where) + ": expected a list of " + std::to_string(dim) +
                     " coordinates");
  Point p;
  for (const auto& c : j) p.push_back(field_rational(c, where));
  return p;
}

}  // namespace

PolytopeDocument PolytopeDocument::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());  // message carries line/byte position
  }
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  PolytopeDocument doc;
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("document: missing integer field \"dim\"");
  doc.dim = j["dim"].get<int>();
  if (doc.dim < 1) throw ParseError("document: dim must be positive");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name: expected a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw ParseError("vertices: expected a list");
    std::vector<Point> verts;
    for (const auto& v : j["vertices"]) verts.push_back(field_point(v, doc.dim, "vertices"));
    doc.vertices = std::move(verts);
  }
  if (j.contains("inequalities")) {
    if (!j["inequalities"].is_array()) throw ParseError("inequalities: expected a list");
    std::vector<Halfspace> hs;
    for (const auto& ineq : j["inequalities"]) {
      if (!ineq.is_object() || !ineq.contains("a") || !ineq.contains("b"))
        throw ParseError("inequalities: each entry needs fields \"a\" and \"b\"");
      if (!ineq["a"].is_array() || static_cast<int>(ineq["a"].size()) != doc.dim)
        throw ParseError("inequalities: \"a\" must list " + std::to_string(doc.dim) +
                         " integers");
      Halfspace h;
      for (const auto& c : ineq["a"]) {
        if (!c.is_number_integer()) throw ParseError("inequalities: \"a\" entries are integers");
        h.normal.push_back(Integer(c.get<long long>()));
      }
      h.offset = field_rational(ineq["b"], "inequalities");
      hs.push_back(std::move(h));
    }
    doc.inequalities = std::move(hs);
  }
  if (!doc.vertices && !doc.inequalities)
    throw ParseError("document: need \"vertices\" or \"inequalities\"");
  return doc;
}

PolytopeDocument PolytopeDocument::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

PolytopeDocument PolytopeDocument::from_polytope(const Polytope& p,
                                                std::optional<std::string> name) {
  PolytopeDocument doc;
  doc.dim = p.dim();
  doc.vertices = p.vertices();
  doc.name = std::move(name);
  return doc;
}

ordered_json PolytopeDocument::to_json() const {
  ordered_json j;
  j["dim"] = dim;
  if (name) j["name"] = *name;
  if (vertices) {
    auto& arr = j["vertices"] = ordered_json::array();
    for (const auto& v : *vertices) arr.push_back(json_point(v));
  }
  if (inequalities) {
    auto& arr = j["inequalities"] = ordered_json::array();
    for (const auto& h : *inequalities) {
      ordered_json ineq;
      auto& a = ineq["a"] = ordered_json::array();
      for (const auto& c : h.normal) a.push_back(static_cast<long long>(c));
      ineq["b"] = format_rational(h.offset);
      arr.push_back(std::move(ineq));
    }
  }
  return j;
}

std::string PolytopeDocument::print() const { return to_json().dump(2) + "\n"; }

Polytope PolytopeDocument::to_polytope() const {
  if (vertices) return Polytope::hull(*vertices);
  return Polytope::from_halfspaces(*inequalities);
}

ordered_json json_point(const Point& p) {
  auto arr = ordered_json::array();
  for (const auto& c : p) arr.push_back(format_rational(c));
  return arr;
}

ordered_json json_point_set(const PointSet& s) {
  auto arr = ordered_json::array();
  for (const auto& p : s.points()) arr.push_back(json_point(p));
  return arr;
}

ordered_json json_cover_verdict(const CoverVerdict& v) {
  ordered_json j;
  j["covered"] = v.covered;
  if (v.witness) j["witness"] = json_point(*v.witness);
  if (v.small_scale_warning) j["small_scale_warning"] = true;
  if (!v.residual_cells.empty()) {
    auto& arr = j["residual_cells"] = ordered_json::array();
    for (const auto& cell : v.residual_cells) {
      auto verts = ordered_json::array();
      for (const auto& p : cell.vertices) verts.push_back(json_point(p));
      arr.push_back(std::move(verts));
    }
  }
  return j;
}

ordered_json json_idp_verdict(const IdpVerdict& v) {
  ordered_json j;
  j["holds"] = v.holds;
  if (v.witness) j["witness"] = json_point(*v.witness);
  j["checked_range"] = v.checked_range;
  return j;
}

ordered_json json_edge(const Edge& e) {
  ordered_json j;
  j["v"] = json_point(e.v);
  j["w"] = json_point(e.w);
  auto dir = ordered_json::array();
  for (const auto& c : e.direction) dir.push_back(static_cast<long long>(c));
  j["direction"] = std::move(dir);
  j["lattice_length"] = format_rational(e.length);
  return j;
}

ordered_json make_report(const std::string& command, ordered_json result) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = command;
  j["result"] = std::move(result);
  return j;
}

}  // namespace polynorm
