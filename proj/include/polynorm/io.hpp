#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "polynorm/covering.hpp"
#include "polynorm/fan.hpp"
#include "polynorm/lattice.hpp"

namespace polynorm {

inline constexpr int kReportSchemaVersion = 1;

/// File representation of a polytope: rationals are strings ("3/2", "-7/10",
/// "4"); "0.7" is accepted on input and re-emitted canonically as "7/10".
struct PolytopeDocument {
  int dim = 0;
  std::optional<std::vector<Point>> vertices;
  std::optional<std::vector<Halfspace>> inequalities;
  std::optional<std::string> name;

  static PolytopeDocument parse(const std::string& text);
  static PolytopeDocument load(const std::string& path);
  static PolytopeDocument from_polytope(const Polytope& p, std::optional<std::string> name);

  nlohmann::ordered_json to_json() const;
  std::string print() const;

  /// Builds the polytope, preferring the vertex description when both are
  /// present.
  Polytope to_polytope() const;
};

// JSON fragments shared by the CLI report commands.
nlohmann::ordered_json json_point(const Point& p);
nlohmann::ordered_json json_point_set(const PointSet& s);
nlohmann::ordered_json json_cover_verdict(const CoverVerdict& v);
nlohmann::ordered_json json_idp_verdict(const IdpVerdict& v);
nlohmann::ordered_json json_edge(const Edge& e);

/// Report envelope: {schema_version, command, result}.
nlohmann::ordered_json make_report(const std::string& command, nlohmann::ordered_json result);

}  // namespace polynorm
