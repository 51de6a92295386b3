#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "cga/meet.hpp"
#include "cga/primitives.hpp"

namespace cga {

/// Default tolerance for the collinear/coplanar query verbs.
inline constexpr double kQueryEps = 1e-9;

enum class EntityKind { Point, Line, Circle, Plane, Sphere };

struct Entity {
  EntityKind kind;
  Multivector mv;                     // conformal point or primitive blade
  EuclideanVector coords;             // points only
  std::vector<EuclideanVector> gens;  // defining points, in statement order
};

/// Named entities of one scene; all share the scene dimension.
struct Scene {
  int dim = 0;
  std::map<std::string, Entity> symbols;

  const Entity& lookup(const std::string& name) const;
};

/// Parses the line-oriented scene format:
///   dim <2|3>
///   point <name> <x> <y> [<z>]
///   line <name> <pt> <pt>
///   circle <name> <pt> <pt> <pt>
///   plane <name> <pt> <pt> <pt>
///   sphere <name> <pt> <pt> <pt> <pt>
///   sphere <name> center <x> <y> <z> radius <r>
/// `#` starts a comment. References resolve to earlier statements only.
Scene parse_scene(const std::string& text);

/// One query result, as fixed-format text and as structured data.
struct QueryResult {
  std::string text;
  nlohmann::ordered_json data;
};

/// Executes one query verb against the scene. Verbs:
///   dist p q | circum p q r [s] | intersect a b | reflect L P |
///   tangent S p | angle L1 L2 | collinear p q r [eps] |
///   coplanar p q r s [eps] | translate obj dx dy [dz] |
///   rotate obj <xy|yz|zx> theta about p | bounce line mirror... N
/// Numbers print with 9 significant digits.
QueryResult run_query(const Scene& scene, const std::string& query,
                      double eps = kQueryEps);

/// 9-significant-digit fixed formatting shared by all query output.
std::string format_number(double v);
std::string format_point(const EuclideanVector& p);

}  // namespace cga
