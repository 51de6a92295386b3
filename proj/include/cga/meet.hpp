#pragma once

#include <optional>
#include <vector>

#include "cga/primitives.hpp"

namespace cga {

enum class MeetKind { TwoPoints, TangentPoint, Empty, Circle, Line };

/// Classified intersection. `points` holds the finite decoded points;
/// `at_infinity` flags an intersection point at infinity (straight-line
/// meets). Circle/Line payloads carry the extracted Euclidean data.
struct MeetOutcome {
  explicit MeetOutcome(Multivector raw_blade) : raw(std::move(raw_blade)) {}

  MeetKind kind = MeetKind::Empty;
  std::vector<EuclideanVector> points;
  bool at_infinity = false;
  std::optional<CenterRadius> circle;
  std::optional<LineInfo> line;
  Multivector raw;
};

/// Meet of two distinct lines/circles in the plane: B = (I L1) . L2,
/// classified by the sign of B^2.
MeetOutcome meet_lines_2d(const CircleOrLine& l1, const CircleOrLine& l2,
                          double eps = kClassifyEps);

/// Meet of a line or circle with a sphere or plane (3D): L . (I P).
MeetOutcome meet_line_sphere(const CircleOrLine& l, const SphereOrPlane& p,
                             double eps = kClassifyEps);

/// Meet of two spheres/planes (3D): the trivector (I P1) . P2, a circle,
/// straight line, tangency point, or nothing.
MeetOutcome meet_spheres(const SphereOrPlane& p1, const SphereOrPlane& p2,
                         double eps = kClassifyEps);

}  // namespace cga
