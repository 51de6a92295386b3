#pragma once

#include <vector>

#include "cga/conformal.hpp"
#include "cga/multivector.hpp"

namespace cga {

/// Blade ^ n below this (relative) marks a flat (infinite-radius) primitive.
inline constexpr double kFlatEps = 1e-9;
/// A construction blade smaller than this times the product of its input
/// norms is reported degenerate.
inline constexpr double kDegenerateEps = 1e-12;
/// Relative tolerance for classifying the sign of a blade square.
inline constexpr double kClassifyEps = 1e-9;

/// True when the blade contains the point at infinity (blade ^ n = 0):
/// straight lines, planes, and flat point pairs.
bool is_flat_blade(const Multivector& blade, double eps = kFlatEps);

/// Grade-2 blade spanned by two points. The sign of its square counts its
/// content: > 0 two points, = 0 one point, < 0 none.
struct PointPair {
  Multivector blade;
  double square() const { return scalar_part(geometric_product(blade, blade)); }
};

/// Grade-3 blade through three points: a circle, or a straight line when it
/// passes through infinity (blade ^ n = 0).
struct CircleOrLine {
  Multivector blade;
  bool flat(double eps = kFlatEps) const;
};

/// Grade-4 blade through four points (3D): a sphere, or a plane when flat.
struct SphereOrPlane {
  Multivector blade;
  bool flat(double eps = kFlatEps) const;
};

struct CenterRadius {
  EuclideanVector center;
  double radius = 0.0;
};

/// Point + unit direction form of a straight line.
struct LineInfo {
  EuclideanVector point;      // foot of the perpendicular from the origin
  EuclideanVector direction;  // unit, first nonzero component positive
};

/// Unit normal + signed offset form of a flat: {x : x.normal = offset}.
struct PlaneInfo {
  EuclideanVector normal;
  double offset = 0.0;
};

PointPair point_pair(const ConformalPoint& x, const ConformalPoint& y);

/// Points recovered from a point-pair blade. `at_infinity` marks a meet
/// point at infinity (straight-line meets); it counts toward the total.
struct DecodedPoints {
  std::vector<ConformalPoint> points;
  bool at_infinity = false;
};

/// Splits a grade-2 blade into its null content: two points when B^2 > 0,
/// one when B^2 = 0, none when B^2 < 0.
DecodedPoints decode_point_pair(const Multivector& b, double eps = kClassifyEps);
DecodedPoints decode_point_pair(const PointPair& b, double eps = kClassifyEps);

CircleOrLine circle_through(const ConformalPoint& a1, const ConformalPoint& a2,
                            const ConformalPoint& a3);
CircleOrLine line_through(const ConformalPoint& a, const ConformalPoint& b);

/// Center and radius of a round circle: rho^2 = -L^2/(L^n)^2; the center is
/// recovered from the dual vector in 2D and from the sandwich L n L in 3D.
CenterRadius circle_center_radius(const CircleOrLine& l);

/// -(L^n)^2 / L^2 = 1/rho^2: zero exactly for straight lines, scale-free.
double straightness(const CircleOrLine& l);
bool is_line(const CircleOrLine& l, double eps);

SphereOrPlane sphere_through(const ConformalPoint& a1, const ConformalPoint& a2,
                             const ConformalPoint& a3, const ConformalPoint& a4);
SphereOrPlane plane_through(const ConformalPoint& a1, const ConformalPoint& a2,
                            const ConformalPoint& a3);
/// Sphere blade with the given center and radius (dual form C - rho^2 n).
SphereOrPlane sphere_from_center_radius(const EuclideanVector& center, double radius);

CenterRadius sphere_center_radius(const SphereOrPlane& s);

/// Coplanarity measure for grade-4 blades, the analogue of straightness:
/// 1/rho^2 of the sphere through the four construction points.
double flatness(const SphereOrPlane& s);
bool is_plane(const SphereOrPlane& s, double eps);

/// arccos(<L1 L2>_0 / (|L1| |L2|)), clamped into [0, pi]. Valid for
/// straight lines and circles alike; versor-covariant.
double angle_between_lines(const CircleOrLine& l1, const CircleOrLine& l2);

/// Point/direction data of a flat grade-3 blade.
LineInfo line_info(const Multivector& l);
/// Normal/offset data of a flat blade (grade 4 in 3D, grade 3 in 2D).
PlaneInfo plane_info(const Multivector& s);

}  // namespace cga
