#include "cga/meet.hpp"

#include <cmath>

namespace cga {

namespace {

// Bivector meets: classify by sign(B^2) and decode the null content.
MeetOutcome classify_point_meet(const Multivector& b, double eps) {
  MeetOutcome out(b);
  const double nb = b.norm();
  const double sigma = scalar_part(geometric_product(b, b));
  if (std::fabs(sigma) <= eps * nb * nb) {
    out.kind = MeetKind::TangentPoint;
  } else if (sigma > 0.0) {
    out.kind = MeetKind::TwoPoints;
  } else {
    out.kind = MeetKind::Empty;
    return out;
  }
  DecodedPoints dec = decode_point_pair(b, eps);
  out.at_infinity = dec.at_infinity;
  for (const ConformalPoint& p : dec.points) {
    out.points.push_back(extract_point(p));
  }
  return out;
}

void require_distinct(const Multivector& meet_blade, double scale,
                      const char* what) {
  if (meet_blade.norm() <= 1e-12 * scale) {
    throw GeomError(std::string(what));
  }
}

}  // namespace

MeetOutcome meet_lines_2d(const CircleOrLine& l1, const CircleOrLine& l2,
                          double eps) {
  if (euclidean_dim(l1.blade.signature()) != 2) {
    throw GeomError("meet_lines_2d: operands must live in G(3,1)");
  }
  const Multivector b = inner_product(dual(l1.blade), l2.blade);
  require_distinct(b, l1.blade.norm() * l2.blade.norm(),
                   "meet_lines_2d: coincident primitives");
  return classify_point_meet(b, eps);
}

MeetOutcome meet_line_sphere(const CircleOrLine& l, const SphereOrPlane& p,
                             double eps) {
  if (euclidean_dim(l.blade.signature()) != 3) {
    throw GeomError("meet_line_sphere: operands must live in G(4,1)");
  }
  const Multivector b = inner_product(l.blade, dual(p.blade));
  require_distinct(b, l.blade.norm() * p.blade.norm(),
                   "meet_line_sphere: line is contained in the surface");
  return classify_point_meet(b, eps);
}

MeetOutcome meet_spheres(const SphereOrPlane& p1, const SphereOrPlane& p2,
                         double eps) {
  if (euclidean_dim(p1.blade.signature()) != 3) {
    throw GeomError("meet_spheres: operands must live in G(4,1)");
  }
  const Multivector l = inner_product(dual(p1.blade), p2.blade);
  require_distinct(l, p1.blade.norm() * p2.blade.norm(),
                   "meet_spheres: coincident primitives");

  MeetOutcome out(l);
  const double nl = l.norm();
  const double sigma = scalar_part(geometric_product(l, l));
  const bool both_flat = p1.flat() && p2.flat();

  if (std::fabs(sigma) <= eps * nl * nl) {
    out.kind = MeetKind::TangentPoint;
    if (both_flat) {
      out.at_infinity = true;  // parallel planes meet only at infinity
      return out;
    }
    const Multivector center = grade_project(
        geometric_product(geometric_product(l, n_infinity(l.signature())), l), 1);
    out.points.push_back(extract_point(normalize_point_rel(center)));
    return out;
  }
  if (sigma < 0.0) {
    out.kind = MeetKind::Empty;
    return out;
  }
  if (both_flat) {
    out.kind = MeetKind::Line;
    out.line = line_info(l);
    return out;
  }
  out.kind = MeetKind::Circle;
  out.circle = circle_center_radius(CircleOrLine{l});
  return out;
}

}  // namespace cga
