#include "cga/primitives.hpp"

#include <cmath>

namespace cga {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void require_nondegenerate(const Multivector& blade, double input_scale,
                           const char* what) {
  if (blade.norm() <= kDegenerateEps * input_scale) {
    throw GeomError(std::string(what) + ": degenerate primitive");
  }
}

// Canonical orientation: first significant component positive.
void canonicalize_direction(EuclideanVector& dir, double* coupled = nullptr) {
  for (int i = 0; i < dir.size(); ++i) {
    if (std::fabs(dir[i]) > 1e-12) {
      if (dir[i] < 0.0) {
        dir = -dir;
        if (coupled) *coupled = -*coupled;
      }
      return;
    }
  }
}

}  // namespace

bool is_flat_blade(const Multivector& blade, double eps) {
  const Multivector w = outer_product(blade, n_infinity(blade.signature()));
  return w.norm() <= eps * blade.norm() * kSqrt2;
}

bool CircleOrLine::flat(double eps) const { return is_flat_blade(blade, eps); }
bool SphereOrPlane::flat(double eps) const { return is_flat_blade(blade, eps); }

PointPair point_pair(const ConformalPoint& x, const ConformalPoint& y) {
  return PointPair{outer_product(x.mv(), y.mv())};
}

DecodedPoints decode_point_pair(const Multivector& b, double eps) {
  if (b.norm() == 0.0) throw GeomError("decode_point_pair: zero blade");
  if (!is_homogeneous(b, 2, 1e-9)) {
    throw GeomError("decode_point_pair: operand is not a grade-2 blade");
  }
  const Signature sig = b.signature();
  const Multivector n = n_infinity(sig);
  const double nb = b.norm();
  const double sigma = scalar_part(geometric_product(b, b));

  DecodedPoints out;
  if (std::fabs(sigma) <= eps * nb * nb) {
    // Tangency: B holds a single null direction.
    const Multivector v = inner_product(n, b);
    const Multivector q = grade_project(geometric_product(b, v), 1);
    if (v.norm() <= eps * nb * kSqrt2 || is_point_at_infinity(q)) {
      out.at_infinity = true;  // the single point is infinity itself
      return out;
    }
    out.points.push_back(normalize_point_rel(q));
    return out;
  }
  if (sigma < 0.0) return out;  // no null content

  if (is_flat_blade(b, kFlatEps)) {
    // B = X ^ n: recover the finite point as the second null direction of
    // span{u, n} where u = nbar . B.
    const Multivector u = inner_product(n_bar(sig), b);
    const double un = dot(u, n);
    if (std::fabs(un) <= 1e-14 * u.norm()) {
      throw GeomError("decode_point_pair: flat pair has no finite point");
    }
    const double mu = -dot(u, u) / (2.0 * un);
    const Multivector p = u + n * mu;
    out.at_infinity = true;
    if (is_point_at_infinity(p)) return out;  // beyond the numeric horizon
    out.points.push_back(normalize_point_rel(p));
    return out;
  }

  const Multivector v = inner_product(n, b);
  const Multivector bhat = b / std::sqrt(sigma);
  const Multivector w = inner_product(v, bhat);
  out.points.push_back(normalize_point_rel(v + w));
  out.points.push_back(normalize_point_rel(v - w));
  return out;
}

DecodedPoints decode_point_pair(const PointPair& b, double eps) {
  return decode_point_pair(b.blade, eps);
}

CircleOrLine circle_through(const ConformalPoint& a1, const ConformalPoint& a2,
                            const ConformalPoint& a3) {
  const Multivector blade =
      outer_product(outer_product(a1.mv(), a2.mv()), a3.mv());
  require_nondegenerate(blade, a1.mv().norm() * a2.mv().norm() * a3.mv().norm(),
                        "circle_through");
  return CircleOrLine{blade};
}

CircleOrLine line_through(const ConformalPoint& a, const ConformalPoint& b) {
  const Multivector n = n_infinity(a.signature());
  const Multivector blade = outer_product(outer_product(a.mv(), b.mv()), n);
  require_nondegenerate(blade, a.mv().norm() * b.mv().norm() * kSqrt2,
                        "line_through");
  return CircleOrLine{blade};
}

CenterRadius circle_center_radius(const CircleOrLine& l) {
  if (l.flat()) throw GeomError("circle_center_radius: flat primitive");
  const Multivector& blade = l.blade;
  const Signature sig = blade.signature();
  const Multivector n = n_infinity(sig);

  const double l2 = scalar_part(geometric_product(blade, blade));
  const Multivector w = outer_product(blade, n);
  const double w2 = scalar_part(geometric_product(w, w));
  const double rho2 = -l2 / w2;
  if (!(rho2 > 0.0) || !std::isfinite(rho2)) {
    throw GeomError("circle_center_radius: imaginary or invalid radius");
  }

  Multivector center_vec(sig);
  if (euclidean_dim(sig) == 2) {
    const Multivector lv = dual(blade);
    const double ln = dot(lv, n);
    center_vec = lv * (-2.0 / ln) + n * rho2;
  } else {
    center_vec = grade_project(
        geometric_product(geometric_product(blade, n), blade), 1);
  }
  return CenterRadius{extract_point(normalize_point_rel(center_vec)), std::sqrt(rho2)};
}

double straightness(const CircleOrLine& l) {
  const Multivector& blade = l.blade;
  const double l2 = scalar_part(geometric_product(blade, blade));
  if (std::fabs(l2) <= 1e-14 * blade.norm() * blade.norm()) {
    throw GeomError("straightness: blade squares to zero");
  }
  const Multivector w = outer_product(blade, n_infinity(blade.signature()));
  const double w2 = scalar_part(geometric_product(w, w));
  const double s = -w2 / l2;
  return s > 0.0 ? s : 0.0;
}

bool is_line(const CircleOrLine& l, double eps) { return straightness(l) < eps; }

SphereOrPlane sphere_through(const ConformalPoint& a1, const ConformalPoint& a2,
                             const ConformalPoint& a3, const ConformalPoint& a4) {
  const Multivector blade = outer_product(
      outer_product(outer_product(a1.mv(), a2.mv()), a3.mv()), a4.mv());
  require_nondegenerate(blade,
                        a1.mv().norm() * a2.mv().norm() * a3.mv().norm() *
                            a4.mv().norm(),
                        "sphere_through");
  return SphereOrPlane{blade};
}

SphereOrPlane plane_through(const ConformalPoint& a1, const ConformalPoint& a2,
                            const ConformalPoint& a3) {
  const Multivector n = n_infinity(a1.signature());
  const Multivector blade = outer_product(
      outer_product(outer_product(a1.mv(), a2.mv()), a3.mv()), n);
  require_nondegenerate(
      blade, a1.mv().norm() * a2.mv().norm() * a3.mv().norm() * kSqrt2,
      "plane_through");
  return SphereOrPlane{blade};
}

SphereOrPlane sphere_from_center_radius(const EuclideanVector& center,
                                        double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw GeomError("sphere_from_center_radius: radius must be positive");
  }
  const Signature sig = conformal_sig_for(center);
  const Multivector s =
      embed(center).mv() - n_infinity(sig) * (radius * radius);
  // dual(S) = s and the pseudoscalar squares to -1, so S = -dual(s).
  return SphereOrPlane{-dual(s)};
}

CenterRadius sphere_center_radius(const SphereOrPlane& sp) {
  if (sp.flat()) throw GeomError("sphere_center_radius: flat primitive");
  const Signature sig = sp.blade.signature();
  const Multivector n = n_infinity(sig);
  const Multivector s = dual(sp.blade);
  const double sn = dot(s, n);
  const double rho2 = dot(s, s) / (sn * sn);
  if (!(rho2 > 0.0) || !std::isfinite(rho2)) {
    throw GeomError("sphere_center_radius: imaginary or invalid radius");
  }
  const Multivector center_vec = s * (-2.0 / sn) + n * rho2;
  return CenterRadius{extract_point(normalize_point_rel(center_vec)), std::sqrt(rho2)};
}

double flatness(const SphereOrPlane& sp) {
  const Multivector& blade = sp.blade;
  const double s2 = scalar_part(geometric_product(blade, blade));
  if (std::fabs(s2) <= 1e-14 * blade.norm() * blade.norm()) {
    throw GeomError("flatness: blade squares to zero");
  }
  const Multivector w = outer_product(blade, n_infinity(blade.signature()));
  const double w2 = scalar_part(geometric_product(w, w));
  const double f = w2 / s2;  // 1/rho^2 for spheres: rho^2 = S^2/(S^n)^2
  return f > 0.0 ? f : 0.0;
}

bool is_plane(const SphereOrPlane& s, double eps) { return flatness(s) < eps; }

double angle_between_lines(const CircleOrLine& l1, const CircleOrLine& l2) {
  const double m1 = magnitude(l1.blade);
  const double m2 = magnitude(l2.blade);
  if (m1 <= 1e-14 * l1.blade.norm() || m2 <= 1e-14 * l2.blade.norm() ||
      m1 == 0.0 || m2 == 0.0) {
    throw GeomError("angle_between_lines: null-magnitude blade");
  }
  double c = scalar_part(geometric_product(l1.blade, l2.blade)) / (m1 * m2);
  c = std::max(-1.0, std::min(1.0, c));
  return std::acos(c);
}

LineInfo line_info(const Multivector& l) {
  const Signature sig = l.signature();
  const int d = euclidean_dim(sig);
  if (!is_flat_blade(l, kFlatEps)) {
    throw GeomError("line_info: blade is not a straight line");
  }
  const Multivector n = n_infinity(sig);
  const Multivector dn = inner_product(n, l);  // proportional to dir ^ n
  EuclideanVector dir(d);
  for (int i = 0; i < d; ++i) dir[i] = dn[(1u << i) | (1u << d)];
  const double len = dir.norm();
  if (len <= 1e-14 * l.norm()) throw GeomError("line_info: no direction");
  dir /= len;
  canonicalize_direction(dir);

  // Reflect the origin in the line; the foot of the perpendicular is the
  // midpoint of origin and image.
  EuclideanVector zero = EuclideanVector::Zero(d);
  const Multivector origin = embed(zero).mv();
  const Multivector image = grade_project(
      geometric_product(geometric_product(l, origin), l), 1);
  const EuclideanVector foot = extract_point(normalize_point_rel(image)) / 2.0;
  return LineInfo{foot, dir};
}

PlaneInfo plane_info(const Multivector& sp) {
  const Signature sig = sp.signature();
  const int d = euclidean_dim(sig);
  if (!is_flat_blade(sp, kFlatEps)) {
    throw GeomError("plane_info: blade is not flat");
  }
  const Multivector s = dual(sp);  // lambda (normal + offset n)
  EuclideanVector m(d);
  for (int i = 0; i < d; ++i) m[i] = s[1u << i];
  const double lambda = m.norm();
  if (lambda <= 1e-14 * s.norm()) {
    throw GeomError("plane_info: degenerate flat");
  }
  PlaneInfo info;
  info.normal = m / lambda;
  info.offset = 0.5 * (s[1u << d] + s[1u << (d + 1)]) / lambda;
  canonicalize_direction(info.normal, &info.offset);
  return info;
}

}  // namespace cga
