#include "cga/transforms.hpp"

#include <bit>
#include <cmath>

namespace cga {

namespace {

bool is_even(const Multivector& a, double rel_tol = 1e-12) {
  double odd = 0.0;
  for (std::uint32_t i = 0; i < a.signature().blade_count(); ++i) {
    if (std::popcount(i) & 1) odd += a[i] * a[i];
  }
  return std::sqrt(odd) <= rel_tol * std::max(a.norm(), 1e-300);
}

// Grade-1 with no e/ebar component.
void require_euclidean_vector(const Multivector& a, const char* what) {
  if (!is_homogeneous(a, 1, 1e-9)) {
    throw GeomError(std::string(what) + ": operand is not a grade-1 vector");
  }
  const int d = euclidean_dim(a.signature());
  const double extra = std::hypot(a[1u << d], a[1u << (d + 1)]);
  if (extra > 1e-12 * std::max(a.norm(), 1e-300)) {
    throw GeomError(std::string(what) + ": vector has e/ebar components");
  }
}

}  // namespace

Versor Versor::from(const Multivector& mv, double tol) {
  if (!is_even(mv)) throw GeomError("versor must be even-grade");
  const Multivector unit = geometric_product(mv, reverse(mv));
  Multivector residual = unit - Multivector::scalar(mv.signature(), 1.0);
  if (residual.norm() > tol) {
    throw GeomError("versor is not unit-normalized (V reverse(V) != 1)");
  }
  return Versor(mv);
}

Multivector apply_versor(const Versor& v, const Multivector& a) {
  return geometric_product(geometric_product(v.mv(), a), reverse(v.mv()));
}

ConformalPoint apply_versor(const Versor& v, const ConformalPoint& x) {
  // The image of a point under a versor is null by construction.
  return normalize_point_rel(apply_versor(v, x.mv()));
}

Multivector reflect_vector(const Multivector& a, const Multivector& m) {
  detail::require_same_signature(a, m);
  require_euclidean_vector(a, "reflect_vector");
  require_euclidean_vector(m, "reflect_vector");
  Multivector unit = m;
  const double m2 = scalar_part(geometric_product(m, m));
  if (std::fabs(m2 - 1.0) >= 1e-6) {
    throw GeomError("reflect_vector: mirror vector is not unit");
  }
  if (m2 != 1.0) unit = m / std::sqrt(m2);
  return -geometric_product(geometric_product(unit, a), unit);
}

EuclideanVector reflect_vector(const EuclideanVector& a, const EuclideanVector& m) {
  return euclidean_part(reflect_vector(euclidean_mv(a), euclidean_mv(m)));
}

Versor translator(const Multivector& a) {
  require_euclidean_vector(a, "translator");
  const Multivector gen =
      geometric_product(n_infinity(a.signature()), a) * 0.5;
  return Versor(exp_bivector(gen));  // 1 + na/2: the series terminates
}

Versor translator(const EuclideanVector& a) { return translator(euclidean_mv(a)); }

Versor rotor_euclidean(const Multivector& plane, double angle) {
  if (!is_homogeneous(plane, 2, 1e-9)) {
    throw GeomError("rotor_euclidean: plane is not a pure bivector");
  }
  const int d = euclidean_dim(plane.signature());
  const std::uint32_t extra_bits = (1u << d) | (1u << (d + 1));
  for (std::uint32_t i = 0; i < plane.signature().blade_count(); ++i) {
    if ((i & extra_bits) != 0 && std::fabs(plane[i]) > 1e-12 * plane.norm()) {
      throw GeomError("rotor_euclidean: plane is not Euclidean");
    }
  }
  const double sq = scalar_part(geometric_product(plane, plane));
  if (std::fabs(sq + 1.0) >= 1e-6) {
    throw GeomError("rotor_euclidean: plane bivector is not unit");
  }
  Multivector unit = plane;
  if (sq != -1.0) unit = plane / std::sqrt(-sq);
  return Versor(exp_bivector(unit * (-angle / 2.0)));
}

Versor rotor_about_point(const Versor& r, const EuclideanVector& a) {
  const Versor t = translator(a);
  return Versor(geometric_product(
      geometric_product(t.mv(), r.mv()), reverse(t.mv())));
}

Multivector reflect_in_flat_or_sphere(const Multivector& l, const Multivector& p) {
  detail::require_same_signature(l, p);
  const double p2 = scalar_part(geometric_product(p, p));
  if (std::fabs(p2) <= 1e-12 * p.norm() * p.norm()) {
    throw GeomError("reflect: mirror blade squares to zero");
  }
  const Multivector raw = geometric_product(geometric_product(p, l), p);
  const int r = dominant_grade(l);
  const Multivector out = grade_project(raw, r);
  const double leak = (raw - out).norm();
  if (leak > kGradeLeakTol * std::max(raw.norm(), 1e-300)) {
    throw GeomError("reflect: sandwich left the operand's grade (not a blade?)");
  }
  return out;
}

Multivector tangent_plane(const Multivector& s, const ConformalPoint& x, double tol) {
  const Multivector& xv = x.mv();
  detail::require_same_signature(xv, s);
  const Multivector incidence = outer_product(xv, s);
  if (incidence.norm() > tol * xv.norm() * s.norm()) {
    throw GeomError("tangent_plane: point does not lie on the surface");
  }
  return outer_product(inner_product(xv, s), n_infinity(s.signature()));
}

}  // namespace cga
