#include "cga/conformal.hpp"

#include <cmath>

namespace cga {

namespace {

int e_index(const Signature& sig) { return euclidean_dim(sig); }
int ebar_index(const Signature& sig) { return euclidean_dim(sig) + 1; }

void require_grade1(const Multivector& x, const char* what) {
  if (!is_homogeneous(x, 1, 1e-9)) {
    throw GeomError(std::string(what) + ": operand is not a grade-1 vector");
  }
}

}  // namespace

int euclidean_dim(const Signature& sig) {
  const int d = sig.p - 1;
  if (sig.q != 1 || (d != 2 && d != 3)) {
    throw GeomError("not a supported conformal signature (need G(3,1) or G(4,1))");
  }
  return d;
}

Signature conformal_sig_for(const EuclideanVector& x) {
  return Signature::conformal(static_cast<int>(x.size()));
}

Multivector e_plus(const Signature& sig) {
  return Multivector::basis_vector(sig, e_index(sig));
}

Multivector e_minus(const Signature& sig) {
  return Multivector::basis_vector(sig, ebar_index(sig));
}

Multivector n_infinity(const Signature& sig) {
  Multivector n(sig);
  n[1u << e_index(sig)] = 1.0;
  n[1u << ebar_index(sig)] = 1.0;
  return n;
}

Multivector n_bar(const Signature& sig) {
  Multivector n(sig);
  n[1u << e_index(sig)] = 1.0;
  n[1u << ebar_index(sig)] = -1.0;
  return n;
}

Multivector euclidean_mv(const EuclideanVector& x) {
  const Signature sig = conformal_sig_for(x);
  Multivector m(sig);
  for (int i = 0; i < x.size(); ++i) m[1u << i] = x[i];
  return m;
}

EuclideanVector euclidean_part(const Multivector& a) {
  const int d = euclidean_dim(a.signature());
  EuclideanVector x(d);
  for (int i = 0; i < d; ++i) x[i] = a[1u << i];
  return x;
}

Multivector stereographic(const EuclideanVector& x) {
  if (!x.allFinite()) throw GeomError("stereographic: non-finite coordinates");
  const Signature sig = conformal_sig_for(x);
  const double x2 = x.squaredNorm();
  const double denom = 1.0 + x2;
  Multivector s(sig);
  for (int i = 0; i < x.size(); ++i) s[1u << i] = 2.0 * x[i] / denom;
  s[1u << e_index(sig)] = -(1.0 - x2) / denom;
  return s;
}

ConformalPoint embed(const EuclideanVector& x) {
  if (!x.allFinite()) throw GeomError("embed: non-finite coordinates");
  const Signature sig = conformal_sig_for(x);
  const double x2 = x.squaredNorm();
  Multivector m(sig);
  for (int i = 0; i < x.size(); ++i) m[1u << i] = 2.0 * x[i];
  m[1u << e_index(sig)] = x2 - 1.0;   // x^2 n - nbar, n = e + ebar
  m[1u << ebar_index(sig)] = x2 + 1.0;
  return ConformalPoint(std::move(m));
}

double dot(const Multivector& x, const Multivector& y) {
  return scalar_part(inner_product(x, y));
}

bool is_null_vector(const Multivector& x, double eps) {
  const double x2 = dot(x, x);
  const double xn = dot(x, n_infinity(x.signature()));
  // |X^2| <= eps (X.n)^2, floored so multiples of n (X.n = 0) still pass.
  const double scale = std::max(xn * xn, eps * x.norm() * x.norm());
  return std::fabs(x2) <= eps * scale;
}

bool is_point_at_infinity(const Multivector& x, double eps) {
  const double xn = dot(x, n_infinity(x.signature()));
  return std::fabs(xn) <= eps * x.norm();
}

namespace {

// Validates and returns the rescale factor bringing X.n to -2.
double point_rescale_factor(const Multivector& x, double eps, bool scale_by_weight) {
  require_grade1(x, "normalize_point");
  if (x.norm() == 0.0) throw GeomError("normalize_point: zero vector");
  const double xn = dot(x, n_infinity(x.signature()));
  if (std::fabs(xn) <= kInfinityEps * x.norm()) {
    throw GeomError("normalize_point: point at infinity");
  }
  const double x2 = dot(x, x);
  const double scale = scale_by_weight ? xn * xn : x.norm() * x.norm();
  if (std::fabs(x2) > eps * scale) {
    throw GeomError("normalize_point: vector is not null (not a point)");
  }
  return -2.0 / xn;
}

}  // namespace

ConformalPoint normalize_point(const Multivector& x, double eps) {
  const double f = point_rescale_factor(x, eps, true);
  return ConformalPoint(grade_project(x * f, 1));
}

ConformalPoint normalize_point_rel(const Multivector& x, double eps) {
  const double f = point_rescale_factor(x, eps, false);
  return ConformalPoint(grade_project(x * f, 1));
}

EuclideanVector extract_point(const ConformalPoint& x) {
  return euclidean_part(x.mv()) / 2.0;
}

EuclideanVector extract_point(const Multivector& x, double eps) {
  return extract_point(normalize_point(x, eps));
}

double distance(const Multivector& x, const Multivector& y, double eps) {
  detail::require_same_signature(x, y);
  require_grade1(x, "distance");
  require_grade1(y, "distance");
  const Multivector n = n_infinity(x.signature());
  const double xn = dot(x, n);
  const double yn = dot(y, n);
  if (std::fabs(xn) <= kInfinityEps * x.norm() ||
      std::fabs(yn) <= kInfinityEps * y.norm()) {
    throw GeomError("distance: operand is the point at infinity");
  }
  if (!is_null_vector(x, eps) || !is_null_vector(y, eps)) {
    throw GeomError("distance: operand is not a point (not null)");
  }
  const double d2 = -2.0 * dot(x, y) / (xn * yn);
  return std::sqrt(std::max(0.0, d2));
}

double distance(const ConformalPoint& x, const ConformalPoint& y) {
  return distance(x.mv(), y.mv());
}

}  // namespace cga
