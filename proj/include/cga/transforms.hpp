#pragma once

#include "cga/conformal.hpp"
#include "cga/multivector.hpp"

namespace cga {

/// V reverse(V) must equal 1 within this for validated versors.
inline constexpr double kVersorUnitTol = 1e-10;
/// Residual other-grade content allowed after a sandwich, relative.
inline constexpr double kGradeLeakTol = 1e-9;
/// Membership tolerance for "point lies on primitive" checks, relative.
inline constexpr double kOnSurfaceEps = 1e-6;

/// Even multivector V with V reverse(V) = 1. Acts on blades by the sandwich
/// V A reverse(V); V and -V act identically.
class Versor {
 public:
  /// Validates evenness and unit normalization.
  static Versor from(const Multivector& mv, double tol = kVersorUnitTol);

  const Multivector& mv() const { return mv_; }
  const Signature& signature() const { return mv_.signature(); }
  Versor reversed() const { return Versor(reverse(mv_)); }

  friend Versor operator*(const Versor& a, const Versor& b) {
    return Versor(geometric_product(a.mv_, b.mv_));
  }

 private:
  explicit Versor(Multivector mv) : mv_(std::move(mv)) {}

  friend Versor translator(const Multivector&);
  friend Versor rotor_euclidean(const Multivector&, double);
  friend Versor rotor_about_point(const Versor&, const EuclideanVector&);

  Multivector mv_;
};

/// Sandwich action V A reverse(V); grade-preserving on blades.
Multivector apply_versor(const Versor& v, const Multivector& a);
/// Point overload; renormalizes the image.
ConformalPoint apply_versor(const Versor& v, const ConformalPoint& x);

/// Reflection of a Euclidean vector in the hyperplane perpendicular to the
/// unit vector m: a -> -mam = a - 2(a.m)m. m is renormalized silently when
/// |m^2 - 1| < 1e-6 and rejected otherwise.
Multivector reflect_vector(const Multivector& a, const Multivector& m);
EuclideanVector reflect_vector(const EuclideanVector& a, const EuclideanVector& m);

/// Translation versor T_a = 1 + n a / 2; moves embed(x) to embed(x+a).
Versor translator(const EuclideanVector& a);
/// Multivector overload; rejects operands with e/ebar components.
Versor translator(const Multivector& a);

/// Rotation by angle about the origin in a unit Euclidean bivector plane:
/// exp(-angle * plane / 2). With plane = e1^e2 and angle pi/2, e1 maps to e2.
Versor rotor_euclidean(const Multivector& plane, double angle);

/// Conjugate an origin-fixing rotor to act about the point a instead.
Versor rotor_about_point(const Versor& r, const EuclideanVector& a);

/// Reflect the line/circle blade L in the flat or spherical mirror P:
/// P L P, projected back onto grade(L). A spherical P performs an inversion.
Multivector reflect_in_flat_or_sphere(const Multivector& l, const Multivector& p);

/// Tangent flat (X . S) ^ n to the sphere or circle S at a point X on it.
Multivector tangent_plane(const Multivector& s, const ConformalPoint& x,
                          double tol = kOnSurfaceEps);

}  // namespace cga
