#pragma once

#include <Eigen/Core>
#include <bit>
#include <cstdint>

#include "cga/signature.hpp"

namespace cga {

/// Dense multivector over the 2^(p+q) basis blades of one algebra. The blade
/// index is a bitmask: bit i set <=> basis vector i is a factor, factors in
/// ascending index order. All operations are pure and return new values.
class Multivector {
 public:
  explicit Multivector(const Signature& sig)
      : sig_(sig), c_(Eigen::VectorXd::Zero(sig.blade_count())) {}

  static Multivector scalar(const Signature& sig, double value) {
    Multivector m(sig);
    m.c_[0] = value;
    return m;
  }

  static Multivector basis_vector(const Signature& sig, int i) {
    if (i < 0 || i >= sig.dims()) throw GeomError("basis vector index out of range");
    return basis_blade(sig, 1u << i);
  }

  static Multivector basis_blade(const Signature& sig, std::uint32_t mask,
                                 double coeff = 1.0) {
    if (mask >= sig.blade_count()) throw GeomError("blade mask out of range");
    Multivector m(sig);
    m.c_[mask] = coeff;
    return m;
  }

  const Signature& signature() const { return sig_; }
  const Eigen::VectorXd& coeffs() const { return c_; }
  Eigen::VectorXd& coeffs() { return c_; }

  double operator[](std::uint32_t mask) const { return c_[mask]; }
  double& operator[](std::uint32_t mask) { return c_[mask]; }

  /// Euclidean norm of the coefficient vector (used for relative tolerances).
  double norm() const { return c_.norm(); }
  bool is_finite() const { return c_.allFinite(); }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s) {
    c_ *= s;
    return *this;
  }
  Multivector& operator/=(double s) {
    c_ /= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a /= s; }
  friend Multivector operator-(Multivector a) {
    a.c_ = -a.c_;
    return a;
  }

 private:
  Signature sig_;
  Eigen::VectorXd c_;
};

/// Bilinear extension of the basis-blade product over all coefficient pairs.
Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Grade-raising part: blade pairs with no shared factor.
Multivector outer_product(const Multivector& a, const Multivector& b);

/// Grade-|r-s| part of the geometric product for homogeneous operands of
/// grades r,s >= 1; any scalar operand contributes zero.
Multivector inner_product(const Multivector& a, const Multivector& b);

/// Keep only coefficients whose blade has population count r.
Multivector grade_project(const Multivector& a, int r);

/// Reversion: grade-r part scaled by (-1)^(r(r-1)/2).
Multivector reverse(const Multivector& a);

/// Highest-grade basis blade. In G(3,1) the blade is oriented e1 e2 ebar e
/// (= -e1e2e ebar in ascending factor order); elsewhere it is the ascending
/// full blade. Both conformal pseudoscalars square to -1.
Multivector pseudoscalar(const Signature& sig);

/// Left multiplication by the pseudoscalar.
Multivector dual(const Multivector& a);

double scalar_part(const Multivector& a);

/// sqrt(|<A reverse(A)>_0|).
double magnitude(const Multivector& a);

/// Norm of the grade-r slice.
double grade_norm(const Multivector& a, int r);

/// Grade with the largest coefficient norm (0 for the zero multivector).
int dominant_grade(const Multivector& a);

/// True when all content outside grade r is below rel_tol * norm.
bool is_homogeneous(const Multivector& a, int r, double rel_tol = 1e-12);

/// Exponential of a simple (blade) bivector B: 1+B when B^2 = 0,
/// cos t + B sin t / t when B^2 = -t^2, cosh t + B sinh t / t when B^2 = t^2.
Multivector exp_bivector(const Multivector& b);

/// Geometric product shorthand.
inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}
/// Outer product shorthand; parenthesize, ^ binds loosely.
inline Multivector operator^(const Multivector& a, const Multivector& b) {
  return outer_product(a, b);
}

namespace detail {
inline void require_same_signature(const Multivector& a, const Multivector& b) {
  if (!(a.signature() == b.signature())) {
    throw GeomError("signature mismatch between multivector operands");
  }
}
}  // namespace detail

}  // namespace cga
