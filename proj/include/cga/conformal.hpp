#pragma once

#include <Eigen/Core>

#include "cga/multivector.hpp"

namespace cga {

/// Euclidean coordinate vector, d in {2,3}. Fixed capacity, no heap.
using EuclideanVector = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 3, 1>;

/// Scale-aware null tolerance: X is a point when |X^2| <= eps * (X.n)^2.
inline constexpr double kNullEps = 1e-9;
/// X.n below this (relative to |X|) marks the point at infinity.
inline constexpr double kInfinityEps = 1e-9;

/// Euclidean dimension d of a conformal signature G(d+1,1).
int euclidean_dim(const Signature& sig);
/// Conformal signature owning a Euclidean vector of this size.
Signature conformal_sig_for(const EuclideanVector& x);

/// The two extra basis directions: e squares to +1, ebar to -1.
Multivector e_plus(const Signature& sig);
Multivector e_minus(const Signature& sig);
/// Null basis n = e + ebar (the point at infinity) and nbar = e - ebar.
Multivector n_infinity(const Signature& sig);
Multivector n_bar(const Signature& sig);

/// Grade-1 multivector with the given Euclidean components and nothing else.
Multivector euclidean_mv(const EuclideanVector& x);
/// Euclidean slice of a grade-1 multivector.
EuclideanVector euclidean_part(const Multivector& a);

/// A finite Euclidean point as a null vector, normalized to X.n = -2.
class ConformalPoint {
 public:
  const Multivector& mv() const { return mv_; }
  const Signature& signature() const { return mv_.signature(); }

 private:
  friend ConformalPoint embed(const EuclideanVector&);
  friend ConformalPoint normalize_point(const Multivector&, double);
  friend ConformalPoint normalize_point_rel(const Multivector&, double);
  explicit ConformalPoint(Multivector mv) : mv_(std::move(mv)) {}

  Multivector mv_;
};

/// Image of x on the unit sphere: 2x/(1+x^2) - ((1-x^2)/(1+x^2)) e.
/// Unit vector; (stereographic(x) + ebar) is null and, scaled by (1+x^2),
/// equals embed(x).
Multivector stereographic(const EuclideanVector& x);

/// Null-vector embedding X = 2x + x^2 n - nbar, with X.n = -2.
ConformalPoint embed(const EuclideanVector& x);

/// Rescale a null grade-1 multivector to the standard X.n = -2 form.
/// Throws when X is not null within tolerance or represents the point at
/// infinity.
ConformalPoint normalize_point(const Multivector& x, double eps = kNullEps);

/// As normalize_point, but the null check is relative to the coefficient
/// norm (|X^2| <= eps |X|^2) instead of (X.n)^2. Suited to vectors that are
/// null by construction (extracted centers, decoded meet points), whose
/// homogeneous weight can be far smaller than their coefficients.
ConformalPoint normalize_point_rel(const Multivector& x, double eps = kNullEps);

/// Euclidean coordinates of a point: x_i = (coefficient of e_i) / 2 after
/// normalization.
EuclideanVector extract_point(const ConformalPoint& x);
EuclideanVector extract_point(const Multivector& x, double eps = kNullEps);

/// Euclidean distance sqrt(-2 X.Y / ((X.n)(Y.n))); invariant under
/// independent rescaling of either argument.
double distance(const Multivector& x, const Multivector& y, double eps = kNullEps);
double distance(const ConformalPoint& x, const ConformalPoint& y);

/// <x . y>_0 for grade-1 operands.
double dot(const Multivector& x, const Multivector& y);

bool is_null_vector(const Multivector& x, double eps = kNullEps);
bool is_point_at_infinity(const Multivector& x, double eps = kNullEps);

}  // namespace cga
