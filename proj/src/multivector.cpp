#include "cga/multivector.hpp"

#include <cmath>
#include <cstdlib>

namespace cga {

Multivector& Multivector::operator+=(const Multivector& o) {
  detail::require_same_signature(*this, o);
  c_ += o.c_;
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  detail::require_same_signature(*this, o);
  c_ -= o.c_;
  return *this;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  detail::require_same_signature(a, b);
  const Signature sig = a.signature();
  const CayleyTable& tbl = CayleyTable::of(sig);
  const std::uint32_t n = sig.blade_count();

  Multivector out(sig);
  const Eigen::VectorXd& ac = a.coeffs();
  const Eigen::VectorXd& bc = b.coeffs();
  Eigen::VectorXd& rc = out.coeffs();
  for (std::uint32_t i = 0; i < n; ++i) {
    const double ai = ac[i];
    if (ai == 0.0) continue;
    const double* row = tbl.row(i);
    for (std::uint32_t j = 0; j < n; ++j) {
      rc[i ^ j] += row[j] * ai * bc[j];
    }
  }
  return out;
}

Multivector outer_product(const Multivector& a, const Multivector& b) {
  detail::require_same_signature(a, b);
  const Signature sig = a.signature();
  const CayleyTable& tbl = CayleyTable::of(sig);
  const std::uint32_t n = sig.blade_count();

  Multivector out(sig);
  const Eigen::VectorXd& ac = a.coeffs();
  const Eigen::VectorXd& bc = b.coeffs();
  Eigen::VectorXd& rc = out.coeffs();
  for (std::uint32_t i = 0; i < n; ++i) {
    const double ai = ac[i];
    if (ai == 0.0) continue;
    const double* row = tbl.row(i);
    for (std::uint32_t j = 0; j < n; ++j) {
      if ((i & j) != 0) continue;  // shared factor: contraction, not extension
      rc[i | j] += row[j] * ai * bc[j];
    }
  }
  return out;
}

Multivector inner_product(const Multivector& a, const Multivector& b) {
  detail::require_same_signature(a, b);
  const Signature sig = a.signature();
  const CayleyTable& tbl = CayleyTable::of(sig);
  const std::uint32_t n = sig.blade_count();

  Multivector out(sig);
  const Eigen::VectorXd& ac = a.coeffs();
  const Eigen::VectorXd& bc = b.coeffs();
  Eigen::VectorXd& rc = out.coeffs();
  for (std::uint32_t i = 1; i < n; ++i) {  // scalar operand contributes zero
    const double ai = ac[i];
    if (ai == 0.0) continue;
    const int ri = std::popcount(i);
    const double* row = tbl.row(i);
    for (std::uint32_t j = 1; j < n; ++j) {
      const int rj = std::popcount(j);
      if (std::popcount(i ^ j) != std::abs(ri - rj)) continue;
      rc[i ^ j] += row[j] * ai * bc[j];
    }
  }
  return out;
}

Multivector grade_project(const Multivector& a, int r) {
  const Signature sig = a.signature();
  if (r < 0 || r > sig.dims()) {
    throw GeomError("grade out of range for signature");
  }
  Multivector out(sig);
  for (std::uint32_t i = 0; i < sig.blade_count(); ++i) {
    if (std::popcount(i) == r) out[i] = a[i];
  }
  return out;
}

Multivector reverse(const Multivector& a) {
  Multivector out = a;
  for (std::uint32_t i = 0; i < a.signature().blade_count(); ++i) {
    const int r = std::popcount(i);
    if (((r * (r - 1) / 2) & 1) != 0) out[i] = -out[i];
  }
  return out;
}

Multivector pseudoscalar(const Signature& sig) {
  const std::uint32_t full = sig.blade_count() - 1;
  const double orient = (sig == Signature{3, 1}) ? -1.0 : 1.0;
  return Multivector::basis_blade(sig, full, orient);
}

Multivector dual(const Multivector& a) {
  return geometric_product(pseudoscalar(a.signature()), a);
}

double scalar_part(const Multivector& a) { return a[0]; }

double magnitude(const Multivector& a) {
  return std::sqrt(std::fabs(scalar_part(geometric_product(a, reverse(a)))));
}

double grade_norm(const Multivector& a, int r) {
  double s = 0.0;
  for (std::uint32_t i = 0; i < a.signature().blade_count(); ++i) {
    if (std::popcount(i) == r) s += a[i] * a[i];
  }
  return std::sqrt(s);
}

int dominant_grade(const Multivector& a) {
  int best = 0;
  double best_norm = -1.0;
  for (int r = 0; r <= a.signature().dims(); ++r) {
    const double g = grade_norm(a, r);
    if (g > best_norm) {
      best_norm = g;
      best = r;
    }
  }
  return best;
}

bool is_homogeneous(const Multivector& a, int r, double rel_tol) {
  const double total = a.norm();
  if (total == 0.0) return true;
  double rest = 0.0;
  for (std::uint32_t i = 0; i < a.signature().blade_count(); ++i) {
    if (std::popcount(i) != r) rest += a[i] * a[i];
  }
  return std::sqrt(rest) <= rel_tol * total;
}

Multivector exp_bivector(const Multivector& b) {
  const Signature sig = b.signature();
  if (!is_homogeneous(b, 2)) {
    throw GeomError("exp_bivector: operand is not a pure bivector");
  }
  const double nb = b.norm();
  if (nb == 0.0) return Multivector::scalar(sig, 1.0);

  const Multivector sq = geometric_product(b, b);
  const double sigma = scalar_part(sq);
  double rest = 0.0;
  for (std::uint32_t i = 1; i < sig.blade_count(); ++i) rest += sq[i] * sq[i];
  rest = std::sqrt(rest);
  if (rest > 1e-9 * nb * nb) {
    throw GeomError("exp_bivector: non-simple bivector (square is not scalar)");
  }

  if (std::fabs(sigma) <= 1e-12 * nb * nb) {  // null generator: series terminates
    return Multivector::scalar(sig, 1.0) + b;
  }
  if (sigma < 0.0) {
    const double t = std::sqrt(-sigma);
    return Multivector::scalar(sig, std::cos(t)) + b * (std::sin(t) / t);
  }
  const double t = std::sqrt(sigma);
  return Multivector::scalar(sig, std::cosh(t)) + b * (std::sinh(t) / t);
}

}  // namespace cga
