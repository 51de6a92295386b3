#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cga/errors.hpp"

namespace cga {

/// Metric signature (p,q): basis vectors 0..p-1 square to +1, the remaining
/// q square to -1. Conformal algebras order the basis [e1..ed, e, ebar], so
/// Euclidean coordinates occupy the low bitmask bits.
struct Signature {
  int p = 0;
  int q = 0;

  int dims() const { return p + q; }
  std::uint32_t blade_count() const { return 1u << dims(); }
  double metric(int i) const { return i < p ? 1.0 : -1.0; }

  friend bool operator==(const Signature&, const Signature&) = default;

  /// Validated constructor; the engine supports p+q <= 8.
  static Signature make(int p, int q);

  /// Conformal algebra G(d+1,1) of Euclidean dimension d in {2,3}.
  static Signature conformal(int d);
};

/// Geometric product of two basis blades. The result blade is a XOR b; the
/// sign counts the transpositions needed to merge the two ascending factor
/// lists, times the metric of every shared factor.
std::pair<int, std::uint32_t> blade_product(std::uint32_t a, std::uint32_t b,
                                            const Signature& sig);

/// Dense sign table over all blade pairs of one signature. Built once per
/// signature on first use and read-only afterwards, so concurrent readers
/// are safe.
class CayleyTable {
 public:
  static const CayleyTable& of(const Signature& sig);

  const Signature& signature() const { return sig_; }

  double sign(std::uint32_t a, std::uint32_t b) const {
    return signs_[(std::size_t(a) << sig_.dims()) | b];
  }
  const double* row(std::uint32_t a) const {
    return signs_.data() + (std::size_t(a) << sig_.dims());
  }

 private:
  explicit CayleyTable(const Signature& sig);

  Signature sig_;
  std::vector<double> signs_;
};

}  // namespace cga
