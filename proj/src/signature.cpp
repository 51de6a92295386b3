#include "cga/signature.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace cga {

Signature Signature::make(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1 || p + q > 8) {
    throw GeomError("unsupported signature (" + std::to_string(p) + "," +
                    std::to_string(q) + "): need p,q >= 0 and 1 <= p+q <= 8");
  }
  return Signature{p, q};
}

Signature Signature::conformal(int d) {
  if (d != 2 && d != 3) {
    throw GeomError("conformal model supports Euclidean dimension 2 or 3");
  }
  return Signature{d + 1, 1};
}

std::pair<int, std::uint32_t> blade_product(std::uint32_t a, std::uint32_t b,
                                            const Signature& sig) {
  const std::uint32_t all = sig.blade_count() - 1;
  if ((a & ~all) != 0 || (b & ~all) != 0) {
    throw GeomError("blade mask out of range for signature");
  }
  // Count pairs (i in a, j in b) with i > j: each needs one transposition to
  // bring the concatenated factor list into ascending order.
  int swaps = 0;
  for (std::uint32_t t = a >> 1; t != 0; t >>= 1) {
    swaps += std::popcount(t & b);
  }
  int sign = (swaps & 1) ? -1 : 1;
  // Shared factors contract to their metric square.
  for (std::uint32_t c = a & b; c != 0; c &= c - 1) {
    if (sig.metric(std::countr_zero(c)) < 0.0) sign = -sign;
  }
  return {sign, a ^ b};
}

const CayleyTable& CayleyTable::of(const Signature& sig) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<CayleyTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{sig.p, sig.q}];
  if (!slot) slot.reset(new CayleyTable(sig));
  return *slot;
}

CayleyTable::CayleyTable(const Signature& sig) : sig_(Signature::make(sig.p, sig.q)) {
  const std::uint32_t n = sig_.blade_count();
  signs_.resize(std::size_t(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    double* row = signs_.data() + (std::size_t(a) << sig_.dims());
    for (std::uint32_t b = 0; b < n; ++b) {
      row[b] = static_cast<double>(blade_product(a, b, sig_).first);
    }
  }
}

}  // namespace cga
