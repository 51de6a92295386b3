#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cga/conformal.hpp"
#include "support/checks.hpp"
#include "support/oracles.hpp"

using namespace cga;
using checks::mv_close;

namespace {

EuclideanVector vec2(double x, double y) {
  EuclideanVector v(2);
  v << x, y;
  return v;
}

EuclideanVector vec3(double x, double y, double z) {
  EuclideanVector v(3);
  v << x, y, z;
  return v;
}

}  // namespace

TEST_CASE("stereographic image is a unit vector consistent with the embedding") {
  std::mt19937_64 rng(101);
  for (int d : {2, 3}) {
    const Signature sig = Signature::conformal(d);
    for (int k = 0; k < 500; ++k) {
      const EuclideanVector x = oracles::random_point(rng, d);
      const Multivector s = stereographic(x);
      CHECK(scalar_part(s * s) == doctest::Approx(1.0).epsilon(1e-12));

      const Multivector on_cone = s + e_minus(sig);
      CHECK(std::fabs(dot(on_cone, on_cone)) <= 1e-12);

      // scaled by (1 + x^2) the null lift is the standard embedding
      const Multivector lifted = on_cone * (1.0 + x.squaredNorm());
      CHECK(mv_close(lifted, embed(x).mv(), 1e-10));
    }
  }

  // |x| = 1 projects onto the equator: S(x) = x
  const EuclideanVector unit = vec3(1, 0, 0);
  CHECK(mv_close(stereographic(unit), euclidean_mv(unit), 1e-15));

  // x = 0: S + ebar is proportional to -nbar
  const Multivector at0 = stereographic(vec3(0, 0, 0)) + e_minus(Signature::conformal(3));
  CHECK(mv_close(at0, -n_bar(Signature::conformal(3)), 1e-15));
}

TEST_CASE("embedding fundamentals") {
  const Signature g41 = Signature::conformal(3);
  // origin maps to -nbar
  CHECK(checks::mv_equal(embed(vec3(0, 0, 0)).mv(), -n_bar(g41)));

  // unit point: 2 e1 + n - nbar, X.n = -2, X^2 = 0
  const Multivector x1 = embed(vec3(1, 0, 0)).mv();
  const Multivector expected = euclidean_mv(vec3(1, 0, 0)) * 2.0 + n_infinity(g41) - n_bar(g41);
  CHECK(checks::mv_equal(x1, expected));
  CHECK(dot(x1, n_infinity(g41)) == -2.0);
  CHECK(std::fabs(dot(x1, x1)) <= 1e-15);

  std::mt19937_64 rng(103);
  for (int d : {2, 3}) {
    const Signature sig = Signature::conformal(d);
    for (int k = 0; k < 1000; ++k) {
      const Multivector x = embed(oracles::random_point(rng, d)).mv();
      // X.n = (x^2-1) - (x^2+1): exactly -2 up to rounding in x^2
      CHECK(std::fabs(dot(x, n_infinity(sig)) + 2.0) <= 1e-13 * (1.0 + x.norm()));
      CHECK(std::fabs(dot(x, x)) <= 1e-10);
    }
  }
}

TEST_CASE("normalize_point") {
  const EuclideanVector p = vec3(3, -2, 7);
  const Multivector x = embed(p).mv();

  // homogeneity: any rescaling normalizes back
  CHECK(mv_close(normalize_point(x * 5.0).mv(), x, 1e-13));
  CHECK(mv_close(normalize_point(x * -0.25).mv(), x, 1e-13));

  // idempotent
  const ConformalPoint once = normalize_point(x * 3.0);
  CHECK(mv_close(normalize_point(once.mv()).mv(), once.mv(), 1e-15));

  const Signature g41 = Signature::conformal(3);
  CHECK_THROWS_WITH_AS(normalize_point(n_infinity(g41)),
                       doctest::Contains("infinity"), GeomError);
  CHECK_THROWS_AS(normalize_point(Multivector::basis_vector(g41, 0)), GeomError);

  // tolerance is configurable
  Multivector off = x;
  off[1u << 0] += 1e-3;
  CHECK_THROWS_AS(normalize_point(off), GeomError);
  CHECK_NOTHROW(normalize_point(off, 1e-2));
}

TEST_CASE("extract_point round trips") {
  const EuclideanVector p = vec3(3, 4, 0);
  CHECK((extract_point(embed(p)) - p).norm() == 0.0);
  CHECK((extract_point(embed(p).mv() * 7.0) - p).norm() <= 1e-12);

  std::mt19937_64 rng(107);
  for (int d : {2, 3}) {
    for (int k = 0; k < 1000; ++k) {
      const EuclideanVector x = oracles::random_point(rng, d);
      CHECK((extract_point(embed(x)) - x).norm() <= 1e-12);
    }
  }
}

TEST_CASE("distance") {
  CHECK(distance(embed(vec3(1, 0, 0)), embed(vec3(-1, 0, 0))) ==
        doctest::Approx(2.0).epsilon(1e-14));

  const Multivector x = embed(vec2(0.5, -2)).mv();
  CHECK(distance(x, x * 3.0) == 0.0);

  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int d : {2, 3}) {
    for (int k = 0; k < 1000; ++k) {
      const EuclideanVector a = oracles::random_point(rng, d);
      const EuclideanVector b = oracles::random_point(rng, d);
      const double expected = (a - b).norm();
      const double got = distance(embed(a).mv(), embed(b).mv());
      CHECK(std::fabs(got - expected) <= 1e-10 * std::max(1.0, expected));

      // invariant under independent homogeneous rescaling
      const double lam = scale(rng), mu = -scale(rng);
      const double rescaled = distance(embed(a).mv() * lam, embed(b).mv() * mu);
      CHECK(std::fabs(rescaled - expected) <= 1e-10 * std::max(1.0, expected));
    }
  }

  const Signature g41 = Signature::conformal(3);
  CHECK_THROWS_AS(distance(n_infinity(g41), embed(vec3(1, 2, 3)).mv()), GeomError);
  CHECK_THROWS_AS(distance(Multivector::basis_vector(g41, 0), embed(vec3(1, 2, 3)).mv()),
                  GeomError);
}

TEST_CASE("euclidean helpers") {
  const EuclideanVector v = vec3(1, -2, 3);
  CHECK((euclidean_part(euclidean_mv(v)) - v).norm() == 0.0);
  CHECK_THROWS_AS(euclidean_dim(Signature::make(3, 0)), GeomError);
}
