#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cga/meet.hpp"
#include "cga/transforms.hpp"
#include "support/checks.hpp"
#include "support/oracles.hpp"

using namespace cga;
using checks::rel_diff;

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

const Signature g31 = Signature::conformal(2);
const Signature g41 = Signature::conformal(3);

CircleOrLine unit_circle_2d(const EuclideanVector& c, double r) {
  return circle_through(embed(EuclideanVector(c + vec2(r, 0))),
                        embed(EuclideanVector(c + vec2(0, r))),
                        embed(EuclideanVector(c + vec2(-r, 0))));
}

bool contains_point(const std::vector<EuclideanVector>& pts,
                    const EuclideanVector& x, double tol = 1e-8) {
  for (const auto& p : pts) {
    if ((p - x).norm() <= tol) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("meet_lines_2d: circle and axis line") {
  const CircleOrLine circle = unit_circle_2d(vec2(0, 0), 1.0);
  const CircleOrLine axis = line_through(embed(vec2(0, 0)), embed(vec2(1, 0)));

  const MeetOutcome m = meet_lines_2d(circle, axis);
  CHECK(m.kind == MeetKind::TwoPoints);
  CHECK(!m.at_infinity);
  REQUIRE(m.points.size() == 2);
  CHECK(contains_point(m.points, vec2(1, 0)));
  CHECK(contains_point(m.points, vec2(-1, 0)));
}

TEST_CASE("meet_lines_2d: crossing straight lines put one point at infinity") {
  const CircleOrLine l1 = line_through(embed(vec2(0, 0)), embed(vec2(1, 1)));
  const CircleOrLine l2 = line_through(embed(vec2(2, 0)), embed(vec2(2, 5)));

  const MeetOutcome m = meet_lines_2d(l1, l2);
  CHECK(m.kind == MeetKind::TwoPoints);
  CHECK(m.at_infinity);
  REQUIRE(m.points.size() == 1);
  CHECK((m.points[0] - vec2(2, 2)).norm() <= 1e-10);
}

TEST_CASE("meet_lines_2d: parallel lines are tangent at infinity") {
  const CircleOrLine l1 = line_through(embed(vec2(0, 0)), embed(vec2(1, 0)));
  const CircleOrLine l2 = line_through(embed(vec2(0, 1)), embed(vec2(1, 1)));

  const MeetOutcome m = meet_lines_2d(l1, l2);
  CHECK(m.kind == MeetKind::TangentPoint);
  CHECK(m.at_infinity);
  CHECK(m.points.empty());
}

TEST_CASE("meet_lines_2d: distant circles are empty, coincident rejected") {
  const CircleOrLine c1 = unit_circle_2d(vec2(0, 0), 1.0);
  const CircleOrLine c2 = unit_circle_2d(vec2(3, 0), 1.0);
  CHECK(meet_lines_2d(c1, c2).kind == MeetKind::Empty);

  const CircleOrLine c1_scaled{c1.blade * -2.5};
  CHECK_THROWS_WITH_AS(meet_lines_2d(c1, c1_scaled),
                       doctest::Contains("coincident"), GeomError);
}

TEST_CASE("meet_lines_2d: circle-circle across the tangency sweep") {
  // unit circles at (0,0) and (d,0): intersect iff d < 2, tangent at d = 2
  for (double d : {0.5, 1.0, 1.5, 1.9, 1.99}) {
    const MeetOutcome m =
        meet_lines_2d(unit_circle_2d(vec2(0, 0), 1), unit_circle_2d(vec2(d, 0), 1));
    CHECK(m.kind == MeetKind::TwoPoints);
    REQUIRE(m.points.size() == 2);
    // analytic: x = d/2, y = +-sqrt(1 - d^2/4)
    const double y = std::sqrt(1.0 - d * d / 4.0);
    CHECK(contains_point(m.points, vec2(d / 2, y)));
    CHECK(contains_point(m.points, vec2(d / 2, -y)));
  }
  for (double d : {2.01, 2.5, 4.0}) {
    CHECK(meet_lines_2d(unit_circle_2d(vec2(0, 0), 1), unit_circle_2d(vec2(d, 0), 1))
              .kind == MeetKind::Empty);
  }
  const MeetOutcome tangent =
      meet_lines_2d(unit_circle_2d(vec2(0, 0), 1), unit_circle_2d(vec2(2, 0), 1));
  CHECK(tangent.kind == MeetKind::TangentPoint);
  REQUIRE(tangent.points.size() == 1);
  CHECK((tangent.points[0] - vec2(1, 0)).norm() <= 1e-7);
}

TEST_CASE("meet_line_sphere") {
  const SphereOrPlane unit =
      sphere_through(embed(vec3(1, 0, 0)), embed(vec3(-1, 0, 0)),
                     embed(vec3(0, 1, 0)), embed(vec3(0, 0, 1)));
  const CircleOrLine axis = line_through(embed(vec3(0, 0, 0)), embed(vec3(1, 0, 0)));

  const MeetOutcome hit = meet_line_sphere(axis, unit);
  CHECK(hit.kind == MeetKind::TwoPoints);
  REQUIRE(hit.points.size() == 2);
  CHECK(contains_point(hit.points, vec3(1, 0, 0)));
  CHECK(contains_point(hit.points, vec3(-1, 0, 0)));

  // the same sphere lifted out of reach
  const Versor up = translator(vec3(0, 0, 2));
  const SphereOrPlane high{apply_versor(up, unit.blade)};
  CHECK(meet_line_sphere(axis, high).kind == MeetKind::Empty);

  // tangency: unit sphere centred at (0,0,1) touches the x-axis at the origin
  const Versor up1 = translator(vec3(0, 0, 1));
  const SphereOrPlane touching{apply_versor(up1, unit.blade)};
  const MeetOutcome tp = meet_line_sphere(axis, touching);
  CHECK(tp.kind == MeetKind::TangentPoint);
  REQUIRE(tp.points.size() == 1);
  CHECK(tp.points[0].norm() <= 1e-7);

  // a straight line meeting a flat plane: one point at infinity
  const SphereOrPlane ground = plane_through(embed(vec3(0, 0, 0)), embed(vec3(1, 0, 0)),
                                             embed(vec3(0, 1, 0)));
  const CircleOrLine slanted =
      line_through(embed(vec3(0, 0, -1)), embed(vec3(1, 1, 1)));
  const MeetOutcome pl = meet_line_sphere(slanted, ground);
  CHECK(pl.kind == MeetKind::TwoPoints);
  CHECK(pl.at_infinity);
  REQUIRE(pl.points.size() == 1);
  CHECK((pl.points[0] - vec3(0.5, 0.5, 0)).norm() <= 1e-9);

  // line contained in the plane: rejected
  const CircleOrLine inside = line_through(embed(vec3(0, 0, 0)), embed(vec3(1, 0, 0)));
  CHECK_THROWS_WITH_AS(meet_line_sphere(inside, ground),
                       doctest::Contains("contained"), GeomError);
}

TEST_CASE("near-parallel line and plane classify gracefully") {
  // crossing ~36km out: inside the tangency band, reported at infinity
  // rather than throwing out of the decode
  const SphereOrPlane ground = plane_through(embed(vec3(0, 0, 0)), embed(vec3(1, 0, 0)),
                                             embed(vec3(0, 1, 0)));
  const CircleOrLine grazing =
      line_through(embed(vec3(0, 0, 1)), embed(vec3(1, 0, 1.0 - 2.8e-5)));
  const MeetOutcome m = meet_line_sphere(grazing, ground);
  CHECK(m.kind == MeetKind::TangentPoint);
  CHECK(m.at_infinity);
  CHECK(m.points.empty());

  // a clearly slanted line still decodes its finite point
  const CircleOrLine slanted = line_through(embed(vec3(0, 0, 1)), embed(vec3(1, 0, 0.9)));
  const MeetOutcome finite = meet_line_sphere(slanted, ground);
  CHECK(finite.kind == MeetKind::TwoPoints);
  REQUIRE(finite.points.size() == 1);
  CHECK((finite.points[0] - vec3(10, 0, 0)).norm() <= 1e-8);
}

TEST_CASE("meet_spheres: unit spheres at distance one") {
  const SphereOrPlane s1 = sphere_from_center_radius(vec3(0, 0, 0), 1.0);
  const SphereOrPlane s2 = sphere_from_center_radius(vec3(1, 0, 0), 1.0);

  const MeetOutcome m = meet_spheres(s1, s2);
  CHECK(m.kind == MeetKind::Circle);
  REQUIRE(m.circle.has_value());
  CHECK((m.circle->center - vec3(0.5, 0, 0)).norm() <= 1e-10);
  CHECK(m.circle->radius == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-10));
}

TEST_CASE("meet_spheres: flats, tangency, and empty cases") {
  const SphereOrPlane ground = plane_through(embed(vec3(0, 0, 0)), embed(vec3(1, 0, 0)),
                                             embed(vec3(0, 1, 0)));
  const SphereOrPlane wall = plane_through(embed(vec3(0, 0, 0)), embed(vec3(0, 1, 0)),
                                           embed(vec3(0, 0, 1)));

  // two flat planes meet in a straight line
  const MeetOutcome line = meet_spheres(ground, wall);
  CHECK(line.kind == MeetKind::Line);
  REQUIRE(line.line.has_value());
  CHECK((line.line->direction - vec3(0, 1, 0)).norm() <= 1e-12);
  CHECK(line.line->point.norm() <= 1e-12);
  CHECK(outer_product(line.raw, n_infinity(g41)).norm() <=
        1e-9 * line.raw.norm());

  // parallel planes touch only at infinity
  const SphereOrPlane lifted = plane_through(embed(vec3(0, 0, 2)), embed(vec3(1, 0, 2)),
                                             embed(vec3(0, 1, 2)));
  const MeetOutcome par = meet_spheres(ground, lifted);
  CHECK(par.kind == MeetKind::TangentPoint);
  CHECK(par.at_infinity);

  // distant spheres are empty with L^2 < 0
  const SphereOrPlane s1 = sphere_from_center_radius(vec3(0, 0, 0), 1.0);
  const SphereOrPlane s3 = sphere_from_center_radius(vec3(3, 0, 0), 1.0);
  const MeetOutcome far = meet_spheres(s1, s3);
  CHECK(far.kind == MeetKind::Empty);
  CHECK(scalar_part(far.raw * far.raw) < 0.0);

  // externally tangent spheres meet in one point
  const SphereOrPlane s2 = sphere_from_center_radius(vec3(2, 0, 0), 1.0);
  const MeetOutcome tp = meet_spheres(s1, s2);
  CHECK(tp.kind == MeetKind::TangentPoint);
  REQUIRE(tp.points.size() == 1);
  CHECK((tp.points[0] - vec3(1, 0, 0)).norm() <= 1e-7);

  // plane tangent to a sphere
  const SphereOrPlane resting = sphere_from_center_radius(vec3(0, 0, 1), 1.0);
  const MeetOutcome rest = meet_spheres(resting, ground);
  CHECK(rest.kind == MeetKind::TangentPoint);
  REQUIRE(rest.points.size() == 1);
  CHECK(rest.points[0].norm() <= 1e-7);

  // sphere cut by a plane
  const MeetOutcome cut = meet_spheres(s1, ground);
  CHECK(cut.kind == MeetKind::Circle);
  CHECK(cut.circle->center.norm() <= 1e-10);
  CHECK(cut.circle->radius == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS_AS(meet_spheres(s1, SphereOrPlane{s1.blade * 4.0}), GeomError);
}

TEST_CASE("sphere-sphere circles match the analytic formula") {
  std::mt19937_64 rng(401);
  std::uniform_real_distribution<double> rad(0.5, 3.0);
  int done = 0;
  while (done < 1000) {
    const EuclideanVector c1 = oracles::random_point(rng, 3, -5, 5);
    const EuclideanVector c2 = oracles::random_point(rng, 3, -5, 5);
    const double r1 = rad(rng), r2 = rad(rng);
    const double d = (c1 - c2).norm();
    if (d < 1e-2 || d > 0.95 * (r1 + r2) || d < 1.05 * std::fabs(r1 - r2)) continue;
    ++done;

    const MeetOutcome m = meet_spheres(sphere_from_center_radius(c1, r1),
                                       sphere_from_center_radius(c2, r2));
    REQUIRE(m.kind == MeetKind::Circle);
    const auto expected = oracles::sphere_sphere_circle(c1, r1, c2, r2);
    REQUIRE(expected.has_value());
    CHECK((m.circle->center - expected->center).norm() <= 1e-8);
    CHECK(m.circle->radius == doctest::Approx(expected->radius).epsilon(1e-8));
  }
}

TEST_CASE("duality symmetry (I A) . B = +-A . (I B), fixed sign per grade pair") {
  std::mt19937_64 rng(409);
  // Grade pairs used by the meets: (3,3) in 2D; (3,4) and (4,4) in 3D.
  // In G(3,1) the pseudoscalar anticommutes with odd blades, so the (3,3)
  // pair carries sign -1 under the left-multiplication dual; in G(4,1) the
  // pseudoscalar is central and the sign is +1.
  for (int k = 0; k < 200; ++k) {
    const Multivector a2 = grade_project(oracles::random_multivector(rng, g31), 3);
    const Multivector b2 = grade_project(oracles::random_multivector(rng, g31), 3);
    CHECK(rel_diff(inner_product(dual(a2), b2), -inner_product(a2, dual(b2))) <= 1e-12);

    const Multivector a3 = grade_project(oracles::random_multivector(rng, g41), 3);
    const Multivector p3 = grade_project(oracles::random_multivector(rng, g41), 4);
    const Multivector q3 = grade_project(oracles::random_multivector(rng, g41), 4);
    CHECK(rel_diff(inner_product(dual(p3), q3), inner_product(p3, dual(q3))) <= 1e-12);
    CHECK(rel_diff(inner_product(a3, dual(p3)), inner_product(dual(a3), p3)) <= 1e-12);
  }
}

TEST_CASE("meet covariance under Euclidean versors") {
  std::mt19937_64 rng(419);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  for (int k = 0; k < 100; ++k) {
    const Versor v = translator(oracles::random_point(rng, 3, -3, 3)) *
                     rotor_euclidean(Multivector::basis_blade(g41, 0b101), ang(rng));

    const SphereOrPlane s1 = sphere_from_center_radius(vec3(0, 0, 0), 1.0);
    const SphereOrPlane s2 = sphere_from_center_radius(vec3(1, 0, 0), 1.0);
    const Multivector before = meet_spheres(s1, s2).raw;

    const Multivector after = meet_spheres(SphereOrPlane{apply_versor(v, s1.blade)},
                                           SphereOrPlane{apply_versor(v, s2.blade)})
                                  .raw;
    const Multivector moved = apply_versor(v, before);
    const double scale = after.coeffs().dot(moved.coeffs()) /
                         moved.coeffs().dot(moved.coeffs());
    CHECK(rel_diff(after, moved * scale) <= 1e-9);
  }
}

TEST_CASE("every decoded meet point lies on both primitives") {
  std::mt19937_64 rng(421);
  std::uniform_real_distribution<double> rad(0.5, 3.0);
  int done = 0;
  while (done < 300) {
    const EuclideanVector c = oracles::random_point(rng, 3, -3, 3);
    const double r = rad(rng);
    const EuclideanVector p = oracles::random_point(rng, 3, -3, 3);
    EuclideanVector q = oracles::random_point(rng, 3, -3, 3);
    if ((p - q).norm() < 0.5) continue;

    const SphereOrPlane sphere = sphere_from_center_radius(c, r);
    const CircleOrLine line = line_through(embed(p), embed(q));
    const MeetOutcome m = meet_line_sphere(line, sphere);
    if (m.kind != MeetKind::TwoPoints) continue;
    ++done;
    for (const EuclideanVector& x : m.points) {
      const Multivector xm = embed(x).mv();
      CHECK(outer_product(xm, sphere.blade).norm() <=
            1e-7 * xm.norm() * sphere.blade.norm());
      CHECK(outer_product(xm, line.blade).norm() <=
            1e-7 * xm.norm() * line.blade.norm());
      // and matches the classical ray-sphere solution
      const EuclideanVector dir = (q - p).normalized();
      const double t = (x - p).dot(dir);
      CHECK((p + t * dir - x).norm() <= 1e-8);
      CHECK(std::fabs((x - c).norm() - r) <= 1e-8);
    }
  }
}
