#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tcat/geometry.hpp"

using namespace tcat;

namespace {

Pt unit(std::initializer_list<double> xs) {
  Pt v(xs);
  double n = 0.0;
  for (double x : v) n += x * x;
  n = std::sqrt(n);
  for (double& x : v) x /= n;
  return v;
}

}  // namespace

TEST_CASE("wrap_angle lands in (-pi, pi] and preserves the angle") {
  CHECK(wrap_angle(0.0) == doctest::Approx(0.0));
  CHECK(wrap_angle(M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(-M_PI) == doctest::Approx(M_PI));  // the branch cut maps down
  CHECK(wrap_angle(3 * M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(2 * M_PI + 0.25) == doctest::Approx(0.25));
  CHECK(wrap_angle(-2 * M_PI - 0.25) == doctest::Approx(-0.25));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng);
    const double w = wrap_angle(a);
    CHECK(w > -M_PI);
    CHECK(w <= M_PI);
    CHECK(std::cos(w) == doctest::Approx(std::cos(a)).epsilon(1e-12));
    CHECK(std::sin(w) == doctest::Approx(std::sin(a)).epsilon(1e-12));
  }
}

TEST_CASE("circle and sphere distances match known angles") {
  CHECK(circle_distance(1, 0, 0, 1) == doctest::Approx(M_PI / 2));
  CHECK(circle_distance(1, 0, -1, 0) == doctest::Approx(M_PI));
  CHECK(circle_distance(1, 0, 1, 0) == 0.0);
  const Pt e1 = {1, 0, 0}, e2 = {0, 1, 0}, ne1 = {-1, 0, 0};
  CHECK(sphere_distance(e1.data(), e2.data(), 3) == doctest::Approx(M_PI / 2));
  CHECK(sphere_distance(e1.data(), ne1.data(), 3) == doctest::Approx(M_PI));
  CHECK(sphere_distance(e1.data(), e1.data(), 3) == 0.0);
}

TEST_CASE("distances stay accurate near zero and near pi") {
  // A chord of length 1e-10 must be reported at that scale, not at the
  // 1e-8 noise floor of the arccosine of a dot product.
  const double eps = 1e-10;
  const Pt a = {1, 0, 0};
  const Pt b = unit({1, eps, 0});
  const double d = sphere_distance(a.data(), b.data(), 3);
  CHECK(d > 0.5 * eps);
  CHECK(d < 2.0 * eps);
  const Pt c = unit({-1, eps, 0});
  const double far = sphere_distance(a.data(), c.data(), 3);
  CHECK(M_PI - far > 0.5 * eps);
  CHECK(M_PI - far < 2.0 * eps);
  CHECK(circle_distance(1, 0, std::cos(eps), std::sin(eps)) == doctest::Approx(eps).epsilon(1e-3));
}

TEST_CASE("ambient dimensions follow the coordinate layouts") {
  CHECK(GeometricSpace::sphere(2).ambient_dim() == 3);
  CHECK(GeometricSpace::euclidean(3).ambient_dim() == 3);
  CHECK(GeometricSpace::wedge(1).ambient_dim() == 4);   // circle pair + S^1 pair
  CHECK(GeometricSpace::wedge(2).ambient_dim() == 5);
  CHECK(GeometricSpace::punctured_cylinder(1).ambient_dim() == 3);
  CHECK(GeometricSpace::punctured_cylinder(2).ambient_dim() == 4);
  CHECK(GeometricSpace::config_cylinder(1).ambient_dim() == 6);
  CHECK(GeometricSpace::config_cylinder(2).ambient_dim() == 8);
  const auto prod = GeometricSpace::product(
      {GeometricSpace::sphere(1), GeometricSpace::euclidean(2)});
  CHECK(prod.ambient_dim() == 4);
}

TEST_CASE("membership error vanishes on the space and flags defects") {
  const auto s2 = GeometricSpace::sphere(2);
  CHECK(s2.membership_error({1, 0, 0}) == 0.0);
  CHECK(s2.membership_error({1.1, 0, 0}) > 0.05);

  const auto w = GeometricSpace::wedge(2);
  CHECK(w.membership_error({1, 0, 1, 0, 0}) <= 1e-12);        // the join point
  CHECK(w.membership_error({-1, 0, 1, 0, 0}) <= 1e-12);       // circle lobe
  CHECK(w.membership_error({1, 0, 0, 0, 1}) <= 1e-12);        // sphere lobe
  CHECK(w.membership_error({-1, 0, 0, 0, 1}) > 1e-3);         // both parts away
  CHECK(w.membership_error({0.5, 0, 1, 0, 0}) > 1e-3);        // circle part off the circle

  const auto pc = GeometricSpace::punctured_cylinder(2);
  CHECK(pc.membership_error({0, 1, 5, -7}) <= 1e-12);  // heights are unconstrained
  CHECK(pc.membership_error({0, 2, 0, 0}) > 1e-3);
}

TEST_CASE("strict margins measure the removed locus") {
  const auto pc = GeometricSpace::punctured_cylinder(1);
  CHECK(pc.strict_margin({-1, 0, 0}) == 0.0);              // the puncture itself
  CHECK(pc.strict_margin({1, 0, 0}) == doctest::Approx(M_PI));
  CHECK(pc.strict_margin({-1, 0, 2}) == doctest::Approx(2.0));

  const auto cfg = GeometricSpace::config_cylinder(1);
  CHECK(cfg.strict_margin({1, 0, 0, 1, 0, 0}) == 0.0);     // bodies coincide
  CHECK(cfg.strict_margin({1, 0, 0, 1, 0, 0.5}) == doctest::Approx(0.5));
  CHECK(cfg.strict_margin({1, 0, 0, -1, 0, 0}) == doctest::Approx(M_PI));

  CHECK(GeometricSpace::sphere(2).strict_margin({1, 0, 0}) ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("wedge distance runs through the join for cross-lobe pairs") {
  const auto w = GeometricSpace::wedge(2);
  const Pt join = {1, 0, 1, 0, 0};
  const Pt circle_far = {-1, 0, 1, 0, 0};     // half way around the circle lobe
  const Pt sphere_far = {1, 0, -1, 0, 0};     // antipode on the sphere lobe
  CHECK(w.distance(join, circle_far) == doctest::Approx(M_PI));
  CHECK(w.distance(join, sphere_far) == doctest::Approx(M_PI));
  CHECK(w.distance(circle_far, sphere_far) == doctest::Approx(2 * M_PI));
  CHECK(w.distance(circle_far, circle_far) == 0.0);
  // Symmetry.
  CHECK(w.distance(sphere_far, circle_far) == doctest::Approx(2 * M_PI));
}

TEST_CASE("product distance dominates factor distances") {
  const auto prod = GeometricSpace::product(
      {GeometricSpace::sphere(1), GeometricSpace::euclidean(1)});
  const Pt a = {1, 0, 0}, b = {0, 1, 2};
  const double d = prod.distance(a, b);
  CHECK(d >= M_PI / 2);
  CHECK(d >= 2.0);
  CHECK(d <= M_PI / 2 + 2.0 + 1e-12);
}

TEST_CASE("samples lie on the space, are distinct where required, and are seeded") {
  const GeometricSpace spaces[] = {
      GeometricSpace::sphere(2),
      GeometricSpace::euclidean(3),
      GeometricSpace::wedge(1),
      GeometricSpace::wedge(2),
      GeometricSpace::punctured_cylinder(1),
      GeometricSpace::punctured_cylinder(2),
      GeometricSpace::config_cylinder(1),
      GeometricSpace::config_cylinder(2),
  };
  for (const auto& g : spaces) {
    CAPTURE(g.describe());
    std::mt19937_64 rng(123);
    for (int i = 0; i < 300; ++i) {
      const Pt p = g.sample(rng);
      REQUIRE(p.size() == g.ambient_dim());
      CHECK(g.membership_error(p) <= 1e-12);
      CHECK(g.strict_margin(p) >= 1e-9);
      for (double x : p) {
        CHECK(std::fabs(x) <= 3.0 + 1e-12);  // coordinates are unit parts or boxed heights
      }
    }
    std::mt19937_64 rng_a(5), rng_b(5);
    CHECK(g.sample(rng_a) == g.sample(rng_b));
  }
}

TEST_CASE("wedge samples visit both lobes and the sphere lobe more often when larger") {
  const auto w = GeometricSpace::wedge(2);  // area 4*pi vs circle length 2*pi
  std::mt19937_64 rng(77);
  int on_circle = 0, on_sphere = 0;
  for (int i = 0; i < 2000; ++i) {
    const Pt p = w.sample(rng);
    const double dc = circle_distance(p[0], p[1], 1, 0);
    if (dc > 1e-6) ++on_circle;
    else ++on_sphere;  // at the join or on the sphere lobe
  }
  CHECK(on_circle > 400);
  CHECK(on_sphere > on_circle);
}

TEST_CASE("factories reject unusable parameters") {
  CHECK_THROWS(GeometricSpace::sphere(0));
  CHECK_THROWS(GeometricSpace::wedge(0));
  CHECK_THROWS(GeometricSpace::wedge(16));
  CHECK_THROWS(GeometricSpace::punctured_cylinder(0));
  CHECK_THROWS(GeometricSpace::config_cylinder(0));
}

TEST_CASE("descriptions name the space") {
  CHECK(GeometricSpace::sphere(3).describe().find("S^3") != std::string::npos);
  CHECK(GeometricSpace::config_cylinder(1).describe().find("distinct") != std::string::npos);
  CHECK(!GeometricSpace::punctured_cylinder(2).describe().empty());
}
