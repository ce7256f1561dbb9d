#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tcat/verifier.hpp"

using namespace tcat;

namespace {

VerifyOptions quick() {
  VerifyOptions o;
  o.pairs = 400;
  o.samples_per_path = 33;
  o.diagonal_pairs = 60;
  o.perturbation_pairs = 80;
  return o;
}

}  // namespace

TEST_CASE("the genuine planners pass every audit check") {
  const Planner planners[] = {
      circle_planner(),
      sphere_planner(2),
      wedge_planner(1),
      wedge_planner(2),
      cylinder_planner(1),
      punctured_cylinder_planner(1),
      punctured_cylinder_planner(2),
      config_cylinder_planner(1),
      config_cylinder_planner(2),
  };
  for (const auto& p : planners) {
    const VerificationReport rep = verify_planner(p, quick());
    CAPTURE(rep.planner);
    CAPTURE(rep.to_json());
    CHECK(rep.pass);
    REQUIRE(rep.find("coverage") != nullptr);
    CHECK(rep.find("coverage")->value == 1.0);
    CHECK(rep.find("endpoint")->value < 1e-9);
    CHECK(rep.find("membership")->value < 1e-9);
    CHECK(rep.find("separation")->value > 0.0);
    CHECK(rep.find("rule-usage")->value == double(p.rules.size()));
  }
}

TEST_CASE("audits are deterministic for a fixed seed") {
  const Planner p = wedge_planner(2);
  const std::string a = verify_planner(p, quick()).to_json();
  const std::string b = verify_planner(p, quick()).to_json();
  CHECK(a == b);
  VerifyOptions other = quick();
  other.seed += 1;
  // A different seed still passes but measures different extremes.
  const VerificationReport rep = verify_planner(p, other);
  CHECK(rep.pass);
  CHECK(rep.seed == other.seed);
}

TEST_CASE("reports carry the schema tag and per-rule usage") {
  const VerificationReport rep = verify_planner(circle_planner(), quick());
  const std::string json = rep.to_json();
  CHECK(json.find("tcat.verification/1") != std::string::npos);
  CHECK(json.find("rule_usage") != std::string::npos);
  REQUIRE(rep.rule_usage.size() == 2);
  CHECK(rep.rule_usage[0] > 0);
  CHECK(rep.rule_usage[1] > 0);
}

TEST_CASE("a wide coverage hole is caught by the random sweep") {
  Planner p = circle_planner();
  // Shrink the short-arc rule to nearly nothing and kill the detour rule:
  // most sampled pairs end up unclaimed.
  const auto orig = p.rules[0].margin;
  p.rules[0].margin = [orig](const Pt& a, const Pt& b) { return orig(a, b) - 3.0; };
  p.rules[1].margin = [](const Pt&, const Pt&) { return -1.0; };
  const VerificationReport rep = verify_planner(p, quick());
  CHECK(!rep.pass);
  CHECK(!rep.find("coverage")->pass);
  CHECK(rep.find("coverage")->value < 1.0);
}

TEST_CASE("a measure-zero coverage hole is caught by the adversarial list") {
  Planner p = circle_planner();
  // Kill only the detour rule.  Random pairs are never exactly antipodal, so
  // the sweep still reports full coverage; the hand-picked pairs do not.
  p.rules[1].margin = [](const Pt&, const Pt&) { return -1.0; };
  const VerificationReport rep = verify_planner(p, quick());
  CHECK(!rep.pass);
  CHECK(rep.find("coverage")->value == 1.0);
  CHECK(!rep.find("adversarial")->pass);
  CHECK(!rep.find("rule-usage")->pass);
}

TEST_CASE("a motion that misses its goal is caught") {
  Planner p = circle_planner();
  p.rules[0].section = [](const Pt& a, const Pt&) { return constant_path(a); };
  const VerificationReport rep = verify_planner(p, quick());
  CHECK(!rep.pass);
  CHECK(!rep.find("endpoint")->pass);
}

TEST_CASE("a motion that leaves the space is caught") {
  Planner p = circle_planner();
  p.rules[0].section = [](const Pt& a, const Pt& b) {
    return straight_line(a, b);  // chords leave the circle
  };
  const VerificationReport rep = verify_planner(p, quick());
  CHECK(!rep.find("membership")->pass);
}

TEST_CASE("a motion that touches the removed locus is caught") {
  Planner p = punctured_cylinder_planner(1);
  const Pt puncture = {-1.0, 0.0, 0.0};
  for (auto& r : p.rules) {
    r.section = [puncture](const Pt& a, const Pt& b) {
      // Jump to the puncture exactly at the midpoint sample.
      return Path{[a, b, puncture](double t) {
        if (std::fabs(t - 0.5) < 1e-12) return puncture;
        return t < 0.5 ? a : b;
      }};
    };
  }
  const VerificationReport rep = verify_planner(p, quick());
  CHECK(!rep.find("separation")->pass);
  CHECK(rep.find("separation")->value == 0.0);
}

TEST_CASE("a false reserved claim is caught") {
  Planner p = circle_planner();
  REQUIRE(p.reserved);
  p.rules[0].section = [](const Pt& a, const Pt&) {
    // A full loop returns to the goal but wanders on the diagonal.
    return circle_sweep(std::atan2(a[1], a[0]), 2 * M_PI);
  };
  const VerificationReport rep = verify_planner(p, quick());
  CHECK(!rep.find("reserved")->pass);
}

TEST_CASE("a dead rule is caught") {
  Planner p = circle_planner();
  PlannerRule dead;
  dead.name = "never-selected";
  dead.domain_note = "empty";
  dead.anchor = "none";
  dead.margin = [](const Pt&, const Pt&) { return -1.0; };
  dead.section = [](const Pt& a, const Pt&) { return constant_path(a); };
  p.rules.push_back(dead);
  const VerificationReport rep = verify_planner(p, quick());
  CHECK(!rep.find("rule-usage")->pass);
  CHECK(rep.find("rule-usage")->value == 2.0);
}

TEST_CASE("adversarial lists include the announced difficult pairs") {
  const auto sphere_pairs = adversarial_pairs(GeometricSpace::sphere(2));
  bool has_antipodal = false;
  for (const auto& [a, b] : sphere_pairs) {
    double dot = 0;
    for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    if (dot < -0.999) has_antipodal = true;
  }
  CHECK(has_antipodal);

  const auto cfg_pairs = adversarial_pairs(GeometricSpace::config_cylinder(1));
  bool has_swap = false;
  for (const auto& [a, b] : cfg_pairs) {
    const Pt swapped = {a[3], a[4], a[5], a[0], a[1], a[2]};
    if (b == swapped && !(a == b)) has_swap = true;
  }
  CHECK(has_swap);

  const auto pc_pairs = adversarial_pairs(GeometricSpace::punctured_cylinder(1));
  const auto g = GeometricSpace::punctured_cylinder(1);
  bool has_near_puncture = false;
  for (const auto& [a, b] : pc_pairs) {
    if (g.strict_margin(a) < 0.01) has_near_puncture = true;
  }
  CHECK(has_near_puncture);
}
