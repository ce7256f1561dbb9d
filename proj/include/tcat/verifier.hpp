#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcat/planner.hpp"

namespace tcat {

// Seeded statistical audit of a motion planner.  Every check is deterministic
// given the options, so reports can be frozen in tests.
struct VerifyOptions {
  std::uint64_t seed = 20240801;
  int pairs = 10000;            // random start/goal pairs
  int samples_per_path = 33;    // points inspected along each motion
  int diagonal_pairs = 200;     // start == goal probes for reserved planners
  int perturbation_pairs = 300; // stability probes inside rule domains
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;  // the measured extreme for this check
  std::string detail;
};

struct VerificationReport {
  std::string planner;
  std::string space;
  std::uint64_t seed = 0;
  int pairs = 0;
  bool pass = false;  // conjunction of all checks
  std::vector<CheckResult> checks;
  std::vector<std::size_t> rule_usage;  // selections per rule over the sample

  const CheckResult* find(const std::string& name) const;
  std::string to_json() const;
};

// Runs the audit: coverage of sampled pairs, exact endpoints, membership of
// every inspected point, strictly positive distance to any removed locus,
// constancy on the diagonal where the planner claims it, stability of the
// selected rule under small on-space perturbations, determinate behaviour on
// a per-space list of adversarial pairs, and at least one selection per rule.
VerificationReport verify_planner(const Planner& p, const VerifyOptions& opts = {});

// The adversarial start/goal list used by the audit (exposed for tests):
// antipodal and polar pairs on spheres, join-point and far-lobe pairs on
// wedges, near-puncture pairs on punctured cylinders, and body-swap plus
// near-collision pairs on two-body spaces.
std::vector<std::pair<Pt, Pt>> adversarial_pairs(const GeometricSpace& g);

}  // namespace tcat
