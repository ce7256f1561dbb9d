#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tcat/geometry.hpp"
#include "tcat/paths.hpp"

namespace tcat {

// One rule of a motion planner: an open set of start/goal pairs described by
// a margin function (positive exactly on the domain, and measuring distance
// to its boundary on the scale of the space), plus a continuous section
// assigning a motion to every pair in the domain.
struct PlannerRule {
  std::string name;
  std::string domain_note;
  std::string anchor;
  std::function<double(const Pt&, const Pt&)> margin;
  std::function<Path(const Pt&, const Pt&)> section;
};

struct Planner {
  std::string name;
  GeometricSpace space;
  std::vector<PlannerRule> rules;
  // When set, every rule whose domain meets the diagonal returns the constant
  // motion on diagonal pairs.
  bool reserved = false;
  std::string notes;

  // Highest margin wins; ties break toward the lower index.  Returns -1 when
  // no rule covers the pair.
  int select_rule(const Pt& a, const Pt& b) const;
  double rule_margin(std::size_t rule, const Pt& a, const Pt& b) const;
  Path plan(const Pt& a, const Pt& b) const;  // throws std::runtime_error if uncovered

  std::string describe_json() const;
};

// Unit tangent vector at B (a unit vector, away from the last coordinate
// axis) obtained by pulling a constant chart field back through stereographic
// projection; it vanishes nowhere on its domain.
Pt chart_pullback_field(const Pt& B);

// Straight chord between the chart images of A and B in the stereographic
// chart from `pole`, pulled back to the sphere.  Constant on the diagonal.
Path chart_chord(const Pt& A, const Pt& B, Pt pole);

// One straight-line rule on R^n.
Planner contractible_planner(unsigned n);

// Two rules on the circle: the short arc where start and goal are not
// antipodal, and a rotation-field detour where they differ.
Planner circle_planner();

// Three rules on S^m for every m >= 1: minimal geodesics away from antipodal
// pairs, an antipode detour driven by a chart-pullback tangent field, and a
// chart-line rule near the remaining exceptional pairs.
Planner sphere_planner(unsigned m);

// Combines planners with p and q rules into one with p + q - 1 rules by
// grouping factor-rule pairs by total level.
Planner product_planner(const Planner& p, const Planner& q);

// Deformation of an ambient space onto a subspace carrying an inner planner,
// together with the coordinate charts identifying the subspace with the inner
// planner's space.  track(z, 0) = z and track(z, 1) = retract(z), and
// from_inner(to_inner(w)) = w for subspace points w.
struct Retraction {
  std::function<Pt(const Pt&, double)> track;
  std::function<Pt(const Pt&)> retract;
  std::function<Pt(const Pt&)> to_inner;
  std::function<Pt(const Pt&)> from_inner;
  std::string note;
};

// Plays each inner rule through the deformation: slide both endpoints onto
// the subspace, run the inner motion there, and undo the slide at the goal.
// The result keeps the inner rule count but does not keep the diagonal
// pointwise fixed.
Planner retract_transfer(Planner inner, GeometricSpace ambient, Retraction r);

// Three rules on the wedge of a circle and S^m, assembled from per-lobe
// pieces; motions between different lobes run through the join point.
Planner wedge_planner(unsigned m);

// Circle times heights, as a two-rule product planner.
Planner cylinder_planner(unsigned n);

// Three rules on the punctured cylinder S^1 x R^n minus one point (n = 1 or
// 2), obtained by deforming onto an embedded spine.
Planner punctured_cylinder_planner(unsigned n);

// Four rules steering two distinct bodies on the cylinder S^1 x R^n.  Works
// in the coordinates (first body, difference), where collisions become a
// puncture that the difference path never meets.
Planner config_cylinder_planner(unsigned n);

}  // namespace tcat
