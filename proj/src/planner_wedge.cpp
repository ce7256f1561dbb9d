#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "tcat/planner.hpp"

// Three-rule planner on the wedge of a circle and S^m.  Points carry both a
// circle pair and a sphere vector, with at least one part at its basepoint
// (circle (1,0), sphere e1); the join point has both.  Every rule is a union
// of per-lobe pieces; pieces of the same rule are pairwise disjoint, and
// motions that change lobes run through the join point.
//
// Distinguished sphere points: the basepoint C = e1, the antipode -C, the
// tangent-field pole B0 = (last axis), and the auxiliary point
// P = -(e1 + B0)/sqrt(2), whose distances to C, -C and B0 are 3pi/4, pi/4
// and 3pi/4.  The pieces are sized so that:
//   rule 0 covers pairs joined by a unique shortest route;
//   rule 1 covers same-lobe antipodal pairs away from the join point plus
//     small cross patches around (far side of circle) x (ball around P) and
//     around the sphere antipode -C;
//   rule 2 covers everything left: chart chords from P on the sphere side
//     extended over the join, a near-join circle blob, and the two patches
//     where one input sits on the far side of the circle.

namespace tcat {

namespace {

constexpr double kNoMargin = -std::numeric_limits<double>::infinity();
constexpr double kLobeTol = 1e-9;

const char* kShortestAnchor = "unique shortest routes in the glued metric";
const char* kDetourAnchor =
    "antipode detour along a nonvanishing tangent field, after Farber's sphere rules";
const char* kPatchAnchor = "chart chords and join-point routing on the remaining pairs";

struct WedgeGeometry {
  unsigned m;
  Pt C, negC, B0, P;

  explicit WedgeGeometry(unsigned m_) : m(m_) {
    const std::size_t n = m + 1;
    C.assign(n, 0.0);
    C[0] = 1.0;
    negC.assign(n, 0.0);
    negC[0] = -1.0;
    B0.assign(n, 0.0);
    B0[n - 1] = 1.0;
    P.assign(n, 0.0);
    P[0] = -1.0 / std::sqrt(2.0);
    P[n - 1] = -1.0 / std::sqrt(2.0);
  }
};

struct WPoint {
  bool on_circle = false;
  bool on_sphere = false;
  double phi = 0.0;  // circle angle when on the circle lobe
  Pt B;              // sphere part
  double d_base = 0.0;  // sphere distance to C
};

WPoint decompose(const Pt& p, const WedgeGeometry& g) {
  WPoint w;
  w.phi = std::atan2(p[1], p[0]);
  w.B.assign(p.begin() + 2, p.end());
  w.d_base = sphere_distance(w.B.data(), g.C.data(), g.m + 1);
  w.on_circle = w.d_base < kLobeTol;
  w.on_sphere = std::fabs(w.phi) < kLobeTol;
  return w;
}

Pt embed_circle(double c, double s, const WedgeGeometry& g) {
  Pt p(2 + g.m + 1, 0.0);
  p[0] = c;
  p[1] = s;
  p[2] = 1.0;
  return p;
}

Pt embed_sphere(const Pt& B) {
  Pt p(2 + B.size(), 0.0);
  p[0] = 1.0;
  for (std::size_t i = 0; i < B.size(); ++i) p[2 + i] = B[i];
  return p;
}

Path lift_circle(Path angle_path, const WedgeGeometry& g) {
  return Path{[p = std::move(angle_path), g](double t) {
    const Pt c = p(t);
    return embed_circle(c[0], c[1], g);
  }};
}

Path lift_sphere(Path spath) {
  return Path{[p = std::move(spath)](double t) { return embed_sphere(p(t)); }};
}

// Minimal constant-speed arc between circle angles (not antipodal).
Path circle_arc(double from, double to) {
  return circle_sweep(from, wrap_angle(to - from));
}

// Determinate route from any circle angle to the basepoint: minimal arc to
// the far point, then half a turn with the rotation field.  Continuous in the
// start, including at the far point itself.
Path circle_far_route_to_base(double phi) {
  Path leg1 = circle_sweep(phi, wrap_angle(M_PI - phi));
  Path leg2 = Path{[](double t) {
    return Pt{-std::cos(M_PI * t), std::sin(M_PI * t)};
  }};
  return chain(std::move(leg1), std::move(leg2));
}

// Determinate sphere route from the basepoint C to any B away from the field
// pole: geodesic to the antipode of B, then the field semicircle into B.
Path sphere_detour_from_base(const Pt& B, const WedgeGeometry& g) {
  Pt negB(B.size());
  for (std::size_t i = 0; i < B.size(); ++i) negB[i] = -B[i];
  Path leg1 = sphere_geodesic(g.C, negB);
  Path leg2 = sphere_semicircle(B, chart_pullback_field(B));
  return chain(std::move(leg1), std::move(leg2));
}

double ds(const Pt& a, const Pt& b) {
  return sphere_distance(a.data(), b.data(), a.size());
}

// Length assigned to the chart-chord piece when apportioning time.  Any
// continuous length vanishing exactly on equal inputs works; the sphere
// distance between the endpoints does.
double chord_len(const Pt& A, const Pt& B) { return ds(A, B); }

}  // namespace

Planner wedge_planner(unsigned m) {
  if (m == 0) throw std::invalid_argument("wedge planner needs m >= 1");
  const WedgeGeometry g(m);

  Planner p;
  p.name = "three-rule planner on the wedge of a circle and S^" + std::to_string(m);
  p.space = GeometricSpace::wedge(m);
  p.reserved = true;
  p.notes =
      "three rules match the topological complexity of the wedge; domains are "
      "unions of per-lobe pieces glued over the join point";

  // ---------------------------------------------------------------- rule 0
  PlannerRule shortest;
  shortest.name = "shortest-route";
  shortest.domain_note =
      "pairs joined by a unique shortest route: same lobe and not antipodal, "
      "or different lobes with both points away from their lobe far point";
  shortest.anchor = kShortestAnchor;
  shortest.margin = [g](const Pt& pa, const Pt& pb) {
    const WPoint a = decompose(pa, g), b = decompose(pb, g);
    double best = kNoMargin;
    if (a.on_circle && b.on_circle)
      best = std::max(best, M_PI - std::fabs(wrap_angle(a.phi - b.phi)));
    if (a.on_sphere && b.on_sphere) best = std::max(best, M_PI - ds(a.B, b.B));
    if (a.on_circle && b.on_sphere)
      best = std::max(best, std::min(M_PI - std::fabs(a.phi), M_PI - b.d_base));
    if (a.on_sphere && b.on_circle)
      best = std::max(best, std::min(M_PI - a.d_base, M_PI - std::fabs(b.phi)));
    return best;
  };
  shortest.section = [g](const Pt& pa, const Pt& pb) {
    const WPoint a = decompose(pa, g), b = decompose(pb, g);
    if (a.on_circle && b.on_circle &&
        std::fabs(wrap_angle(a.phi - b.phi)) < M_PI - 1e-15) {
      return lift_circle(circle_arc(a.phi, b.phi), g);
    }
    if (a.on_sphere && b.on_sphere && ds(a.B, b.B) < M_PI - 1e-15) {
      return lift_sphere(sphere_geodesic(a.B, b.B));
    }
    // Cross route through the join point, time split by leg length so the
    // parameterization agrees with the same-lobe formulas on the boundary.
    if (a.on_circle && b.on_sphere) {
      Path leg1 = lift_circle(circle_arc(a.phi, 0.0), g);
      Path leg2 = lift_sphere(sphere_geodesic(g.C, b.B));
      return chain_by_length(std::move(leg1), std::fabs(a.phi), std::move(leg2), b.d_base);
    }
    Path leg1 = lift_sphere(sphere_geodesic(a.B, g.C));
    Path leg2 = lift_circle(circle_arc(0.0, b.phi), g);
    return chain_by_length(std::move(leg1), a.d_base, std::move(leg2), std::fabs(b.phi));
  };
  p.rules.push_back(std::move(shortest));

  // ---------------------------------------------------------------- rule 1
  PlannerRule detour;
  detour.name = "lobe-detour";
  detour.domain_note =
      "same-lobe pairs that differ, away from the join point and (on the "
      "sphere) away from the field pole, plus cross patches near the circle "
      "far point with the sphere input near P, and near the sphere antipode";
  detour.anchor = kDetourAnchor;
  detour.margin = [g](const Pt& pa, const Pt& pb) {
    const WPoint a = decompose(pa, g), b = decompose(pb, g);
    double best = kNoMargin;
    if (a.on_circle && b.on_circle) {
      best = std::max(best, std::min({std::fabs(wrap_angle(a.phi - b.phi)),
                                      std::fabs(a.phi), std::fabs(b.phi)}));
    }
    if (!a.on_circle && !b.on_circle) {  // both strictly on the sphere lobe
      best = std::max(best, std::min({ds(a.B, b.B), ds(b.B, g.B0),
                                      a.d_base - M_PI / 8.0,
                                      ds(a.B, g.negC) - M_PI / 8.0, b.d_base}));
    }
    if (a.on_circle && b.on_sphere) {  // patch over (far circle) x (near P)
      best = std::max(best, std::min(std::fabs(a.phi) - M_PI / 4.0,
                                     M_PI / 8.0 - ds(b.B, g.P)));
    }
    if (a.on_sphere && b.on_circle) {
      best = std::max(best, std::min(M_PI / 8.0 - ds(a.B, g.P),
                                     std::fabs(b.phi) - M_PI / 4.0));
    }
    {  // patch into the ball around the sphere antipode
      double from = kNoMargin;
      if (a.on_circle) from = std::max(from, 3.0 * M_PI / 4.0 - std::fabs(a.phi));
      if (a.on_sphere) from = std::max(from, M_PI / 8.0 - a.d_base);
      if (b.on_sphere)
        best = std::max(best, std::min(from, M_PI / 8.0 - ds(b.B, g.negC)));
    }
    {  // mirrored patch out of the ball around the sphere antipode
      double to = kNoMargin;
      if (b.on_circle) to = std::max(to, 3.0 * M_PI / 4.0 - std::fabs(b.phi));
      if (b.on_sphere) to = std::max(to, M_PI / 8.0 - b.d_base);
      if (a.on_sphere)
        best = std::max(best, std::min(M_PI / 8.0 - ds(a.B, g.negC), to));
    }
    return best;
  };
  detour.section = [g](const Pt& pa, const Pt& pb) -> Path {
    const WPoint a = decompose(pa, g), b = decompose(pb, g);
    // Same-lobe circle piece.
    if (a.on_circle && b.on_circle && std::fabs(a.phi) > kLobeTol &&
        std::fabs(b.phi) > kLobeTol &&
        std::fabs(wrap_angle(a.phi - b.phi)) > kLobeTol) {
      Path leg1 = circle_sweep(a.phi, wrap_angle(b.phi + M_PI - a.phi));
      Pt bc{std::cos(b.phi), std::sin(b.phi)};
      Path leg2 = sphere_semicircle(bc, Pt{-bc[1], bc[0]});
      return lift_circle(chain(std::move(leg1), std::move(leg2)), g);
    }
    const bool b_near_negC = !b.on_circle && ds(b.B, g.negC) < M_PI / 8.0;
    const bool a_near_negC = !a.on_circle && ds(a.B, g.negC) < M_PI / 8.0;
    const bool a_far_circle = a.on_circle && std::fabs(a.phi) > M_PI / 4.0;
    const bool b_far_circle = b.on_circle && std::fabs(b.phi) > M_PI / 4.0;
    // Patch: far circle start, sphere goal near P.
    if (a_far_circle && b.on_sphere && ds(b.B, g.P) < M_PI / 8.0) {
      Path leg1 = lift_circle(circle_far_route_to_base(a.phi), g);
      Path leg2 = lift_sphere(sphere_geodesic(g.C, b.B));
      return chain(std::move(leg1), std::move(leg2));
    }
    if (b_far_circle && a.on_sphere && ds(a.B, g.P) < M_PI / 8.0) {
      Path leg1 = lift_sphere(sphere_geodesic(a.B, g.C));
      Path leg2 = lift_circle(reversed(circle_far_route_to_base(b.phi)), g);
      return chain(std::move(leg1), std::move(leg2));
    }
    // Patch: goal near the sphere antipode.
    if (b_near_negC &&
        (a.on_circle ? std::fabs(a.phi) < 3.0 * M_PI / 4.0 : a.d_base < M_PI / 8.0)) {
      Path to_join = a.on_circle ? lift_circle(circle_arc(a.phi, 0.0), g)
                                 : lift_sphere(sphere_geodesic(a.B, g.C));
      Path out = lift_sphere(sphere_detour_from_base(b.B, g));
      return chain(std::move(to_join), std::move(out));
    }
    if (a_near_negC &&
        (b.on_circle ? std::fabs(b.phi) < 3.0 * M_PI / 4.0 : b.d_base < M_PI / 8.0)) {
      Path to_join = lift_sphere(reversed(sphere_detour_from_base(a.B, g)));
      Path out = b.on_circle ? lift_circle(circle_arc(0.0, b.phi), g)
                             : lift_sphere(sphere_geodesic(g.C, b.B));
      return chain(std::move(to_join), std::move(out));
    }
    // Same-lobe sphere piece.
    Pt negB(b.B.size());
    for (std::size_t i = 0; i < b.B.size(); ++i) negB[i] = -b.B[i];
    Path leg1 = sphere_geodesic(a.B, negB);
    Path leg2 = sphere_semicircle(b.B, chart_pullback_field(b.B));
    return lift_sphere(chain(std::move(leg1), std::move(leg2)));
  };
  p.rules.push_back(std::move(detour));

  // ---------------------------------------------------------------- rule 2
  PlannerRule patch;
  patch.name = "far-patch";
  patch.domain_note =
      "chart chords from P across the sphere lobe and over the join, a "
      "near-join circle blob, and routes for inputs on the far circle side";
  patch.anchor = kPatchAnchor;
  auto in_E = [g](const WPoint& w) {
    double v = kNoMargin;
    if (w.on_circle) v = std::max(v, M_PI / 4.0 - std::fabs(w.phi));
    if (w.on_sphere) v = std::max(v, ds(w.B, g.P) - M_PI / 16.0);
    return v;
  };
  auto sphere_excess = [](const WPoint& w) {
    return w.on_sphere ? w.d_base : 0.0;
  };
  patch.margin = [g, in_E, sphere_excess](const Pt& pa, const Pt& pb) {
    const WPoint a = decompose(pa, g), b = decompose(pb, g);
    double best = kNoMargin;
    if (a.on_circle && b.on_circle) {  // near-join blob
      best = std::max(best, std::min(M_PI / 4.0 - std::fabs(a.phi),
                                     M_PI / 4.0 - std::fabs(b.phi)));
    }
    {  // chart-chord piece, at least one input strictly on the sphere
      const double v = std::min({in_E(a), in_E(b),
                                 std::max(sphere_excess(a), sphere_excess(b))});
      best = std::max(best, v);
    }
    if (a.on_circle)  // far circle start
      best = std::max(best, std::min(std::fabs(a.phi) - M_PI / 2.0, in_E(b)));
    if (b.on_circle)  // far circle goal
      best = std::max(best, std::min(in_E(a), std::fabs(b.phi) - M_PI / 2.0));
    return best;
  };
  patch.section = [g, in_E, sphere_excess](const Pt& pa, const Pt& pb) -> Path {
    const WPoint a = decompose(pa, g), b = decompose(pb, g);
    const bool a_far = a.on_circle && std::fabs(a.phi) > M_PI / 2.0;
    const bool b_far = b.on_circle && std::fabs(b.phi) > M_PI / 2.0;
    if (a_far) {
      Path leg1 = lift_circle(circle_far_route_to_base(a.phi), g);
      Path leg2 = b.on_circle ? lift_circle(circle_arc(0.0, b.phi), g)
                              : lift_sphere(chart_chord(g.C, b.B, g.P));
      return chain(std::move(leg1), std::move(leg2));
    }
    if (b_far) {
      Path leg1 = a.on_circle ? lift_circle(circle_arc(a.phi, 0.0), g)
                              : lift_sphere(chart_chord(a.B, g.C, g.P));
      Path leg2 = lift_circle(reversed(circle_far_route_to_base(b.phi)), g);
      return chain(std::move(leg1), std::move(leg2));
    }
    if (a.on_circle && b.on_circle &&
        std::max(sphere_excess(a), sphere_excess(b)) <= 0.0) {
      // Near-join blob: plain short arc.
      return lift_circle(circle_arc(a.phi, b.phi), g);
    }
    // Chart-chord piece; circle inputs walk to the join first (or last),
    // with time split by leg length so lobe crossings stay continuous.
    const Pt& A = a.on_circle ? g.C : a.B;
    const Pt& B = b.on_circle ? g.C : b.B;
    Path mid = lift_sphere(chart_chord(A, B, g.P));
    const double mid_len = chord_len(A, B);
    if (b.on_circle) {
      Path tail = lift_circle(circle_arc(0.0, b.phi), g);
      mid = chain_by_length(std::move(mid), mid_len, std::move(tail), std::fabs(b.phi));
    }
    if (a.on_circle) {
      Path head = lift_circle(circle_arc(a.phi, 0.0), g);
      return chain_by_length(std::move(head), std::fabs(a.phi), std::move(mid),
                             mid_len + (b.on_circle ? std::fabs(b.phi) : 0.0));
    }
    return mid;
  };
  p.rules.push_back(std::move(patch));

  return p;
}

}  // namespace tcat
