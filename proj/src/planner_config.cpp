#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

#include "tcat/planner.hpp"

// Planners around the punctured cylinder S^1 x R^n minus one point and the
// space of two distinct bodies on the cylinder.  Writing theta for the circle
// angle and phi = wrap(theta - pi) for the offset from the puncture angle,
// the tent profile w(phi) = 1 - |phi|/pi vanishes exactly opposite the
// puncture.  For n = 1 the spine is the figure eight |h| = w(phi) (two loops
// joined where w = 0); for n = 2 it is the tent surface |h| = w(phi), a
// two-sphere with its poles glued at the join point.  Points outside the
// spine slide onto it vertically (|h| >= w) or along rays out of the
// puncture (|h| < w), and both slides avoid the puncture throughout.

namespace tcat {

namespace {

constexpr double kTol = 1e-9;

const char* kSlideAnchor = "pole slides and join-point routing on the glued sphere";
const char* kFieldAnchor =
    "antipode detour along a nonvanishing tangent field, after Farber's sphere rules";
const char* kGeodesicAnchor =
    "minimal geodesics on the non-antipodal set (standard euclidean/sphere construction)";

double tent_width(double phi) { return 1.0 - std::fabs(phi) / M_PI; }

// --- shared slide geometry -------------------------------------------------

struct CylPoint {
  double phi = 0.0;    // offset from the puncture angle
  Pt h;                // heights
  double hnorm = 0.0;
};

CylPoint split_cyl(const Pt& z, unsigned n) {
  CylPoint c;
  const double theta = std::atan2(z[1], z[0]);
  c.phi = wrap_angle(theta - M_PI);
  c.h.assign(z.begin() + 2, z.begin() + 2 + n);
  double s = 0.0;
  for (double v : c.h) s += v * v;
  c.hnorm = std::sqrt(s);
  return c;
}

Pt join_cyl(double phi, const Pt& h) {
  Pt z(2 + h.size());
  z[0] = -std::cos(phi);  // theta = phi + pi
  z[1] = -std::sin(phi);
  for (std::size_t i = 0; i < h.size(); ++i) z[2 + i] = h[i];
  return z;
}

// Deformation of the punctured cylinder onto the spine |h| = w(phi).
Pt spine_track(const Pt& z, double t, unsigned n) {
  const CylPoint c = split_cyl(z, n);
  const double w = tent_width(c.phi);
  if (c.hnorm >= w) {
    if (c.hnorm < kTol) return join_cyl(c.phi, c.h);  // already the join point
    //

    // Radial-in-h slide onto the profile at fixed angle.
    const double target = w / c.hnorm;
    const double scale = 1.0 + t * (target - 1.0);
    Pt h(c.h);
    for (auto& v : h) v *= scale;
    return join_cyl(c.phi, h);
  }
  // Inside the profile: slide away from the puncture along the ray through
  // the point until it meets the profile.
  const double denom = c.hnorm + std::fabs(c.phi) / M_PI;
  if (denom < 1e-300) throw std::runtime_error("point coincides with the puncture");
  const double tstar = 1.0 / denom;
  const double scale = 1.0 + t * (tstar - 1.0);
  Pt h(c.h);
  for (auto& v : h) v *= scale;
  return join_cyl(scale * c.phi, h);
}

// --- figure-eight spine for one height -------------------------------------

// Spine points map onto the wedge of two circles: the upper loop h = +w is
// the first lobe, the lower loop the second, and the join point (w = 0) is
// the wedge basepoint.  Along each loop the lobe angle is phi + pi, so the
// join sits at lobe angle zero.
Pt eight_to_wedge(const Pt& z) {
  const CylPoint c = split_cyl(z, 1);
  Pt w(4, 0.0);
  w[0] = 1.0;
  w[2] = 1.0;
  if (c.h[0] > kTol) {
    w[0] = -std::cos(c.phi);
    w[1] = -std::sin(c.phi);
  } else if (c.h[0] < -kTol) {
    w[2] = -std::cos(c.phi);
    w[3] = -std::sin(c.phi);
  }
  return w;
}

Pt wedge_to_eight(const Pt& w) {
  const double d_sphere =
      std::fabs(std::atan2(w[3], w[2]));  // sphere-part offset from its basepoint
  if (d_sphere < kTol) {
    // Circle lobe (or the basepoint): upper loop.
    const double phi = std::atan2(-w[1], -w[0]);
    return Pt{w[0], w[1], tent_width(phi)};
  }
  const double phi = std::atan2(-w[3], -w[2]);
  return Pt{w[2], w[3], -tent_width(phi)};
}

// --- tent-surface planner for two heights ----------------------------------

// Away from the join point the tent surface looks like a sphere: with
// lambda = (pi - phi)/2 in [0, pi] and psi the direction of h, the map to
// (sin lambda cos psi, sin lambda sin psi, cos lambda) identifies the surface
// with S^2 whose two poles are both glued to the join point j.  Rules are
// phrased through that identification; D = min(lambda, pi - lambda) measures
// the distance to the nearest pole.

struct TentCoords {
  double lambda = 0.0;
  double psi = 0.0;
  double D = 0.0;
};

TentCoords tent_coords(const Pt& z) {
  const CylPoint c = split_cyl(z, 2);
  TentCoords t;
  t.lambda = (M_PI - c.phi) / 2.0;
  t.psi = c.hnorm > 1e-300 ? std::atan2(c.h[1], c.h[0]) : 0.0;
  t.D = std::min(t.lambda, M_PI - t.lambda);
  return t;
}

Pt tent_point(double lambda, double psi) {
  const double phi = M_PI - 2.0 * lambda;
  const double w = tent_width(phi);
  return join_cyl(phi, Pt{w * std::cos(psi), w * std::sin(psi)});
}

Pt unit3(const TentCoords& t) {
  return Pt{std::sin(t.lambda) * std::cos(t.psi),
            std::sin(t.lambda) * std::sin(t.psi), std::cos(t.lambda)};
}

// Quotient map from the sphere back to the tent surface (both poles -> join).
Pt tent_from_unit(const Pt& v) {
  const double lambda = std::acos(std::max(-1.0, std::min(1.0, v[2])));
  const double plane = std::hypot(v[0], v[1]);
  const double psi = plane > 1e-300 ? std::atan2(v[1], v[0]) : 0.0;
  return tent_point(lambda, psi);
}

Path project_sphere_path(Path p) {
  return Path{[p = std::move(p)](double t) { return tent_from_unit(p(t)); }};
}

// Meridian slide from the nearest pole out to the point (reverse visits j).
Path slide_from_pole(const TentCoords& t) {
  const double pole = t.lambda <= M_PI / 2.0 ? 0.0 : M_PI;
  return Path{[t, pole](double s) {
    return tent_point(pole + s * (t.lambda - pole), t.psi);
  }};
}

// Unit tangent in the direction of increasing lambda; defined off the poles.
Pt lambda_field(const TentCoords& t) {
  return Pt{std::cos(t.lambda) * std::cos(t.psi),
            std::cos(t.lambda) * std::sin(t.psi), -std::sin(t.lambda)};
}

// Determinate route from the join point to any b off the poles: descend from
// the north pole to the antipode of b, then swing into b along the
// lambda field.
Path join_leg_to(const TentCoords& tb) {
  const Pt bhat = unit3(tb);
  Pt nbhat{-bhat[0], -bhat[1], -bhat[2]};
  Path leg1 = sphere_geodesic(Pt{0.0, 0.0, 1.0}, nbhat);
  Path leg2 = sphere_semicircle(bhat, lambda_field(tb));
  return project_sphere_path(chain(std::move(leg1), std::move(leg2)));
}

Planner tent_surface_planner() {
  Planner p;
  p.name = "three-rule planner on the tent spine of the twice-punctured product";
  p.space = GeometricSpace::punctured_cylinder(2);
  p.reserved = false;
  p.notes =
      "operates on the spine |h| = w(phi); the spine is a sphere with its "
      "poles glued at the join point";

  // Rule 0: minimal geodesics between points clear of the join, plus two
  // join-routing pieces: from a small join neighbourhood out along a fixed
  // determinate leg, and from a mid band down into the join neighbourhood.
  PlannerRule generic;
  generic.name = "geodesic";
  generic.domain_note =
      "non-antipodal pairs clear of the join point; a start within the join "
      "neighbourhood with the goal in the wide band; or a mid-band start "
      "with the goal near the join";
  generic.anchor = kGeodesicAnchor;
  generic.margin = [](const Pt& za, const Pt& zb) {
    const TentCoords a = tent_coords(za), b = tent_coords(zb);
    const double d = sphere_distance(unit3(a).data(), unit3(b).data(), 3);
    double best = std::min({a.D - 0.2, b.D - 0.2, M_PI - d});
    best = std::max(best, std::min(0.1 - a.D, b.D - 0.15));
    best = std::max(best, std::min({a.D - 0.2, 0.35 - a.D, 0.1 - b.D}));
    return best;
  };
  generic.section = [](const Pt& za, const Pt& zb) -> Path {
    const TentCoords a = tent_coords(za), b = tent_coords(zb);
    if (a.D < 0.1 && b.D > 0.15) {  // out of the join neighbourhood
      return chain(reversed(slide_from_pole(a)), join_leg_to(b));
    }
    if (a.D > 0.2 && a.D < 0.35 && b.D < 0.1) {  // down into it
      return chain(reversed(join_leg_to(a)), slide_from_pole(b));
    }
    return project_sphere_path(sphere_geodesic(unit3(a), unit3(b)));
  };
  p.rules.push_back(std::move(generic));

  // Rule 1: the antipode detour; works whenever the images differ and both
  // points sit at least slightly clear of the join.
  PlannerRule detour;
  detour.name = "antipode-detour";
  detour.domain_note = "images differ, both points slightly clear of the join";
  detour.anchor = kFieldAnchor;
  detour.margin = [](const Pt& za, const Pt& zb) {
    const TentCoords a = tent_coords(za), b = tent_coords(zb);
    const double d = sphere_distance(unit3(a).data(), unit3(b).data(), 3);
    return std::min({a.D - 0.05, b.D - 0.05, d});
  };
  detour.section = [](const Pt& za, const Pt& zb) {
    const TentCoords a = tent_coords(za), b = tent_coords(zb);
    const Pt bhat = unit3(b);
    Pt nbhat{-bhat[0], -bhat[1], -bhat[2]};
    Path leg1 = sphere_geodesic(unit3(a), nbhat);
    Path leg2 = sphere_semicircle(bhat, lambda_field(b));
    return project_sphere_path(chain(std::move(leg1), std::move(leg2)));
  };
  p.rules.push_back(std::move(detour));

  // Rule 2: routes through the join point when at least one input is near
  // it (or the mirrored determinate leg when the start is far instead).
  PlannerRule hub;
  hub.name = "join-hub";
  hub.domain_note =
      "start near the join with the goal in the inner band, or start in the "
      "far band with the goal near the join";
  hub.anchor = kSlideAnchor;
  hub.margin = [](const Pt& za, const Pt& zb) {
    const TentCoords a = tent_coords(za), b = tent_coords(zb);
    double best = std::min(0.25 - a.D, 0.3 - b.D);
    best = std::max(best, std::min(a.D - 0.3, 0.25 - b.D));
    return best;
  };
  hub.section = [](const Pt& za, const Pt& zb) -> Path {
    const TentCoords a = tent_coords(za), b = tent_coords(zb);
    if (a.D < 0.25 && b.D < 0.3) {
      return chain(reversed(slide_from_pole(a)), slide_from_pole(b));
    }
    return chain(reversed(join_leg_to(a)), slide_from_pole(b));
  };
  p.rules.push_back(std::move(hub));

  return p;
}

Retraction spine_retraction(unsigned n) {
  Retraction r;
  r.track = [n](const Pt& z, double t) { return spine_track(z, t, n); };
  r.retract = [n](const Pt& z) { return spine_track(z, 1.0, n); };
  if (n == 1) {
    r.to_inner = [](const Pt& z) { return eight_to_wedge(z); };
    r.from_inner = [](const Pt& w) { return wedge_to_eight(w); };
    r.note =
        "deformation onto the figure-eight spine |h| = w(phi), identified "
        "with the wedge of two circles";
  } else {
    r.to_inner = [](const Pt& z) { return z; };
    r.from_inner = [](const Pt& w) { return w; };
    r.note = "deformation onto the tent-surface spine |h| = w(phi)";
  }
  return r;
}

}  // namespace

Planner cylinder_planner(unsigned n) {
  Planner p = product_planner(circle_planner(), contractible_planner(n));
  p.name = "two-rule cylinder planner (S^1 x R^" + std::to_string(n) + ")";
  return p;
}

Planner punctured_cylinder_planner(unsigned n) {
  if (n != 1 && n != 2) {
    throw std::invalid_argument("punctured cylinder planner supports one or two heights");
  }
  Planner inner = n == 1 ? wedge_planner(1) : tent_surface_planner();
  Planner out = retract_transfer(std::move(inner), GeometricSpace::punctured_cylinder(n),
                                 spine_retraction(n));
  out.name = "three-rule planner on the punctured cylinder S^1 x R^" + std::to_string(n);
  out.notes = "three rules match the topological complexity of the punctured cylinder";
  return out;
}

Planner config_cylinder_planner(unsigned n) {
  if (n != 1 && n != 2) {
    throw std::invalid_argument("configuration planner supports one or two heights");
  }
  Planner base = product_planner(cylinder_planner(n), punctured_cylinder_planner(n));
  auto pp = std::make_shared<Planner>(std::move(base));
  const std::size_t half = 2 + n;

  // First-body coordinates stay; the second body is replaced by the
  // difference, shifted so that a collision lands exactly on the puncture.
  auto to_pair = [half, n](const Pt& config) {
    Pt out(2 * half);
    const double ca = config[0], sa = config[1];
    const double cb = config[half], sb = config[half + 1];
    for (std::size_t i = 0; i < half; ++i) out[i] = config[i];
    out[half] = -(ca * cb + sa * sb);      // cos(beta - alpha + pi)
    out[half + 1] = -(ca * sb - sa * cb);  // sin(beta - alpha + pi)
    for (unsigned i = 0; i < n; ++i) {
      out[half + 2 + i] = config[half + 2 + i] - config[2 + i];
    }
    return out;
  };
  auto from_pair = [half, n](const Pt& pair) {
    Pt out(2 * half);
    const double ca = pair[0], sa = pair[1];
    const double cd = pair[half], sd = pair[half + 1];
    for (std::size_t i = 0; i < half; ++i) out[i] = pair[i];
    out[half] = -(ca * cd - sa * sd);      // cos(alpha + delta - pi)
    out[half + 1] = -(sa * cd + ca * sd);  // sin(alpha + delta - pi)
    for (unsigned i = 0; i < n; ++i) {
      out[half + 2 + i] = pair[2 + i] + pair[half + 2 + i];
    }
    return out;
  };

  Planner out;
  out.name = "four-rule planner for two bodies on the cylinder S^1 x R^" + std::to_string(n);
  out.space = GeometricSpace::config_cylinder(n);
  out.reserved = false;
  out.notes =
      "works in (first body, difference) coordinates, where collisions become "
      "a puncture; the difference track keeps a positive distance from it, so "
      "the bodies never meet; four rules match the topological complexity of "
      "the configuration space";

  for (std::size_t i = 0; i < pp->rules.size(); ++i) {
    PlannerRule r;
    r.name = pp->rules[i].name;
    r.domain_note = "in (body, difference) coordinates: " + pp->rules[i].domain_note;
    r.anchor = pp->rules[i].anchor;
    r.margin = [pp, i, to_pair](const Pt& a, const Pt& b) {
      return pp->rules[i].margin(to_pair(a), to_pair(b));
    };
    r.section = [pp, i, to_pair, from_pair](const Pt& a, const Pt& b) {
      Path inner = pp->rules[i].section(to_pair(a), to_pair(b));
      return Path{[inner = std::move(inner), from_pair](double t) {
        return from_pair(inner(t));
      }};
    };
    out.rules.push_back(std::move(r));
  }
  return out;
}

}  // namespace tcat
