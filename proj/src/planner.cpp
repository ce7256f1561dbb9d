#include "tcat/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace tcat {

namespace {

constexpr double kNoMargin = -std::numeric_limits<double>::infinity();

const char* kGeodesicAnchor =
    "minimal geodesics on the non-antipodal set (standard euclidean/sphere construction)";
const char* kFieldAnchor =
    "antipode detour along a nonvanishing tangent field, after Farber's sphere rules";
const char* kChartAnchor = "straight chords in a stereographic chart";
const char* kProductAnchor =
    "level-wise combination of factor rules (product rule for sectional covers)";
const char* kTransferAnchor =
    "conjugation of a spine planner by a deformation of the ambient space";

double vec_angle(const Pt& a, const Pt& b) {
  return sphere_distance(a.data(), b.data(), a.size());
}

Pt antipode(const Pt& a) {
  Pt out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

// Stereographic projection from the unit vector `pole`; the image lives in
// the hyperplane orthogonal to the pole (same ambient coordinates).
Pt stereo_project(const Pt& x, const Pt& pole) {
  double dot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * pole[i];
  const double denom = 1.0 - dot;
  Pt u(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) u[i] = (x[i] - dot * pole[i]) / denom;
  return u;
}

Pt stereo_unproject(const Pt& u, const Pt& pole) {
  double n2 = 0.0;
  for (double v : u) n2 += v * v;
  const double denom = n2 + 1.0;
  Pt x(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    x[i] = (2.0 * u[i] + (n2 - 1.0) * pole[i]) / denom;
  }
  return x;
}

}  // namespace

Path chart_chord(const Pt& A, const Pt& B, Pt pole) {
  Pt ua = stereo_project(A, pole);
  Pt ub = stereo_project(B, pole);
  return Path{[ua = std::move(ua), ub = std::move(ub), pole = std::move(pole)](double t) {
    Pt u(ua.size());
    for (std::size_t i = 0; i < ua.size(); ++i) u[i] = (1.0 - t) * ua[i] + t * ub[i];
    return stereo_unproject(u, pole);
  }};
}

// Unit tangent at B obtained by pulling the constant chart field e1 back
// through the stereographic chart from the last coordinate axis; nonvanishing
// away from that pole.  Shared with the wedge planner.
Pt chart_pullback_field(const Pt& B) {
  const std::size_t n = B.size();
  Pt pole(n, 0.0);
  pole[n - 1] = 1.0;
  Pt u = stereo_project(B, pole);
  double uv = u[0];  // inner product with the chart direction e1
  double n2 = 0.0;
  for (double v : u) n2 += v * v;
  const double D = 1.0 + n2;
  Pt w(n, 0.0);
  w[0] += 2.0 / D;
  for (std::size_t i = 0; i < n; ++i) w[i] -= 4.0 * uv * u[i] / (D * D);
  w[n - 1] += 4.0 * uv / (D * D);
  double wn = 0.0;
  for (double v : w) wn += v * v;
  wn = std::sqrt(wn);
  if (!(wn > 0.0)) throw std::runtime_error("tangent field evaluated at its singular pole");
  for (auto& v : w) v /= wn;
  return w;
}

int Planner::select_rule(const Pt& a, const Pt& b) const {
  int best = -1;
  double best_margin = 0.0;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const double m = rules[i].margin(a, b);
    if (m > 0.0 && (best < 0 || m > best_margin)) {
      best = static_cast<int>(i);
      best_margin = m;
    }
  }
  return best;
}

double Planner::rule_margin(std::size_t rule, const Pt& a, const Pt& b) const {
  return rules.at(rule).margin(a, b);
}

Path Planner::plan(const Pt& a, const Pt& b) const {
  const int idx = select_rule(a, b);
  if (idx < 0) throw std::runtime_error("planner " + name + ": pair not covered by any rule");
  return rules[static_cast<std::size_t>(idx)].section(a, b);
}

std::string Planner::describe_json() const {
  nlohmann::json j;
  j["schema"] = "tcat.planner/1";
  j["name"] = name;
  j["space"] = space.describe();
  j["rule_count"] = rules.size();
  j["reserved"] = reserved;
  if (!notes.empty()) j["notes"] = notes;
  j["rules"] = nlohmann::json::array();
  for (const auto& r : rules) {
    nlohmann::json rj;
    rj["name"] = r.name;
    rj["domain"] = r.domain_note;
    rj["anchor"] = r.anchor;
    j["rules"].push_back(rj);
  }
  return j.dump(2);
}

Planner contractible_planner(unsigned n) {
  Planner p;
  p.name = "straight-line planner on R^" + std::to_string(n);
  p.space = GeometricSpace::euclidean(n);
  p.reserved = true;
  PlannerRule r;
  r.name = "straight-line";
  r.domain_note = "all pairs";
  r.anchor = kGeodesicAnchor;
  r.margin = [](const Pt&, const Pt&) { return 1.0; };
  r.section = [](const Pt& a, const Pt& b) { return straight_line(a, b); };
  p.rules.push_back(std::move(r));
  return p;
}

Planner circle_planner() {
  Planner p;
  p.name = "two-rule circle planner";
  p.space = GeometricSpace::sphere(1);
  p.reserved = true;
  p.notes = "two rules match the topological complexity of the circle";

  PlannerRule arc;
  arc.name = "short-arc";
  arc.domain_note = "start and goal not antipodal";
  arc.anchor = kGeodesicAnchor;
  arc.margin = [](const Pt& a, const Pt& b) {
    return M_PI - circle_distance(a[0], a[1], b[0], b[1]);
  };
  arc.section = [](const Pt& a, const Pt& b) {
    const double ta = std::atan2(a[1], a[0]);
    const double tb = std::atan2(b[1], b[0]);
    return circle_sweep(ta, wrap_angle(tb - ta));
  };
  p.rules.push_back(std::move(arc));

  PlannerRule detour;
  detour.name = "antipode-detour";
  detour.domain_note = "start differs from goal";
  detour.anchor = kFieldAnchor;
  detour.margin = [](const Pt& a, const Pt& b) {
    return circle_distance(a[0], a[1], b[0], b[1]);
  };
  detour.section = [](const Pt& a, const Pt& b) {
    // Walk to the goal's antipode, then half a turn with the rotation field.
    const double ta = std::atan2(a[1], a[0]);
    const double tb = std::atan2(b[1], b[0]);
    Path leg1 = circle_sweep(ta, wrap_angle(tb + M_PI - ta));
    Path leg2 = sphere_semicircle({b[0], b[1]}, {-b[1], b[0]});
    return chain(std::move(leg1), std::move(leg2));
  };
  p.rules.push_back(std::move(detour));
  return p;
}

Planner sphere_planner(unsigned m) {
  if (m == 0) throw std::invalid_argument("sphere planner needs m >= 1");
  const std::size_t n = m + 1;
  Pt north(n, 0.0);
  north[n - 1] = 1.0;  // singular point of the tangent field
  Pt base(n, 0.0);
  base[0] = 1.0;  // chart pole for the third rule

  Planner p;
  p.name = "three-rule planner on S^" + std::to_string(m);
  p.space = GeometricSpace::sphere(m);
  p.reserved = true;
  p.notes =
      "three rules for every dimension; this count equals the topological "
      "complexity of even spheres";

  PlannerRule geo;
  geo.name = "geodesic";
  geo.domain_note = "start and goal not antipodal";
  geo.anchor = kGeodesicAnchor;
  geo.margin = [](const Pt& a, const Pt& b) { return M_PI - vec_angle(a, b); };
  geo.section = [](const Pt& a, const Pt& b) { return sphere_geodesic(a, b); };
  p.rules.push_back(std::move(geo));

  PlannerRule detour;
  detour.name = "antipode-detour";
  detour.domain_note = "start differs from goal, goal away from the field pole";
  detour.anchor = kFieldAnchor;
  detour.margin = [north](const Pt& a, const Pt& b) {
    return std::min(vec_angle(a, b), vec_angle(b, north));
  };
  detour.section = [](const Pt& a, const Pt& b) {
    Path leg1 = sphere_geodesic(a, antipode(b));
    Path leg2 = sphere_semicircle(b, chart_pullback_field(b));
    return chain(std::move(leg1), std::move(leg2));
  };
  p.rules.push_back(std::move(detour));

  PlannerRule chart;
  chart.name = "chart-line";
  chart.domain_note = "both points away from the chart pole e1";
  chart.anchor = kChartAnchor;
  chart.margin = [base](const Pt& a, const Pt& b) {
    return std::min(vec_angle(a, base), vec_angle(b, base));
  };
  chart.section = [base](const Pt& a, const Pt& b) { return chart_chord(a, b, base); };
  p.rules.push_back(std::move(chart));
  return p;
}

Planner product_planner(const Planner& p, const Planner& q) {
  const std::size_t np = p.rules.size();
  const std::size_t nq = q.rules.size();
  const std::size_t da = p.space.ambient_dim();

  Planner out;
  out.name = "product of [" + p.name + "] and [" + q.name + "]";
  out.space = GeometricSpace::product({p.space, q.space});
  out.reserved = p.reserved && q.reserved;
  out.notes = "rule k pools factor-rule pairs (i, j) with i + j = k";

  struct Split {
    Pt a1, a2, b1, b2;
  };
  auto split = [da](const Pt& a, const Pt& b) {
    Split s;
    s.a1.assign(a.begin(), a.begin() + da);
    s.a2.assign(a.begin() + da, a.end());
    s.b1.assign(b.begin(), b.begin() + da);
    s.b2.assign(b.begin() + da, b.end());
    return s;
  };

  // The planners are captured by value so the product owns its factors.
  auto pp = std::make_shared<Planner>(p);
  auto qq = std::make_shared<Planner>(q);

  for (std::size_t k = 0; k + 1 < np + nq; ++k) {
    std::vector<std::pair<std::size_t, std::size_t>> pieces;
    for (std::size_t i = 0; i < np; ++i) {
      if (k >= i && k - i < nq) pieces.emplace_back(i, k - i);
    }
    if (pieces.empty()) continue;

    PlannerRule r;
    r.name = "level-" + std::to_string(k);
    {
      std::ostringstream note;
      note << "factor-rule pairs:";
      for (auto [i, j] : pieces) note << " (" << i << "," << j << ")";
      r.domain_note = note.str();
    }
    r.anchor = kProductAnchor;
    r.margin = [pp, qq, pieces, split](const Pt& a, const Pt& b) {
      const Split s = split(a, b);
      double best = kNoMargin;
      for (auto [i, j] : pieces) {
        const double mi = pp->rules[i].margin(s.a1, s.b1);
        const double mj = qq->rules[j].margin(s.a2, s.b2);
        best = std::max(best, std::min(mi, mj));
      }
      return best;
    };
    r.section = [pp, qq, pieces, split](const Pt& a, const Pt& b) {
      const Split s = split(a, b);
      double best = kNoMargin;
      std::size_t bi = 0, bj = 0;
      for (auto [i, j] : pieces) {
        const double mi = pp->rules[i].margin(s.a1, s.b1);
        const double mj = qq->rules[j].margin(s.a2, s.b2);
        const double m = std::min(mi, mj);
        if (m > best) {
          best = m;
          bi = i;
          bj = j;
        }
      }
      Path pa = pp->rules[bi].section(s.a1, s.b1);
      Path pb = qq->rules[bj].section(s.a2, s.b2);
      return Path{[pa = std::move(pa), pb = std::move(pb)](double t) {
        Pt x = pa(t);
        Pt y = pb(t);
        x.insert(x.end(), y.begin(), y.end());
        return x;
      }};
    };
    out.rules.push_back(std::move(r));
  }
  return out;
}

Planner retract_transfer(Planner inner, GeometricSpace ambient, Retraction r) {
  Planner out;
  out.name = inner.name + ", transferred to the ambient space";
  out.space = std::move(ambient);
  out.reserved = false;
  out.notes = r.note;

  auto in = std::make_shared<Planner>(std::move(inner));
  auto rr = std::make_shared<Retraction>(std::move(r));

  for (std::size_t i = 0; i < in->rules.size(); ++i) {
    PlannerRule rule;
    rule.name = in->rules[i].name + " (transferred)";
    rule.domain_note = "pairs whose spine images satisfy: " + in->rules[i].domain_note;
    rule.anchor = kTransferAnchor;
    rule.margin = [in, rr, i](const Pt& a, const Pt& b) {
      const Pt wa = rr->to_inner(rr->retract(a));
      const Pt wb = rr->to_inner(rr->retract(b));
      return in->rules[i].margin(wa, wb);
    };
    rule.section = [in, rr, i](const Pt& a, const Pt& b) {
      const Pt wa = rr->to_inner(rr->retract(a));
      const Pt wb = rr->to_inner(rr->retract(b));
      Path spine = in->rules[i].section(wa, wb);
      Path mid = Path{[rr, spine = std::move(spine)](double t) {
        return rr->from_inner(spine(t));
      }};
      Path leg1 = Path{[rr, a](double t) { return rr->track(a, t); }};
      Path leg3 = Path{[rr, b](double t) { return rr->track(b, 1.0 - t); }};
      return chain(std::move(leg1), chain(std::move(mid), std::move(leg3), 0.5), 1.0 / 3.0);
    };
    out.rules.push_back(std::move(rule));
  }
  return out;
}

}  // namespace tcat
