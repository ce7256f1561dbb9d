#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "tcat/verifier.hpp"

namespace tcat {

namespace {

constexpr double kExactTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxProductAdversarial = 12;

// Move from z roughly eps along some planner motion toward target, staying on
// the space; used to build perturbed but admissible probe pairs.
Pt nudge(const Planner& p, const Pt& z, const Pt& target, double eps) {
  const int r = p.select_rule(z, target);
  if (r < 0) return z;
  const Path path = p.rules[r].section(z, target);
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (lo + hi);
    (p.space.distance(z, path(mid)) < eps ? lo : hi) = mid;
  }
  return path(lo);
}

Pt circle_point(double angle, const Pt& heights = {}) {
  Pt z{std::cos(angle), std::sin(angle)};
  z.insert(z.end(), heights.begin(), heights.end());
  return z;
}

void add_all_pairs(std::vector<std::pair<Pt, Pt>>& out, const std::vector<Pt>& pts) {
  for (const auto& a : pts)
    for (const auto& b : pts) out.emplace_back(a, b);
}

}  // namespace

std::vector<std::pair<Pt, Pt>> adversarial_pairs(const GeometricSpace& g) {
  std::vector<std::pair<Pt, Pt>> out;
  switch (g.kind) {
    case GeometricSpace::Kind::Sphere: {
      const std::size_t n = g.ambient_dim();
      std::vector<Pt> pts;
      Pt e1(n, 0.0), ne1(n, 0.0), pole(n, 0.0), npole(n, 0.0);
      e1[0] = 1.0;
      ne1[0] = -1.0;
      pole[n - 1] = 1.0;
      npole[n - 1] = -1.0;
      pts = {e1, ne1, pole, npole};
      add_all_pairs(out, pts);
      break;
    }
    case GeometricSpace::Kind::Euclidean: {
      const std::size_t n = g.ambient_dim();
      std::vector<Pt> pts{Pt(n, 0.0), Pt(n, 3.0), Pt(n, -3.0)};
      add_all_pairs(out, pts);
      break;
    }
    case GeometricSpace::Kind::Wedge: {
      const unsigned m = g.param;
      Pt join(2 + m + 1, 0.0);
      join[0] = 1.0;
      join[2] = 1.0;
      Pt circle_far(join), sphere_far(join), sphere_side(join);
      circle_far[0] = -1.0;                  // half way around the circle lobe
      sphere_far[2] = -1.0;                  // sphere antipode of the join
      sphere_side[2] = 0.0;
      sphere_side[2 + m] = 1.0;              // sphere point by the field pole
      add_all_pairs(out, {join, circle_far, sphere_far, sphere_side});
      break;
    }
    case GeometricSpace::Kind::PuncturedCylinder: {
      const Pt zero(g.param, 0.0);
      Pt high(zero), low(zero);
      high[0] = 3.0;
      low[0] = -3.0;
      const std::vector<Pt> pts{
          circle_point(M_PI + 1e-3, zero),  // skims the puncture
          circle_point(M_PI - 1e-3, zero),
          circle_point(0.0, zero),          // opposite the puncture
          circle_point(M_PI, high),         // above the puncture
          circle_point(0.5, low),
      };
      add_all_pairs(out, pts);
      break;
    }
    case GeometricSpace::Kind::ConfigCylinder: {
      const unsigned n = g.param;
      auto body = [n](double angle, double h) {
        Pt z{std::cos(angle), std::sin(angle)};
        z.resize(2 + n, 0.0);
        z[2] = h;
        return z;
      };
      auto pair_of = [](Pt first, Pt second) {
        first.insert(first.end(), second.begin(), second.end());
        return first;
      };
      const Pt swap_a = pair_of(body(0.0, -1.0), body(M_PI, 1.0));
      const Pt swap_b = pair_of(body(M_PI, 1.0), body(0.0, -1.0));
      const Pt close_a = pair_of(body(0.0, 0.0), body(1e-3, 0.0));
      const Pt close_b = pair_of(body(2.0, 0.0), body(2.0, 1e-3));
      const Pt stacked = pair_of(body(1.0, -3.0), body(1.0, 3.0));
      add_all_pairs(out, {swap_a, swap_b, close_a, close_b, stacked});
      break;
    }
    case GeometricSpace::Kind::Product: {
      // Combine the first few adversarial points of each factor pairwise.
      std::vector<std::vector<std::pair<Pt, Pt>>> per_factor;
      for (const auto& f : g.factors) per_factor.push_back(adversarial_pairs(f));
      std::size_t count = kMaxProductAdversarial;
      for (const auto& lst : per_factor) count = std::min(count, lst.size());
      for (std::size_t i = 0; i < count; ++i) {
        Pt a, b;
        for (const auto& lst : per_factor) {
          a.insert(a.end(), lst[i].first.begin(), lst[i].first.end());
          b.insert(b.end(), lst[i].second.begin(), lst[i].second.end());
        }
        out.emplace_back(std::move(a), std::move(b));
      }
      break;
    }
  }
  return out;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["schema"] = "tcat.verification/1";
  j["planner"] = planner;
  j["space"] = space;
  j["seed"] = seed;
  j["pairs"] = pairs;
  j["pass"] = pass;
  j["rule_usage"] = rule_usage;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (std::isfinite(c.value)) jc["value"] = c.value;
    else jc["value"] = c.value > 0 ? "inf" : "-inf";
    jc["detail"] = c.detail;
    j["checks"].push_back(jc);
  }
  return j.dump(2);
}

VerificationReport verify_planner(const Planner& p, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.planner = p.name;
  rep.space = p.space.describe();
  rep.seed = opts.seed;
  rep.pairs = opts.pairs;
  rep.rule_usage.assign(p.rules.size(), 0);

  std::mt19937_64 rng(opts.seed);

  // --- sweep over random pairs: coverage, endpoints, membership, separation.
  long covered = 0;
  double worst_endpoint = 0.0;
  double worst_membership = 0.0;
  double min_separation = kInf;
  for (int i = 0; i < opts.pairs; ++i) {
    const Pt a = p.space.sample(rng), b = p.space.sample(rng);
    const int r = p.select_rule(a, b);
    if (r < 0) continue;
    ++covered;
    ++rep.rule_usage[static_cast<std::size_t>(r)];
    const Path path = p.rules[r].section(a, b);
    worst_endpoint = std::max(worst_endpoint, p.space.distance(path(0.0), a));
    worst_endpoint = std::max(worst_endpoint, p.space.distance(path(1.0), b));
    for (int k = 0; k < opts.samples_per_path; ++k) {
      const double t = double(k) / (opts.samples_per_path - 1);
      const Pt z = path(t);
      worst_membership = std::max(worst_membership, p.space.membership_error(z));
      min_separation = std::min(min_separation, p.space.strict_margin(z));
    }
  }

  {
    CheckResult c;
    c.name = "coverage";
    c.value = opts.pairs > 0 ? double(covered) / opts.pairs : 1.0;
    c.pass = covered == opts.pairs;
    c.detail = std::to_string(covered) + " of " + std::to_string(opts.pairs) +
               " sampled pairs claimed by a rule";
    rep.checks.push_back(c);
  }
  {
    CheckResult c;
    c.name = "endpoint";
    c.value = worst_endpoint;
    c.pass = worst_endpoint < kExactTol;
    c.detail = "largest distance between a motion's ends and the requested pair";
    rep.checks.push_back(c);
  }
  {
    CheckResult c;
    c.name = "membership";
    c.value = worst_membership;
    c.pass = worst_membership < kExactTol;
    c.detail = "largest constraint defect over all inspected motion points";
    rep.checks.push_back(c);
  }
  {
    CheckResult c;
    c.name = "separation";
    c.value = min_separation;
    c.pass = min_separation > 0.0;
    c.detail = std::isfinite(min_separation)
                   ? "least distance from any motion point to the removed locus"
                   : "the space removes nothing, so separation is unconstrained";
    rep.checks.push_back(c);
  }

  // --- diagonal behaviour where a reserved first choice is claimed.
  {
    CheckResult c;
    c.name = "reserved";
    if (!p.reserved) {
      c.pass = true;
      c.value = 0.0;
      c.detail = "planner does not claim a reserved rule on the diagonal";
    } else {
      double drift = 0.0;
      for (int i = 0; i < opts.diagonal_pairs; ++i) {
        const Pt a = p.space.sample(rng);
        const int r = p.select_rule(a, a);
        if (r < 0) {
          drift = kInf;
          break;
        }
        const Path path = p.rules[r].section(a, a);
        for (int k = 0; k < opts.samples_per_path; ++k) {
          const double t = double(k) / (opts.samples_per_path - 1);
          drift = std::max(drift, p.space.distance(path(t), a));
        }
      }
      c.value = drift;
      c.pass = drift < kExactTol;
      c.detail = "largest movement of a motion whose start and goal coincide";
    }
    rep.checks.push_back(c);
  }

  // --- stability: nudging a pair by much less than its margin must keep the
  // selected rule applicable, and the motion must move about as little.
  {
    double worst_ratio = 0.0;
    long escapes = 0;
    for (int i = 0; i < opts.perturbation_pairs; ++i) {
      const Pt a = p.space.sample(rng), b = p.space.sample(rng);
      const int r = p.select_rule(a, b);
      if (r < 0) continue;
      const double m = p.rule_margin(static_cast<std::size_t>(r), a, b);
      const double eps = std::min(m / 8.0, 1e-3);
      const Pt a2 = nudge(p, a, p.space.sample(rng), eps);
      const Pt b2 = nudge(p, b, p.space.sample(rng), eps);
      const double moved = p.space.distance(a, a2) + p.space.distance(b, b2);
      if (moved < 1e-12) continue;
      if (p.rule_margin(static_cast<std::size_t>(r), a2, b2) <= 0.0) {
        ++escapes;
        continue;
      }
      const Path p1 = p.rules[r].section(a, b);
      const Path p2 = p.rules[r].section(a2, b2);
      double sup = 0.0;
      for (int k = 0; k < opts.samples_per_path; ++k) {
        const double t = double(k) / (opts.samples_per_path - 1);
        sup = std::max(sup, p.space.distance(p1(t), p2(t)));
      }
      worst_ratio = std::max(worst_ratio, sup / moved);
    }
    CheckResult c;
    c.name = "stability";
    c.value = worst_ratio;
    c.pass = escapes == 0 && worst_ratio < 50.0;
    c.detail = std::to_string(escapes) +
               " perturbations left their rule; value is the worst "
               "motion-change to endpoint-change ratio";
    rep.checks.push_back(c);
  }

  // --- determinate behaviour on hand-picked difficult pairs.
  {
    double worst = 0.0;
    long uncovered = 0;
    double min_sep = kInf;
    const auto pairs = adversarial_pairs(p.space);
    for (const auto& [a, b] : pairs) {
      const int r = p.select_rule(a, b);
      if (r < 0) {
        ++uncovered;
        continue;
      }
      const Path path = p.rules[r].section(a, b);
      worst = std::max(worst, p.space.distance(path(0.0), a));
      worst = std::max(worst, p.space.distance(path(1.0), b));
      for (int k = 0; k < opts.samples_per_path; ++k) {
        const double t = double(k) / (opts.samples_per_path - 1);
        const Pt z = path(t);
        worst = std::max(worst, p.space.membership_error(z));
        min_sep = std::min(min_sep, p.space.strict_margin(z));
      }
    }
    CheckResult c;
    c.name = "adversarial";
    c.value = worst;
    c.pass = uncovered == 0 && worst < kExactTol && min_sep > 0.0;
    c.detail = std::to_string(pairs.size()) + " difficult pairs, " +
               std::to_string(uncovered) + " uncovered";
    rep.checks.push_back(c);
  }

  // --- every rule must actually win somewhere on the sample.
  {
    std::size_t used = 0;
    for (std::size_t n : rep.rule_usage)
      if (n > 0) ++used;
    CheckResult c;
    c.name = "rule-usage";
    c.value = double(used);
    c.pass = used == p.rules.size();
    std::string counts;
    for (std::size_t i = 0; i < rep.rule_usage.size(); ++i) {
      if (i) counts += ", ";
      counts += std::to_string(rep.rule_usage[i]);
    }
    c.detail = "selections per rule: [" + counts + "]";
    rep.checks.push_back(c);
  }

  rep.pass = true;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

}  // namespace tcat
