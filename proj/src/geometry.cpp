#include "tcat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tcat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLobeTol = 1e-9;  // classification threshold on wedge lobes

double sq(double x) { return x * x; }

// Surface measure of the unit m-sphere, used to pick wedge lobes with
// probability proportional to their size.
double sphere_area(unsigned m) {
  const double k = (m + 1) / 2.0;
  return 2.0 * std::pow(M_PI, k) / std::tgamma(k);
}

void sample_unit_vector(std::mt19937_64& rng, double* out, std::size_t n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = gauss(rng);
      norm2 += out[i] * out[i];
    }
  } while (norm2 < 1e-12);
  const double inv = 1.0 / std::sqrt(norm2);
  for (std::size_t i = 0; i < n; ++i) out[i] *= inv;
}

double cylinder_distance(const double* a, const double* b, unsigned heights) {
  const double arc = circle_distance(a[0], a[1], b[0], b[1]);
  double h2 = 0.0;
  for (unsigned i = 0; i < heights; ++i) h2 += sq(a[2 + i] - b[2 + i]);
  return std::sqrt(sq(arc) + h2);
}

double cylinder_norm_defect(const double* p) {
  return std::fabs(std::sqrt(sq(p[0]) + sq(p[1])) - 1.0);
}

// Distance from a cylinder point to the removed point (-1, 0, 0...).
double puncture_distance(const double* p, unsigned heights) {
  static const double kPuncture[2] = {-1.0, 0.0};
  const double arc = circle_distance(p[0], p[1], kPuncture[0], kPuncture[1]);
  double h2 = 0.0;
  for (unsigned i = 0; i < heights; ++i) h2 += sq(p[2 + i]);
  return std::sqrt(sq(arc) + h2);
}

}  // namespace

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  if (a <= -M_PI) a += 2.0 * M_PI;
  if (a > M_PI) a -= 2.0 * M_PI;
  return a;
}

double circle_distance(double ca, double sa, double cb, double sb) {
  // Angle between two (not necessarily exactly unit) circle points.
  return std::fabs(std::atan2(sa * cb - ca * sb, ca * cb + sa * sb));
}

double sphere_distance(const double* a, const double* b, std::size_t n) {
  // 2*atan2(|a-b|, |a+b|) equals the angle for unit vectors and, unlike
  // acos of the dot product, stays accurate near 0 and near pi.
  double diff = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    diff += sq(a[i] - b[i]);
    sum += sq(a[i] + b[i]);
  }
  return 2.0 * std::atan2(std::sqrt(diff), std::sqrt(sum));
}

GeometricSpace GeometricSpace::sphere(unsigned m) {
  if (m == 0) throw std::invalid_argument("sphere lobe dimension must be positive");
  GeometricSpace g;
  g.kind = Kind::Sphere;
  g.param = m;
  return g;
}

GeometricSpace GeometricSpace::euclidean(unsigned n) {
  GeometricSpace g;
  g.kind = Kind::Euclidean;
  g.param = n;
  return g;
}

GeometricSpace GeometricSpace::product(std::vector<GeometricSpace> factors) {
  if (factors.size() < 2) throw std::invalid_argument("product needs at least two factors");
  GeometricSpace g;
  g.kind = Kind::Product;
  g.factors = std::move(factors);
  return g;
}

GeometricSpace GeometricSpace::wedge(unsigned m) {
  if (m == 0) throw std::invalid_argument("wedge sphere dimension must be positive");
  if (m > 15) throw std::invalid_argument("wedge sphere dimension limited to 15");
  GeometricSpace g;
  g.kind = Kind::Wedge;
  g.param = m;
  return g;
}

GeometricSpace GeometricSpace::punctured_cylinder(unsigned n) {
  if (n == 0) throw std::invalid_argument("cylinder needs at least one height");
  GeometricSpace g;
  g.kind = Kind::PuncturedCylinder;
  g.param = n;
  return g;
}

GeometricSpace GeometricSpace::config_cylinder(unsigned n) {
  if (n == 0) throw std::invalid_argument("cylinder needs at least one height");
  GeometricSpace g;
  g.kind = Kind::ConfigCylinder;
  g.param = n;
  return g;
}

std::size_t GeometricSpace::ambient_dim() const {
  switch (kind) {
    case Kind::Sphere: return param + 1;
    case Kind::Euclidean: return param;
    case Kind::Product: {
      std::size_t total = 0;
      for (const auto& f : factors) total += f.ambient_dim();
      return total;
    }
    case Kind::Wedge: return 2 + (param + 1);
    case Kind::PuncturedCylinder: return 2 + param;
    case Kind::ConfigCylinder: return 2 * (2 + param);
  }
  return 0;
}

double GeometricSpace::membership_error(const Pt& p) const {
  if (p.size() != ambient_dim()) return kInf;
  switch (kind) {
    case Kind::Sphere: {
      double norm2 = 0.0;
      for (double x : p) norm2 += x * x;
      return std::fabs(std::sqrt(norm2) - 1.0);
    }
    case Kind::Euclidean:
      return 0.0;
    case Kind::Product: {
      double worst = 0.0;
      std::size_t off = 0;
      for (const auto& f : factors) {
        const std::size_t n = f.ambient_dim();
        Pt part(p.begin() + off, p.begin() + off + n);
        worst = std::max(worst, f.membership_error(part));
        off += n;
      }
      return worst;
    }
    case Kind::Wedge: {
      const unsigned m = param;
      double err = cylinder_norm_defect(p.data());
      double snorm2 = 0.0;
      for (unsigned i = 0; i <= m; ++i) snorm2 += sq(p[2 + i]);
      err = std::max(err, std::fabs(std::sqrt(snorm2) - 1.0));
      // At least one part must sit at its basepoint.
      const double dc = circle_distance(p[0], p[1], 1.0, 0.0);
      static const double kBase[16] = {1.0};  // e1, padded with zeros
      const double ds = sphere_distance(p.data() + 2, kBase, m + 1);
      return std::max(err, std::min(dc, ds));
    }
    case Kind::PuncturedCylinder:
      return cylinder_norm_defect(p.data());
    case Kind::ConfigCylinder: {
      const std::size_t half = 2 + param;
      return std::max(cylinder_norm_defect(p.data()),
                      cylinder_norm_defect(p.data() + half));
    }
  }
  return kInf;
}

double GeometricSpace::strict_margin(const Pt& p) const {
  if (p.size() != ambient_dim()) return 0.0;
  switch (kind) {
    case Kind::PuncturedCylinder:
      return puncture_distance(p.data(), param);
    case Kind::ConfigCylinder: {
      const std::size_t half = 2 + param;
      return cylinder_distance(p.data(), p.data() + half, param);
    }
    case Kind::Product: {
      double worst = kInf;
      std::size_t off = 0;
      for (const auto& f : factors) {
        const std::size_t n = f.ambient_dim();
        Pt part(p.begin() + off, p.begin() + off + n);
        worst = std::min(worst, f.strict_margin(part));
        off += n;
      }
      return worst;
    }
    default:
      return kInf;
  }
}

double GeometricSpace::distance(const Pt& a, const Pt& b) const {
  switch (kind) {
    case Kind::Sphere:
      return sphere_distance(a.data(), b.data(), param + 1);
    case Kind::Euclidean: {
      double d2 = 0.0;
      for (unsigned i = 0; i < param; ++i) d2 += sq(a[i] - b[i]);
      return std::sqrt(d2);
    }
    case Kind::Product: {
      double d2 = 0.0;
      std::size_t off = 0;
      for (const auto& f : factors) {
        const std::size_t n = f.ambient_dim();
        Pt pa(a.begin() + off, a.begin() + off + n);
        Pt pb(b.begin() + off, b.begin() + off + n);
        d2 += sq(f.distance(pa, pb));
        off += n;
      }
      return std::sqrt(d2);
    }
    case Kind::Wedge: {
      const unsigned m = param;
      static const double kBase[16] = {1.0};
      const double dca = circle_distance(a[0], a[1], 1.0, 0.0);
      const double dsa = sphere_distance(a.data() + 2, kBase, m + 1);
      const double dcb = circle_distance(b[0], b[1], 1.0, 0.0);
      const double dsb = sphere_distance(b.data() + 2, kBase, m + 1);
      const bool a_on_circle = dsa < kLobeTol;
      const bool b_on_circle = dsb < kLobeTol;
      const bool a_on_sphere = dca < kLobeTol;
      const bool b_on_sphere = dcb < kLobeTol;
      double best = kInf;
      if (a_on_circle && b_on_circle)
        best = std::min(best, circle_distance(a[0], a[1], b[0], b[1]));
      if (a_on_sphere && b_on_sphere)
        best = std::min(best, sphere_distance(a.data() + 2, b.data() + 2, m + 1));
      // Route through the join point.
      const double ca = a_on_circle ? dca : dsa;
      const double cb = b_on_circle ? dcb : dsb;
      best = std::min(best, ca + cb);
      return best;
    }
    case Kind::PuncturedCylinder:
      return cylinder_distance(a.data(), b.data(), param);
    case Kind::ConfigCylinder: {
      const std::size_t half = 2 + param;
      const double d1 = cylinder_distance(a.data(), b.data(), param);
      const double d2 = cylinder_distance(a.data() + half, b.data() + half, param);
      return std::sqrt(sq(d1) + sq(d2));
    }
  }
  return kInf;
}

Pt GeometricSpace::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  switch (kind) {
    case Kind::Sphere: {
      Pt p(param + 1);
      sample_unit_vector(rng, p.data(), param + 1);
      return p;
    }
    case Kind::Euclidean: {
      Pt p(param);
      for (auto& x : p) x = box(rng);
      return p;
    }
    case Kind::Product: {
      Pt p;
      p.reserve(ambient_dim());
      for (const auto& f : factors) {
        Pt part = f.sample(rng);
        p.insert(p.end(), part.begin(), part.end());
      }
      return p;
    }
    case Kind::Wedge: {
      Pt p(ambient_dim(), 0.0);
      p[0] = 1.0;
      p[1] = 0.0;
      p[2] = 1.0;  // both parts at their basepoints
      const double wc = sphere_area(1);
      const double ws = sphere_area(param);
      std::uniform_real_distribution<double> pick(0.0, wc + ws);
      if (pick(rng) < wc) {
        const double t = angle(rng);
        p[0] = std::cos(t);
        p[1] = std::sin(t);
      } else {
        sample_unit_vector(rng, p.data() + 2, param + 1);
      }
      return p;
    }
    case Kind::PuncturedCylinder: {
      Pt p(2 + param);
      do {
        const double t = angle(rng);
        p[0] = std::cos(t);
        p[1] = std::sin(t);
        for (unsigned i = 0; i < param; ++i) p[2 + i] = box(rng);
      } while (puncture_distance(p.data(), param) < 1e-9);
      return p;
    }
    case Kind::ConfigCylinder: {
      const std::size_t half = 2 + param;
      Pt p(2 * half);
      do {
        for (int body = 0; body < 2; ++body) {
          const double t = angle(rng);
          p[body * half + 0] = std::cos(t);
          p[body * half + 1] = std::sin(t);
          for (unsigned i = 0; i < param; ++i) p[body * half + 2 + i] = box(rng);
        }
      } while (cylinder_distance(p.data(), p.data() + half, param) < 1e-9);
      return p;
    }
  }
  return {};
}

std::string GeometricSpace::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Sphere: out << "unit sphere S^" << param; break;
    case Kind::Euclidean:
      out << "euclidean R^" << param << " (sampled from [-3,3]^" << param << ")";
      break;
    case Kind::Product: {
      out << "product(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out << ", ";
        out << factors[i].describe();
      }
      out << ")";
      break;
    }
    case Kind::Wedge: out << "wedge of a circle and S^" << param; break;
    case Kind::PuncturedCylinder:
      out << "cylinder S^1 x R^" << param << " with the point (angle pi, 0) removed";
      break;
    case Kind::ConfigCylinder:
      out << "ordered pairs of distinct points on the cylinder S^1 x R^" << param;
      break;
  }
  return out.str();
}

}  // namespace tcat
