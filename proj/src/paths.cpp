#include "tcat/paths.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace tcat {

Pt Path::operator()(double t) const {
  t = std::max(0.0, std::min(1.0, t));
  return eval(t);
}

Path constant_path(Pt p) {
  return Path{[p = std::move(p)](double) { return p; }};
}

Path reversed(Path p) {
  return Path{[p = std::move(p)](double t) { return p(1.0 - t); }};
}

Path chain(Path a, Path b, double split) {
  if (!(split > 0.0) || !(split < 1.0)) throw std::invalid_argument("split must lie in (0,1)");
  return Path{[a = std::move(a), b = std::move(b), split](double t) {
    if (t <= split) return a(t / split);
    return b((t - split) / (1.0 - split));
  }};
}

Path chain_by_length(Path a, double len_a, Path b, double len_b) {
  if (len_a < 0.0 || len_b < 0.0) throw std::invalid_argument("leg lengths must be nonnegative");
  const double total = len_a + len_b;
  if (total <= 0.0) {
    return Path{[a = std::move(a)](double) { return a(0.0); }};
  }
  const double split = len_a / total;
  if (split <= 0.0) return b;
  if (split >= 1.0) {
    // The second leg is instantaneous; still land on its endpoint at t = 1.
    return Path{[a = std::move(a), b = std::move(b)](double t) {
      if (t >= 1.0) return b(1.0);
      return a(t);
    }};
  }
  return chain(std::move(a), std::move(b), split);
}

Path straight_line(Pt a, Pt b) {
  return Path{[a = std::move(a), b = std::move(b)](double t) {
    Pt p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = (1.0 - t) * a[i] + t * b[i];
    return p;
  }};
}

Path sphere_geodesic(Pt A, Pt B) {
  double dot = 0.0;
  for (std::size_t i = 0; i < A.size(); ++i) dot += A[i] * B[i];
  dot = std::max(-1.0, std::min(1.0, dot));
  const double omega = std::acos(dot);
  const double s = std::sin(omega);
  if (s < 1e-12) {
    // Parallel (or numerically antipodal, which callers exclude): blend and
    // renormalize.
    return Path{[A = std::move(A), B = std::move(B)](double t) {
      Pt p(A.size());
      double n2 = 0.0;
      for (std::size_t i = 0; i < A.size(); ++i) {
        p[i] = (1.0 - t) * A[i] + t * B[i];
        n2 += p[i] * p[i];
      }
      const double inv = n2 > 0.0 ? 1.0 / std::sqrt(n2) : 0.0;
      for (auto& x : p) x *= inv;
      return p;
    }};
  }
  return Path{[A = std::move(A), B = std::move(B), omega, s](double t) {
    const double ca = std::sin((1.0 - t) * omega) / s;
    const double cb = std::sin(t * omega) / s;
    Pt p(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) p[i] = ca * A[i] + cb * B[i];
    return p;
  }};
}

Path sphere_semicircle(Pt B, Pt w) {
  return Path{[B = std::move(B), w = std::move(w)](double t) {
    const double c = -std::cos(M_PI * t);
    const double s = std::sin(M_PI * t);
    Pt p(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) p[i] = c * B[i] + s * w[i];
    return p;
  }};
}

Path circle_sweep(double from, double delta) {
  return Path{[from, delta](double t) {
    const double a = from + t * delta;
    return Pt{std::cos(a), std::sin(a)};
  }};
}

std::vector<Pt> sample_path(const Path& p, std::size_t samples) {
  if (samples < 2) samples = 2;
  std::vector<Pt> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    out.push_back(p(static_cast<double>(i) / static_cast<double>(samples - 1)));
  }
  return out;
}

}  // namespace tcat
