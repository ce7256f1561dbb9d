#pragma once

#include <functional>
#include <vector>

#include "tcat/geometry.hpp"

namespace tcat {

// A motion is a map from [0,1] into a coordinate space.  Evaluation outside
// [0,1] is clamped.
struct Path {
  std::function<Pt(double)> eval;

  Pt operator()(double t) const;
};

Path constant_path(Pt p);
Path reversed(Path p);

// Runs `a` on [0, split] and `b` on [split, 1].
Path chain(Path a, Path b, double split = 0.5);

// Chains with the time split proportional to the supplied leg lengths, so a
// vanishing leg consumes no time.  Lengths must be nonnegative; when both are
// zero the result is constant at the start of `a`.
Path chain_by_length(Path a, double len_a, Path b, double len_b);

// Straight segment in euclidean coordinates.
Path straight_line(Pt a, Pt b);

// Constant-speed great-circle arc from A to B (unit vectors, not antipodal;
// nearly parallel inputs degrade gracefully to a normalized linear blend).
Path sphere_geodesic(Pt A, Pt B);

// Half great circle from -B to B leaving in the direction of the unit tangent
// w at B:  s -> -cos(pi s) B + sin(pi s) w.
Path sphere_semicircle(Pt B, Pt w);

// Circle arc starting at angle `from` and sweeping the signed angle `delta`,
// emitted as (cos, sin) pairs.
Path circle_sweep(double from, double delta);

std::vector<Pt> sample_path(const Path& p, std::size_t samples);

}  // namespace tcat
