#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace tcat {

// Points are flat coordinate vectors; each space interprets its layout:
//   Sphere(m): m+1 unit-norm entries.
//   Euclidean(n): n entries (samples drawn from the box [-3,3]^n).
//   Product: factor layouts concatenated.
//   Wedge(m): circle pair then sphere (m+1)-vector; at least one part sits
//     at its lobe basepoint (circle (1,0) / sphere e1).
//   PuncturedCylinder(n): circle pair then n heights; the point (-1,0,0..)
//     is removed, so distance to it must stay positive.
//   ConfigCylinder(n): two cylinder layouts; the two bodies must differ.
using Pt = std::vector<double>;

double wrap_angle(double a);                       // into (-pi, pi]
double circle_distance(double ca, double sa, double cb, double sb);
double sphere_distance(const double* a, const double* b, std::size_t n);

struct GeometricSpace {
  enum class Kind { Sphere, Euclidean, Product, Wedge, PuncturedCylinder, ConfigCylinder };

  Kind kind = Kind::Euclidean;
  unsigned param = 0;                   // sphere m / euclidean n / cylinder n / wedge lobe m
  std::vector<GeometricSpace> factors;  // product only

  static GeometricSpace sphere(unsigned m);
  static GeometricSpace euclidean(unsigned n);
  static GeometricSpace product(std::vector<GeometricSpace> factors);
  static GeometricSpace wedge(unsigned m);  // circle joined to S^m
  static GeometricSpace punctured_cylinder(unsigned n);
  static GeometricSpace config_cylinder(unsigned n);

  std::size_t ambient_dim() const;

  // Defect of the equality constraints (unit norms, lobe membership);
  // a point belongs to the space when this is <= 1e-12.
  double membership_error(const Pt& p) const;

  // Distance to the removed locus (puncture / body collision); spaces
  // without strict constraints return +infinity.  Membership additionally
  // requires this to be strictly positive.
  double strict_margin(const Pt& p) const;

  double distance(const Pt& a, const Pt& b) const;

  Pt sample(std::mt19937_64& rng) const;

  std::string describe() const;
};

}  // namespace tcat
