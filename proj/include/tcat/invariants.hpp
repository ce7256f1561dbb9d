#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tcat/graded_algebra.hpp"

namespace tcat {

struct NamedElement {
  Element elem;
  std::string name;
};

// Dimensions of the successive nonzero power spans J_1, J_2, ... together
// with the factor names of one maximal nonzero product.
struct IdealPowerTrace {
  std::vector<std::size_t> power_dims;
  std::vector<std::string> witness_factors;
  std::size_t length() const { return power_dims.size(); }
};

// Iterates J_1 = span(generators), J_{k+1} = span(J_k * multipliers) until
// the span dies.  All generators and multipliers must be homogeneous; powers
// are echelonized degree by degree.
IdealPowerTrace ideal_power_trace(const AlgebraPtr& a,
                                  const std::vector<NamedElement>& generators,
                                  const std::vector<NamedElement>& multipliers);
IdealPowerTrace ideal_power_trace(const AlgebraPtr& a,
                                  const std::vector<NamedElement>& generators);

// Positive-degree basis elements, named by their labels.
std::vector<NamedElement> positive_basis(const AlgebraPtr& a);

// Longest nonzero product of positive-degree classes.
IdealPowerTrace cup_length_trace(const AlgebraPtr& a);
std::size_t cup_length(const AlgebraPtr& a);

// Classes u (x) 1 - 1 (x) u in aa = tensor_product(a, a), one per
// positive-degree basis element u of a.  These generate the multiplication
// kernel as an ideal, which is what makes the power iteration above
// compute honest powers of that kernel.
std::vector<NamedElement> bar_classes(const AlgebraPtr& a, const AlgebraPtr& aa);

// Basis of the kernel of the multiplication map a (x) a -> a, computed one
// degree at a time inside aa = tensor_product(a, a).
std::vector<NamedElement> zero_divisor_basis(const AlgebraPtr& a, const AlgebraPtr& aa);

struct ZclResult {
  AlgebraPtr tensor_square;
  IdealPowerTrace trace;
};

// Longest nonzero product of multiplication-kernel classes.
ZclResult zero_divisor_cup_length_trace(const AlgebraPtr& a);
std::size_t zero_divisor_cup_length(const AlgebraPtr& a);

}  // namespace tcat
