#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tcat/matrix.hpp"
#include "tcat/scalar.hpp"

namespace tcat {

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// Sparse coordinate vector relative to an algebra basis: (index, coefficient)
// pairs, strictly increasing indices, no zero coefficients.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

struct BasisElement {
  std::size_t id;
  unsigned degree;
  std::string label;
};

struct AlgebraMismatch : std::logic_error {
  AlgebraMismatch() : std::logic_error("operands belong to different algebras") {}
};

class Element;

// Finite-dimensional graded-commutative algebra with a distinguished
// homogeneous basis and a full multiplication table.  Basis slot 0 is the
// unit.  Instances are immutable and shared via AlgebraPtr.
class GradedAlgebra : public std::enable_shared_from_this<GradedAlgebra> {
 public:
  // ---- factories -------------------------------------------------------
  static AlgebraPtr point(Field f);
  // k[x]/(x^height) with deg x = degree.  An odd-degree generator in
  // characteristic != 2 squares to zero, so height > 2 is rejected there.
  static AlgebraPtr truncated_polynomial(Field f, const std::string& label,
                                         unsigned degree, unsigned height);
  // Exterior algebra on the given generators; degrees must be odd unless
  // the characteristic is two.
  static AlgebraPtr exterior(Field f,
                             const std::vector<std::pair<std::string, unsigned>>& generators);
  // Basis pairs with the sign rule
  //   (a1 (x) b1)(a2 (x) b2) = (-1)^{deg b1 deg a2} a1 a2 (x) b1 b2.
  static AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b);
  // One-point union on cohomology: positive-degree parts meet trivially and
  // cross products vanish.  Clashing labels from b get a prime suffix.
  static AlgebraPtr wedge_sum(const AlgebraPtr& a, const AlgebraPtr& b);

  // ---- structure -------------------------------------------------------
  Field field() const { return field_; }
  std::size_t dimension() const { return basis_.size(); }
  const BasisElement& basis(std::size_t i) const { return basis_.at(i); }
  unsigned top_degree() const { return top_degree_; }
  const SparseVec& basis_product(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> positive_degree_ids() const;

  // Dimension of each graded piece, index = degree.
  std::vector<std::size_t> betti_numbers() const;

  Element unit() const;
  Element zero() const;
  Element basis_element(std::size_t i) const;
  Element element(SparseVec coords) const;

  // ---- self-check ------------------------------------------------------
  // Verifies unit, degree additivity, graded commutativity and
  // associativity.  Associativity is exhaustive up to 32 basis elements and
  // sampled deterministically above that.
  struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
  };
  ValidationReport validate(std::size_t assoc_samples = 20000) const;

 private:
  GradedAlgebra() = default;
  friend class AlgebraBuilder;

  Field field_{};
  std::vector<BasisElement> basis_;
  std::vector<SparseVec> table_;  // row-major dimension x dimension
  unsigned top_degree_ = 0;
};

// Element of a GradedAlgebra, held as a sparse coordinate vector.
class Element {
 public:
  Element(AlgebraPtr alg, SparseVec coords);

  const AlgebraPtr& algebra() const { return alg_; }
  const SparseVec& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  Element operator-() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element scaled(const Scalar& c) const;
  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  // True when every term has one degree; reports it (zero counts as
  // homogeneous of any degree and reports 0).
  bool is_homogeneous(unsigned* degree_out = nullptr) const;

  Vec dense() const;
  std::string str() const;

 private:
  void check(const Element& o) const {
    if (alg_.get() != o.alg_.get()) throw AlgebraMismatch{};
  }

  AlgebraPtr alg_;
  SparseVec coords_;
};

// Sparse-vector helpers shared with the invariant computations.
SparseVec sparse_add(const SparseVec& a, const SparseVec& b);
SparseVec sparse_scale(const SparseVec& a, const Scalar& c);

}  // namespace tcat
