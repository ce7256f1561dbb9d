#pragma once

#include <cstddef>
#include <vector>

#include "tcat/scalar.hpp"

namespace tcat {

using Vec = std::vector<Scalar>;

class Matrix;

// Reduced row echelon form, plus the pivot column of each nonzero row.
struct Echelon {
  std::vector<Vec> reduced_rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

// Dense matrix over an exact field.  Rows are the outer index.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field f);
  static Matrix from_rows(const std::vector<Vec>& rows, Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;

  Echelon rref() const;

  std::size_t rank() const { return rref().pivot_cols.size(); }

  // Basis of the right null space {x : M x = 0}, one vector per free column.
  std::vector<Vec> kernel_basis() const;

  bool operator==(const Matrix& o) const;

 private:
  std::size_t rows_, cols_;
  Field field_;
  std::vector<Scalar> data_;
};

// Dimension of the span of a set of coordinate vectors.
std::size_t span_dimension(const std::vector<Vec>& vectors, std::size_t ambient, Field f);

// Maintains an echelonized basis of a growing subspace; used to build ideal
// power bases without re-reducing from scratch.
class IncrementalSpan {
 public:
  IncrementalSpan(std::size_t ambient, Field f);

  // Reduces v against the current basis; if a nonzero remainder survives it
  // joins the basis.  Returns true exactly when the dimension grew.
  bool insert(Vec v);
  bool contains(Vec v) const;

  std::size_t dimension() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }

 private:
  // Eliminates known pivots from v in place; returns the leading index or
  // ambient_ if v reduced to zero.
  std::size_t reduce(Vec& v) const;

  std::size_t ambient_;
  Field field_;
  std::vector<Vec> basis_;               // each row normalized to leading 1
  std::vector<std::size_t> col_owner_;   // column -> index in basis_, or npos
};

}  // namespace tcat
