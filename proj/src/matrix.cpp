#include "tcat/matrix.hpp"

#include <limits>
#include <stdexcept>

namespace tcat {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, Field f) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_, Scalar::zero(field_));
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Echelon Matrix::rref() const {
  Matrix m = *this;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < cols_ && lead_row < rows_; ++col) {
    std::size_t pr = npos;
    for (std::size_t r = lead_row; r < rows_; ++r)
      if (!m.at(r, col).is_zero()) { pr = r; break; }
    if (pr == npos) continue;
    if (pr != lead_row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(pr, c), m.at(lead_row, c));
    Scalar inv = m.at(lead_row, col).inverse();
    for (std::size_t c = col; c < cols_; ++c) m.at(lead_row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead_row || m.at(r, col).is_zero()) continue;
      Scalar factor = m.at(r, col);
      for (std::size_t c = col; c < cols_; ++c) m.at(r, c) -= factor * m.at(lead_row, c);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(m.row(r));
  return Echelon{std::move(out), std::move(pivots)};
}

std::vector<Vec> Matrix::kernel_basis() const {
  Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(cols_, Scalar::zero(field_));
    v[free_col] = Scalar::one(field_);
    // Back-substitute: pivot row i reads x_{p_i} + sum(free coeffs) = 0.
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      v[e.pivot_cols[i]] = -e.reduced_rows[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

std::size_t span_dimension(const std::vector<Vec>& vectors, std::size_t ambient, Field f) {
  IncrementalSpan span(ambient, f);
  for (const Vec& v : vectors) span.insert(v);
  return span.dimension();
}

IncrementalSpan::IncrementalSpan(std::size_t ambient, Field f)
    : ambient_(ambient), field_(f), col_owner_(ambient, npos) {}

std::size_t IncrementalSpan::reduce(Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector has wrong ambient dimension");
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (v[c].is_zero()) continue;
    std::size_t owner = col_owner_[c];
    if (owner == npos) return c;
    Scalar factor = v[c];
    const Vec& b = basis_[owner];
    for (std::size_t k = c; k < ambient_; ++k)
      if (!b[k].is_zero()) v[k] -= factor * b[k];
  }
  return ambient_;
}

bool IncrementalSpan::insert(Vec v) {
  std::size_t lead = reduce(v);
  if (lead == ambient_) return false;
  Scalar inv = v[lead].inverse();
  for (std::size_t k = lead; k < ambient_; ++k)
    if (!v[k].is_zero()) v[k] *= inv;
  col_owner_[lead] = basis_.size();
  basis_.push_back(std::move(v));
  return true;
}

bool IncrementalSpan::contains(Vec v) const { return reduce(v) == ambient_; }

}  // namespace tcat
