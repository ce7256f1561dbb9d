#include "tcat/graded_algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace tcat {

namespace {

// Koszul sign of moving the generators in mask t past those in mask s that
// sit above them; all-plus in characteristic two.
int merge_sign(unsigned long s, unsigned long t, const std::vector<unsigned>& degs, bool char_two) {
  if (char_two) return 1;
  int sign = 1;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (!(s >> i & 1)) continue;
    for (std::size_t j = 0; j < i; ++j)
      if ((t >> j & 1) && (degs[i] & 1) && (degs[j] & 1)) sign = -sign;
  }
  return sign;
}

}  // namespace

class AlgebraBuilder {
 public:
  static std::shared_ptr<GradedAlgebra> blank() {
    return std::shared_ptr<GradedAlgebra>(new GradedAlgebra());
  }
  static void fill(GradedAlgebra& a, Field f, std::vector<BasisElement> basis,
                   std::vector<SparseVec> table) {
    a.field_ = f;
    a.basis_ = std::move(basis);
    a.table_ = std::move(table);
    a.top_degree_ = 0;
    for (const auto& b : a.basis_) a.top_degree_ = std::max(a.top_degree_, b.degree);
    if (a.basis_.empty() || a.basis_[0].degree != 0)
      throw std::logic_error("algebra basis must start with the degree-zero unit");
    if (a.table_.size() != a.basis_.size() * a.basis_.size())
      throw std::logic_error("multiplication table has wrong size");
  }
};

const SparseVec& GradedAlgebra::basis_product(std::size_t i, std::size_t j) const {
  return table_.at(i * basis_.size() + j);
}

std::vector<std::size_t> GradedAlgebra::positive_degree_ids() const {
  std::vector<std::size_t> ids;
  for (const auto& b : basis_)
    if (b.degree > 0) ids.push_back(b.id);
  return ids;
}

std::vector<std::size_t> GradedAlgebra::betti_numbers() const {
  std::vector<std::size_t> counts(top_degree_ + 1, 0);
  for (const auto& b : basis_) ++counts[b.degree];
  return counts;
}

Element GradedAlgebra::unit() const { return basis_element(0); }

Element GradedAlgebra::zero() const { return Element(shared_from_this(), {}); }

Element GradedAlgebra::basis_element(std::size_t i) const {
  if (i >= basis_.size()) throw std::out_of_range("basis index");
  return Element(shared_from_this(), {{i, Scalar::one(field_)}});
}

Element GradedAlgebra::element(SparseVec coords) const {
  SparseVec clean;
  std::size_t prev = 0;
  bool first = true;
  for (auto& [i, c] : coords) {
    if (i >= basis_.size()) throw std::out_of_range("basis index");
    if (!first && i <= prev) throw std::invalid_argument("sparse coordinates must be strictly increasing");
    if (!(c.field() == field_)) throw FieldMismatch{};
    if (!c.is_zero()) clean.emplace_back(i, c);
    prev = i;
    first = false;
  }
  return Element(shared_from_this(), std::move(clean));
}

// ---- factories ---------------------------------------------------------

AlgebraPtr GradedAlgebra::point(Field f) {
  auto a = AlgebraBuilder::blank();
  std::vector<BasisElement> basis{{0, 0, "1"}};
  std::vector<SparseVec> table{{{0, Scalar::one(f)}}};
  AlgebraBuilder::fill(*a, f, std::move(basis), std::move(table));
  return a;
}

AlgebraPtr GradedAlgebra::truncated_polynomial(Field f, const std::string& label,
                                               unsigned degree, unsigned height) {
  if (degree == 0 || height == 0) throw std::invalid_argument("generator degree and height must be positive");
  if (height > 2 && (degree % 2 == 1) && f.characteristic() != 2)
    throw std::invalid_argument("odd generator squares to zero away from characteristic two");
  std::size_t dim = height;
  std::vector<BasisElement> basis;
  for (unsigned k = 0; k < height; ++k) {
    std::string lab = k == 0 ? "1" : (k == 1 ? label : label + "^" + std::to_string(k));
    basis.push_back({k, degree * k, lab});
  }
  std::vector<SparseVec> table(dim * dim);
  for (unsigned i = 0; i < height; ++i)
    for (unsigned j = 0; j < height; ++j)
      if (i + j < height) table[i * dim + j] = {{i + j, Scalar::one(f)}};
  auto a = AlgebraBuilder::blank();
  AlgebraBuilder::fill(*a, f, std::move(basis), std::move(table));
  return a;
}

AlgebraPtr GradedAlgebra::exterior(Field f,
                                   const std::vector<std::pair<std::string, unsigned>>& generators) {
  const bool char_two = f.characteristic() == 2;
  std::vector<unsigned> degs;
  for (const auto& [lab, d] : generators) {
    (void)lab;
    if (d == 0) throw std::invalid_argument("generator degree must be positive");
    if (d % 2 == 0 && !char_two)
      throw std::invalid_argument("exterior generators must have odd degree away from characteristic two");
    degs.push_back(d);
  }
  if (generators.size() > 20) throw std::invalid_argument("too many exterior generators");
  const std::size_t n_masks = std::size_t{1} << generators.size();

  std::vector<unsigned long> masks(n_masks);
  for (std::size_t m = 0; m < n_masks; ++m) masks[m] = m;
  auto degree_of = [&](unsigned long m) {
    unsigned d = 0;
    for (std::size_t i = 0; i < degs.size(); ++i)
      if (m >> i & 1) d += degs[i];
    return d;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](unsigned long x, unsigned long y) {
    unsigned dx = degree_of(x), dy = degree_of(y);
    return dx != dy ? dx < dy : x < y;
  });
  std::map<unsigned long, std::size_t> id_of;
  std::vector<BasisElement> basis;
  for (std::size_t id = 0; id < n_masks; ++id) {
    unsigned long m = masks[id];
    id_of[m] = id;
    std::string lab;
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (m >> i & 1) lab += generators[i].first;
    if (lab.empty()) lab = "1";
    basis.push_back({id, degree_of(m), lab});
  }
  std::vector<SparseVec> table(n_masks * n_masks);
  for (std::size_t i = 0; i < n_masks; ++i)
    for (std::size_t j = 0; j < n_masks; ++j) {
      unsigned long s = masks[i], t = masks[j];
      if (s & t) continue;  // repeated generator, product vanishes
      int sign = merge_sign(s, t, degs, char_two);
      table[i * n_masks + j] = {{id_of[s | t], Scalar::from_int(sign, f)}};
    }
  auto a = AlgebraBuilder::blank();
  AlgebraBuilder::fill(*a, f, std::move(basis), std::move(table));
  return a;
}

AlgebraPtr GradedAlgebra::tensor_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->field() == b->field())) throw FieldMismatch{};
  Field f = a->field();
  const std::size_t da = a->dimension(), db = b->dimension(), dim = da * db;
  std::vector<BasisElement> basis(dim);
  for (std::size_t ia = 0; ia < da; ++ia)
    for (std::size_t ib = 0; ib < db; ++ib) {
      std::size_t id = ia * db + ib;
      basis[id] = {id, a->basis(ia).degree + b->basis(ib).degree,
                   a->basis(ia).label + "⊗" + b->basis(ib).label};
    }
  std::vector<SparseVec> table(dim * dim);
  const bool char_two = f.characteristic() == 2;
  for (std::size_t ia = 0; ia < da; ++ia)
    for (std::size_t ib = 0; ib < db; ++ib)
      for (std::size_t ja = 0; ja < da; ++ja)
        for (std::size_t jb = 0; jb < db; ++jb) {
          const SparseVec& pa = a->basis_product(ia, ja);
          const SparseVec& pb = b->basis_product(ib, jb);
          if (pa.empty() || pb.empty()) continue;
          bool negate = !char_two && (b->basis(ib).degree & 1) && (a->basis(ja).degree & 1);
          SparseVec out;
          for (const auto& [ka, ca] : pa)
            for (const auto& [kb, cb] : pb) {
              Scalar c = ca * cb;
              if (negate) c = -c;
              if (!c.is_zero()) out.emplace_back(ka * db + kb, c);
            }
          // pa, pb are sorted, so the combined indices come out sorted too
          table[(ia * db + ib) * dim + (ja * db + jb)] = std::move(out);
        }
  auto out = AlgebraBuilder::blank();
  AlgebraBuilder::fill(*out, f, std::move(basis), std::move(table));
  return out;
}

AlgebraPtr GradedAlgebra::wedge_sum(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->field() == b->field())) throw FieldMismatch{};
  Field f = a->field();
  std::vector<std::size_t> a_pos = a->positive_degree_ids();
  std::vector<std::size_t> b_pos = b->positive_degree_ids();
  const std::size_t dim = 1 + a_pos.size() + b_pos.size();

  std::set<std::string> used{"1"};
  std::vector<BasisElement> basis{{0, 0, "1"}};
  // old index -> new index, one map per summand; 0 stays the shared unit
  std::map<std::size_t, std::size_t> map_a, map_b;
  map_a[0] = 0;
  map_b[0] = 0;
  for (std::size_t i : a_pos) {
    std::size_t id = basis.size();
    map_a[i] = id;
    std::string lab = a->basis(i).label;
    used.insert(lab);
    basis.push_back({id, a->basis(i).degree, lab});
  }
  for (std::size_t i : b_pos) {
    std::size_t id = basis.size();
    map_b[i] = id;
    std::string lab = b->basis(i).label;
    while (used.count(lab)) lab += "'";
    used.insert(lab);
    basis.push_back({id, b->basis(i).degree, lab});
  }

  std::vector<SparseVec> table(dim * dim);
  auto unit_row = [&](std::size_t j) { table[0 * dim + j] = {{j, Scalar::one(f)}}; };
  for (std::size_t j = 0; j < dim; ++j) {
    unit_row(j);
    table[j * dim + 0] = {{j, Scalar::one(f)}};
  }
  auto fill_summand = [&](const AlgebraPtr& src, const std::vector<std::size_t>& pos,
                          std::map<std::size_t, std::size_t>& remap) {
    for (std::size_t i : pos)
      for (std::size_t j : pos) {
        SparseVec out;
        for (const auto& [k, c] : src->basis_product(i, j)) {
          // positive-degree products never hit the unit slot
          out.emplace_back(remap.at(k), c);
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        table[remap.at(i) * dim + remap.at(j)] = std::move(out);
      }
  };
  fill_summand(a, a_pos, map_a);
  fill_summand(b, b_pos, map_b);
  // cross terms between the two summands stay zero

  auto out = AlgebraBuilder::blank();
  AlgebraBuilder::fill(*out, f, std::move(basis), std::move(table));
  return out;
}

// ---- validation --------------------------------------------------------

GradedAlgebra::ValidationReport GradedAlgebra::validate(std::size_t assoc_samples) const {
  ValidationReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.failures.push_back(std::move(msg));
  };
  const std::size_t n = dimension();
  AlgebraPtr self = shared_from_this();

  if (basis_[0].degree != 0) fail("basis slot 0 is not degree zero");
  for (std::size_t j = 0; j < n; ++j) {
    SparseVec want{{j, Scalar::one(field_)}};
    if (basis_product(0, j) != want) fail("left unit fails on basis " + std::to_string(j));
    if (basis_product(j, 0) != want) fail("right unit fails on basis " + std::to_string(j));
  }

  const bool char_two = field_.characteristic() == 2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      unsigned want_deg = basis_[i].degree + basis_[j].degree;
      for (const auto& [k, c] : basis_product(i, j)) {
        (void)c;
        if (basis_[k].degree != want_deg) {
          fail("degree additivity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
          break;
        }
      }
      bool negate = !char_two && (basis_[i].degree & 1) && (basis_[j].degree & 1);
      SparseVec flip = basis_product(j, i);
      if (negate) flip = sparse_scale(flip, -Scalar::one(field_));
      if (basis_product(i, j) != flip)
        fail("graded commutativity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }

  auto assoc_check = [&](std::size_t i, std::size_t j, std::size_t k) {
    Element ei = basis_element(i), ej = basis_element(j), ek = basis_element(k);
    if ((ei * ej) * ek != ei * (ej * ek))
      fail("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
           std::to_string(k) + ")");
  };
  if (n <= 32) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) assoc_check(i, j, k);
  } else {
    std::mt19937_64 rng(0x5eedu);
    for (std::size_t s = 0; s < assoc_samples; ++s)
      assoc_check(rng() % n, rng() % n, rng() % n);
  }
  return rep;
}

// ---- elements ----------------------------------------------------------

Element::Element(AlgebraPtr alg, SparseVec coords) : alg_(std::move(alg)), coords_(std::move(coords)) {}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Scalar c = a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const SparseVec& a, const Scalar& c) {
  SparseVec out;
  if (c.is_zero()) return out;
  for (const auto& [i, x] : a) out.emplace_back(i, x * c);
  return out;
}

Element Element::operator-() const {
  if (coords_.empty()) return *this;
  return Element(alg_, sparse_scale(coords_, -Scalar::one(alg_->field())));
}

Element Element::operator+(const Element& o) const {
  check(o);
  return Element(alg_, sparse_add(coords_, o.coords_));
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::scaled(const Scalar& c) const {
  return Element(alg_, sparse_scale(coords_, c));
}

Element Element::operator*(const Element& o) const {
  check(o);
  Vec acc(alg_->dimension(), Scalar::zero(alg_->field()));
  for (const auto& [i, ci] : coords_)
    for (const auto& [j, cj] : o.coords_) {
      Scalar cij = ci * cj;
      for (const auto& [k, ck] : alg_->basis_product(i, j)) acc[k] += cij * ck;
    }
  SparseVec out;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (!acc[k].is_zero()) out.emplace_back(k, acc[k]);
  return Element(alg_, std::move(out));
}

bool Element::operator==(const Element& o) const {
  return alg_.get() == o.alg_.get() && coords_ == o.coords_;
}

bool Element::is_homogeneous(unsigned* degree_out) const {
  if (coords_.empty()) {
    if (degree_out) *degree_out = 0;
    return true;
  }
  unsigned d = alg_->basis(coords_.front().first).degree;
  for (const auto& [i, c] : coords_) {
    (void)c;
    if (alg_->basis(i).degree != d) return false;
  }
  if (degree_out) *degree_out = d;
  return true;
}

Vec Element::dense() const {
  Vec v(alg_->dimension(), Scalar::zero(alg_->field()));
  for (const auto& [i, c] : coords_) v[i] = c;
  return v;
}

std::string Element::str() const {
  if (coords_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : coords_) {
    std::string cs = c.str();
    std::string term;
    if (cs == "1")
      term = alg_->basis(i).label;
    else if (cs == "-1")
      term = "-" + alg_->basis(i).label;
    else
      term = cs + "·" + alg_->basis(i).label;
    if (!first) out += term.size() && term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else out = term;
    first = false;
  }
  return out;
}

}  // namespace tcat
