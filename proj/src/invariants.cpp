#include "tcat/invariants.hpp"

#include <map>
#include <stdexcept>

namespace tcat {

namespace {

// Echelonized spans kept separately per degree; homogeneous vectors only
// ever reduce against vectors of their own degree, which keeps the ambient
// dimension at the size of one graded piece.
class DegreeSpans {
 public:
  explicit DegreeSpans(const AlgebraPtr& a) : alg_(a) {
    for (std::size_t i = 0; i < a->dimension(); ++i) {
      unsigned d = a->basis(i).degree;
      slice_pos_[i] = ids_by_degree_[d].size();
      ids_by_degree_[d].push_back(i);
    }
  }

  bool insert(const Element& e) {
    unsigned d = 0;
    if (!e.is_homogeneous(&d)) throw std::invalid_argument("power iteration needs homogeneous classes");
    if (e.is_zero()) return false;
    auto [it, fresh] = spans_.try_emplace(d, ids_by_degree_.at(d).size(), alg_->field());
    (void)fresh;
    Vec slice(ids_by_degree_.at(d).size(), Scalar::zero(alg_->field()));
    for (const auto& [i, c] : e.coords()) slice[slice_pos_.at(i)] = c;
    return it->second.insert(std::move(slice));
  }

 private:
  AlgebraPtr alg_;
  std::map<unsigned, std::vector<std::size_t>> ids_by_degree_;
  std::map<std::size_t, std::size_t> slice_pos_;
  std::map<unsigned, IncrementalSpan> spans_;
};

struct Tracked {
  Element elem;
  std::vector<std::string> factors;
};

}  // namespace

IdealPowerTrace ideal_power_trace(const AlgebraPtr& a,
                                  const std::vector<NamedElement>& generators,
                                  const std::vector<NamedElement>& multipliers) {
  IdealPowerTrace trace;
  std::vector<Tracked> current;
  {
    DegreeSpans spans(a);
    for (const auto& g : generators)
      if (!g.elem.is_zero() && spans.insert(g.elem)) current.push_back({g.elem, {g.name}});
  }
  if (current.empty()) return trace;
  trace.power_dims.push_back(current.size());
  trace.witness_factors = current.front().factors;

  while (true) {
    DegreeSpans spans(a);
    std::vector<Tracked> next;
    for (const auto& b : current)
      for (const auto& m : multipliers) {
        Element prod = b.elem * m.elem;
        if (prod.is_zero() || !spans.insert(prod)) continue;
        auto factors = b.factors;
        factors.push_back(m.name);
        next.push_back({std::move(prod), std::move(factors)});
      }
    if (next.empty()) break;
    trace.power_dims.push_back(next.size());
    trace.witness_factors = next.front().factors;
    current = std::move(next);
  }
  return trace;
}

IdealPowerTrace ideal_power_trace(const AlgebraPtr& a,
                                  const std::vector<NamedElement>& generators) {
  return ideal_power_trace(a, generators, generators);
}

std::vector<NamedElement> positive_basis(const AlgebraPtr& a) {
  std::vector<NamedElement> out;
  for (std::size_t i : a->positive_degree_ids())
    out.push_back({a->basis_element(i), a->basis(i).label});
  return out;
}

IdealPowerTrace cup_length_trace(const AlgebraPtr& a) {
  auto basis = positive_basis(a);
  return ideal_power_trace(a, basis, basis);
}

std::size_t cup_length(const AlgebraPtr& a) { return cup_length_trace(a).length(); }

std::vector<NamedElement> bar_classes(const AlgebraPtr& a, const AlgebraPtr& aa) {
  // tensor_product lays out basis ids a-major: id = ia * dim(a) + ib
  const std::size_t n = a->dimension();
  std::vector<NamedElement> out;
  for (std::size_t u : a->positive_degree_ids()) {
    SparseVec coords;
    Scalar one = Scalar::one(a->field());
    coords.emplace_back(0 * n + u, -one);  // 1 (x) u
    coords.emplace_back(u * n + 0, one);   // u (x) 1
    std::string name = a->basis(u).label;
    name = name.size() == 1 ? name + "̄" : "(" + name + ")̄";
    out.push_back({aa->element(std::move(coords)), name});
  }
  return out;
}

std::vector<NamedElement> zero_divisor_basis(const AlgebraPtr& a, const AlgebraPtr& aa) {
  const std::size_t n = a->dimension();
  if (aa->dimension() != n * n) throw std::invalid_argument("second algebra is not the tensor square of the first");
  Field f = a->field();

  // group tensor-square basis ids by degree
  std::map<unsigned, std::vector<std::size_t>> aa_by_degree;
  for (std::size_t i = 0; i < aa->dimension(); ++i) aa_by_degree[aa->basis(i).degree].push_back(i);
  std::map<unsigned, std::vector<std::size_t>> a_by_degree;
  for (std::size_t i = 0; i < n; ++i) a_by_degree[a->basis(i).degree].push_back(i);

  std::vector<NamedElement> out;
  for (const auto& [deg, cols] : aa_by_degree) {
    const std::vector<std::size_t>& rows_ids =
        a_by_degree.count(deg) ? a_by_degree.at(deg) : std::vector<std::size_t>{};
    std::map<std::size_t, std::size_t> row_pos;
    for (std::size_t r = 0; r < rows_ids.size(); ++r) row_pos[rows_ids[r]] = r;

    // one column per tensor basis element of this degree, rows are the
    // degree-deg coordinates of its image under multiplication
    Matrix m(rows_ids.size(), cols.size(), f);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::size_t id = cols[c];
      std::size_t ia = id / n, ib = id % n;
      for (const auto& [k, coeff] : a->basis_product(ia, ib)) m.at(row_pos.at(k), c) = coeff;
    }
    for (const Vec& k : m.kernel_basis()) {
      SparseVec coords;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (!k[c].is_zero()) coords.emplace_back(cols[c], k[c]);
      Element e = aa->element(std::move(coords));
      std::string name = e.str();
      out.push_back({std::move(e), std::move(name)});
    }
  }
  return out;
}

ZclResult zero_divisor_cup_length_trace(const AlgebraPtr& a) {
  AlgebraPtr aa = GradedAlgebra::tensor_product(a, a);
  auto kernel = zero_divisor_basis(a, aa);
  auto bars = bar_classes(a, aa);
  IdealPowerTrace trace = ideal_power_trace(aa, kernel, bars);
  return ZclResult{aa, std::move(trace)};
}

std::size_t zero_divisor_cup_length(const AlgebraPtr& a) {
  return zero_divisor_cup_length_trace(a).trace.length();
}

}  // namespace tcat
