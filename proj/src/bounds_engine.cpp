#include "tcat/bounds_engine.hpp"

#include <sstream>

namespace tcat {

namespace {

const char* kAnchorCup =
    "cup-length lower bound for category (classical; Cornea-Lupton-Oprea-Tanre)";
const char* kAnchorZcl = "Farber 2003: TC exceeds the zero-divisor cup length";
const char* kAnchorProdCat = "category of a product: cat(X x Y) <= cat X + cat Y - 1 (classical)";
const char* kAnchorWedgeCat = "category of a wedge is the maximum over summands (classical)";
const char* kAnchorSphereCat = "cat(S^m) = 2: two caps cover; spheres are not contractible";
const char* kAnchorTcCat = "Farber 2003: TC(X) <= 2 cat(X) - 1";
const char* kAnchorGroup =
    "Farber 2004: TC(G) = cat(G) for a connected topological group; the translation planner is "
    "reserved";
const char* kAnchorSphereTc =
    "Farber 2003: TC(S^m) = 2 for odd m, 3 for even m; geodesic planners are reserved";
const char* kAnchorChain =
    "cat <= TC (Farber 2003); TC <= monoidal TC <= TC + 1 (Iwase-Sakai 2010)";
const char* kAnchorWedgeMax =
    "Dranishnikov-Sadykov 2019: TC(X v Y) = max{TC X, TC Y, cat(X x Y)} once that max >= dim + 2";
const char* kAnchorWedgeSphere =
    "cover surgery on a wedge with a sphere summand (after Dranishnikov 2014)";
const char* kAnchorProdTc =
    "product bound met with equality when both factors are zero-divisor sharp over a common field "
    "(Kunneth cross products)";
const char* kAnchorSphereWedge =
    "independent zero-divisors on a wedge of two or more spheres give TC >= 3 (Farber 2003)";
const char* kAnchorDim = "dimension bound: cat(X) <= dim X + 1 for connected complexes";

void check_normalized(const ExprPtr& e) {
  if (e->kind == NodeKind::Config2 || e->kind == NodeKind::Euclidean)
    throw std::logic_error("bounds require a normalized expression; got '" + to_string(e) + "'");
  for (const auto& c : e->children) check_normalized(c);
}

bool all_sphere_children(const ExprPtr& e) {
  for (const auto& c : e->children)
    if (c->kind != NodeKind::Sphere) return false;
  return true;
}

}  // namespace

std::string Interval::str() const {
  std::ostringstream o;
  o << "[" << lo << ", ";
  if (hi)
    o << *hi << "]";
  else
    o << "inf)";
  return o.str();
}

struct BoundsEngine::Record {
  ExprPtr expr;
  std::string key;
  NodeBounds nb;
  std::map<std::string, AlgebraPtr> rings;
  std::map<std::string, std::string> cup_how;
  std::set<std::string> ring_tried, cup_tried, zcl_tried;
  enum class State { Fresh, Running, Done } state = State::Fresh;
};

BoundsEngine::BoundsEngine(std::vector<Field> fields, std::set<std::string> disabled)
    : fields_(std::move(fields)), disabled_(std::move(disabled)) {
  if (fields_.empty()) throw std::invalid_argument("bounds engine needs at least one field");
}

BoundsEngine::~BoundsEngine() = default;

const std::vector<std::string>& BoundsEngine::rule_ids() {
  static const std::vector<std::string> ids = {"R1", "R2",  "R3",  "R4",  "R5",  "R6",  "R7",
                                               "R8", "R9", "R10", "R11", "R12", "R13", "R14"};
  return ids;
}

BoundsEngine::Record& BoundsEngine::record_for(const ExprPtr& e) {
  std::string key = to_string(e);
  auto it = memo_.find(key);
  if (it == memo_.end()) {
    it = memo_.emplace(key, std::make_unique<Record>()).first;
    it->second->expr = e;
    it->second->key = key;
  }
  return *it->second;
}

const NodeBounds& BoundsEngine::bounds(const ExprPtr& e) {
  check_normalized(e);
  Record& rec = record_for(e);
  if (rec.state == Record::State::Done) return rec.nb;
  if (rec.state == Record::State::Running)
    throw std::logic_error("cyclic premise evaluation on '" + rec.key + "'");
  rec.state = Record::State::Running;
  compute(rec);
  rec.state = Record::State::Done;
  return rec.nb;
}

AlgebraPtr BoundsEngine::ring_for(Record& rec, Field f) {
  const std::string name = f.name();
  if (!rec.ring_tried.insert(name).second) {
    auto it = rec.rings.find(name);
    return it == rec.rings.end() ? nullptr : it->second;
  }
  try {
    AlgebraPtr a = cohomology(rec.expr, f);
    rec.rings[name] = a;
    return a;
  } catch (const UnregisteredRing&) {
    return nullptr;
  }
}

std::optional<unsigned> BoundsEngine::cup_fact(Record& rec, Field f) {
  const std::string name = f.name();
  if (auto it = rec.nb.cup.find(name); it != rec.nb.cup.end()) return it->second;
  if (!rec.cup_tried.insert(name).second) return std::nullopt;

  std::optional<unsigned> v;
  std::string how;
  if (AlgebraPtr a = ring_for(rec, f)) {
    v = static_cast<unsigned>(cup_length(a));
    how = "ring computation";
  } else {
    const ExprPtr& e = rec.expr;
    switch (e->kind) {
      case NodeKind::Point:
        v = 0;
        how = "trivial";
        break;
      case NodeKind::Sphere:
        v = 1;
        how = "trivial";
        break;
      case NodeKind::GroupAtom: {
        const AtomInfo* info = atom_info(e->name);
        if (info && info->registry_cup_z2 && f.characteristic() == 2) {
          v = *info->registry_cup_z2;
          how = "registry table";
        }
        break;
      }
      case NodeKind::Product: {
        unsigned sum = 0;
        bool ok = true;
        for (const auto& c : e->children) {
          auto cf = cup_fact(record_for(c), f);
          if (!cf) {
            ok = false;
            break;
          }
          sum += *cf;
        }
        if (ok) {
          v = sum;
          how = "sum over factors";
        }
        break;
      }
      case NodeKind::Wedge: {
        unsigned mx = 0;
        bool ok = true;
        for (const auto& c : e->children) {
          auto cf = cup_fact(record_for(c), f);
          if (!cf) {
            ok = false;
            break;
          }
          mx = std::max(mx, *cf);
        }
        if (ok) {
          v = mx;
          how = "max over summands";
        }
        break;
      }
      default:
        break;
    }
  }
  if (v) {
    rec.nb.cup[name] = *v;
    rec.cup_how[name] = how;
  }
  return v;
}

std::optional<unsigned> BoundsEngine::zcl_fact(Record& rec, Field f) {
  const std::string name = f.name();
  if (auto it = rec.nb.zcl.find(name); it != rec.nb.zcl.end()) return it->second;
  if (!rec.zcl_tried.insert(name).second) return std::nullopt;
  AlgebraPtr a = ring_for(rec, f);
  if (!a) return std::nullopt;
  // Kernel computations live in the tensor square; past this size the fact
  // is skipped and premises fall back to factor-level facts.
  if (a->dimension() > 40) return std::nullopt;
  unsigned z = static_cast<unsigned>(zero_divisor_cup_length(a));
  rec.nb.zcl[name] = z;
  return z;
}

bool BoundsEngine::raise_lo(Record& rec, Interval& iv, const char* quantity, unsigned v,
                            const std::string& rule, const std::string& why,
                            const std::string& anchor) {
  if (v <= iv.lo) return false;
  if (iv.hi && v > *iv.hi)
    throw BoundCrossing(rule + ": " + quantity + "(" + rec.key + ") lower bound " +
                        std::to_string(v) + " crosses upper bound " + std::to_string(*iv.hi));
  iv.lo = v;
  rec.nb.chain.push_back(
      {rule, quantity, std::string(quantity) + "(" + rec.key + ") >= " + std::to_string(v) + ": " + why,
       anchor});
  return true;
}

bool BoundsEngine::drop_hi(Record& rec, Interval& iv, const char* quantity, unsigned v,
                           const std::string& rule, const std::string& why,
                           const std::string& anchor) {
  if (iv.hi && *iv.hi <= v) return false;
  if (v < iv.lo)
    throw BoundCrossing(rule + ": " + quantity + "(" + rec.key + ") upper bound " +
                        std::to_string(v) + " crosses lower bound " + std::to_string(iv.lo));
  iv.hi = v;
  rec.nb.chain.push_back(
      {rule, quantity, std::string(quantity) + "(" + rec.key + ") <= " + std::to_string(v) + ": " + why,
       anchor});
  return true;
}

bool BoundsEngine::set_exact(Record& rec, Interval& iv, const char* quantity, unsigned v,
                             const std::string& rule, const std::string& why,
                             const std::string& anchor) {
  if (iv.exact() && iv.lo == v) return false;
  if ((iv.hi && v > *iv.hi) || v < iv.lo)
    throw BoundCrossing(rule + ": " + quantity + "(" + rec.key + ") exact value " +
                        std::to_string(v) + " falls outside " + iv.str());
  iv.lo = v;
  iv.hi = v;
  rec.nb.chain.push_back(
      {rule, quantity, std::string(quantity) + "(" + rec.key + ") == " + std::to_string(v) + ": " + why,
       anchor});
  return true;
}

// R1: a nonzero product of c positive-degree classes forces at least c+1
// categorical sets.
bool BoundsEngine::rule_cup_lower(Record& rec) {
  bool changed = false;
  for (Field f : fields_) {
    auto c = cup_fact(rec, f);
    if (!c) continue;
    changed |= raise_lo(rec, rec.nb.cat, "cat", *c + 1, "R1",
                        "cup length " + std::to_string(*c) + " over " + f.name() + " (" +
                            rec.cup_how[f.name()] + ")",
                        kAnchorCup);
  }
  return changed;
}

// R2: a nonzero product of z multiplication-kernel classes forces at least
// z+1 motion-planning rules.  The computed zcl value is recorded as a fact
// for later premises.
bool BoundsEngine::rule_zcl_lower(Record& rec) {
  bool changed = false;
  for (Field f : fields_) {
    auto z = zcl_fact(rec, f);
    if (!z) continue;
    changed |= raise_lo(rec, rec.nb.tc, "tc", *z + 1, "R2",
                        "zero-divisor cup length " + std::to_string(*z) + " over " + f.name(),
                        kAnchorZcl);
  }
  return changed;
}

bool BoundsEngine::rule_product_cat(Record& rec) {
  if (rec.expr->kind != NodeKind::Product) return false;
  unsigned sum = 0;
  for (const auto& c : rec.expr->children) {
    const Interval& ci = record_for(c).nb.cat;
    if (!ci.hi) return false;
    sum += *ci.hi;
  }
  unsigned k = static_cast<unsigned>(rec.expr->children.size());
  return drop_hi(rec, rec.nb.cat, "cat", sum - (k - 1), "R3",
                 "covers of the " + std::to_string(k) + " factors combine with overlap " +
                     std::to_string(k - 1),
                 kAnchorProdCat);
}

bool BoundsEngine::rule_wedge_cat(Record& rec) {
  if (rec.expr->kind != NodeKind::Wedge) return false;
  bool changed = false;
  unsigned lo = 1;
  bool have_hi = true;
  unsigned hi = 1;
  for (const auto& c : rec.expr->children) {
    const Interval& ci = record_for(c).nb.cat;
    lo = std::max(lo, ci.lo);
    if (ci.hi)
      hi = std::max(hi, *ci.hi);
    else
      have_hi = false;
  }
  changed |= raise_lo(rec, rec.nb.cat, "cat", lo, "R4",
                      "each summand is a retract of the wedge", kAnchorWedgeCat);
  if (have_hi)
    changed |= drop_hi(rec, rec.nb.cat, "cat", hi, "R4",
                       "summand covers extend over the wedge", kAnchorWedgeCat);
  return changed;
}

bool BoundsEngine::rule_sphere_cat(Record& rec) {
  if (rec.expr->kind == NodeKind::Sphere)
    return set_exact(rec, rec.nb.cat, "cat", 2, "R5", "two contractible caps, and no single one",
                     kAnchorSphereCat);
  if (rec.expr->kind == NodeKind::Point)
    return set_exact(rec, rec.nb.cat, "cat", 1, "R5", "contractible", kAnchorSphereCat);
  return false;
}

bool BoundsEngine::rule_tc_from_cat(Record& rec) {
  if (!rec.nb.cat.hi) return false;
  return drop_hi(rec, rec.nb.tc, "tc", 2 * *rec.nb.cat.hi - 1, "R6",
                 "tc <= 2 cat - 1 with cat <= " + std::to_string(*rec.nb.cat.hi), kAnchorTcCat);
}

// R7: on a connected topological group, translating paths to the identity
// turns a categorical cover into a motion planner and back, so tc matches
// cat; the translation planner is reserved, so the monoidal count does not
// exceed it (its lower bound comes from the general chain).
bool BoundsEngine::rule_group_tc(Record& rec) {
  if (rec.expr->kind != NodeKind::GroupAtom) return false;
  const AtomInfo* info = atom_info(rec.expr->name);
  if (!info || !info->lie) return false;
  bool changed = false;
  changed |= raise_lo(rec, rec.nb.tc, "tc", rec.nb.cat.lo, "R7",
                      "tc = cat on a connected group", kAnchorGroup);
  if (rec.nb.cat.hi)
    changed |= drop_hi(rec, rec.nb.tc, "tc", *rec.nb.cat.hi, "R7",
                       "tc = cat on a connected group", kAnchorGroup);
  if (rec.nb.tc.hi)
    changed |= drop_hi(rec, rec.nb.tcm, "tcm", *rec.nb.tc.hi, "R7",
                       "the translation planner is reserved", kAnchorGroup);
  return changed;
}

bool BoundsEngine::rule_sphere_tc(Record& rec) {
  if (rec.expr->kind != NodeKind::Sphere) return false;
  const bool odd = rec.expr->dim % 2 == 1;
  const unsigned v = odd ? 2 : 3;
  bool changed = set_exact(rec, rec.nb.tc, "tc", v, "R8",
                           odd ? "odd sphere: a global tangent field yields a 2-rule planner"
                               : "even sphere: 3-rule geodesic planner; zero-divisor bound matches",
                           kAnchorSphereTc);
  changed |= drop_hi(rec, rec.nb.tcm, "tcm", v, "R8", "the geodesic rules are reserved",
                     kAnchorSphereTc);
  return changed;
}

bool BoundsEngine::rule_chain(Record& rec) {
  bool changed = false;
  NodeBounds& nb = rec.nb;
  changed |= raise_lo(rec, nb.tc, "tc", nb.cat.lo, "R9", "cat <= tc", kAnchorChain);
  if (nb.tc.hi) changed |= drop_hi(rec, nb.cat, "cat", *nb.tc.hi, "R9", "cat <= tc", kAnchorChain);
  changed |= raise_lo(rec, nb.tcm, "tcm", nb.tc.lo, "R9", "tc <= monoidal tc", kAnchorChain);
  if (nb.tcm.hi)
    changed |= drop_hi(rec, nb.tc, "tc", *nb.tcm.hi, "R9", "tc <= monoidal tc", kAnchorChain);
  if (nb.tc.hi)
    changed |= drop_hi(rec, nb.tcm, "tcm", *nb.tc.hi + 1, "R9", "monoidal tc <= tc + 1",
                       kAnchorChain);
  if (nb.tcm.lo >= 2)
    changed |= raise_lo(rec, nb.tc, "tc", nb.tcm.lo - 1, "R9", "monoidal tc <= tc + 1",
                        kAnchorChain);
  return changed;
}

bool BoundsEngine::rule_wedge_max(Record& rec) {
  if (rec.expr->kind != NodeKind::Wedge) return false;
  bool changed = false;
  const auto& ch = rec.expr->children;
  for (std::size_t i = 0; i < ch.size(); ++i) {
    std::vector<ExprPtr> rest;
    for (std::size_t j = 0; j < ch.size(); ++j)
      if (j != i) rest.push_back(ch[j]);
    ExprPtr x = make_wedge(rest);
    const ExprPtr& y = ch[i];
    const NodeBounds& bx = bounds(x);
    const NodeBounds& by = bounds(y);
    if (!bx.tc.exact() || !by.tc.exact()) continue;
    ExprPtr p = make_product({x, y});
    const NodeBounds& bp = bounds(p);
    if (!bp.cat.exact()) continue;
    unsigned m = std::max({bx.tc.lo, by.tc.lo, bp.cat.lo});
    if (m < rec.expr->dim + 2) continue;
    changed |= set_exact(rec, rec.nb.tc, "tc", m, "R10",
                         "split " + to_string(x) + " v " + to_string(y) + ": max{tc " +
                             std::to_string(bx.tc.lo) + ", tc " + std::to_string(by.tc.lo) +
                             ", cat(product) " + std::to_string(bp.cat.lo) + "} = " +
                             std::to_string(m) + " >= dim + 2 = " +
                             std::to_string(rec.expr->dim + 2),
                         kAnchorWedgeMax);
  }
  return changed;
}

// R11: when a sphere summand splits off a part X whose cat, tc and
// monoidal tc agree exactly and whose product with the sphere raises cat
// by one, the covers of X and the sphere combine into a planner for the
// wedge with tc(X)+1 rules, and that planner is reserved.
bool BoundsEngine::rule_wedge_sphere(Record& rec) {
  if (rec.expr->kind != NodeKind::Wedge) return false;
  bool changed = false;
  const auto& ch = rec.expr->children;
  for (std::size_t i = 0; i < ch.size(); ++i) {
    if (ch[i]->kind != NodeKind::Sphere) continue;
    std::vector<ExprPtr> rest;
    for (std::size_t j = 0; j < ch.size(); ++j)
      if (j != i) rest.push_back(ch[j]);
    ExprPtr x = make_wedge(rest);
    const NodeBounds& bx = bounds(x);
    if (!bx.cat.exact() || !bx.tc.exact() || !bx.tcm.exact()) continue;
    const unsigned v = bx.tc.lo;
    if (bx.cat.lo != v || bx.tcm.lo != v) continue;
    ExprPtr p = make_product({x, ch[i]});
    const NodeBounds& bp = bounds(p);
    if (!bp.cat.exact() || bp.cat.lo != v + 1) continue;
    std::string why = "summand S" + std::to_string(ch[i]->dim) + " splits off " + to_string(x) +
                      " with cat = tc = monoidal tc = " + std::to_string(v) + " and cat(" +
                      to_string(p) + ") = " + std::to_string(v + 1);
    changed |= set_exact(rec, rec.nb.tc, "tc", v + 1, "R11", why, kAnchorWedgeSphere);
    changed |= drop_hi(rec, rec.nb.tcm, "tcm", v + 1, "R11", "the combined cover is reserved",
                       kAnchorWedgeSphere);
  }
  return changed;
}

// R12: cross products of zero-divisors add up, so when each factor's tc is
// pinned at 1 + zcl over one common field, the product upper bound
// tc(X) + tc(Y) - 1 is also reached from below.
bool BoundsEngine::rule_product_tc(Record& rec) {
  if (rec.expr->kind != NodeKind::Product) return false;
  bool changed = false;
  const auto& ch = rec.expr->children;
  for (std::size_t split = 1; split < ch.size(); ++split) {
    ExprPtr x = make_product(std::vector<ExprPtr>(ch.begin(), ch.begin() + static_cast<long>(split)));
    ExprPtr y = make_product(std::vector<ExprPtr>(ch.begin() + static_cast<long>(split), ch.end()));
    const NodeBounds& bx = bounds(x);
    const NodeBounds& by = bounds(y);
    if (!bx.tc.exact() || !by.tc.exact()) continue;
    for (Field f : fields_) {
      auto zx = bx.zcl.find(f.name());
      auto zy = by.zcl.find(f.name());
      if (zx == bx.zcl.end() || zy == by.zcl.end()) continue;
      if (bx.tc.lo != zx->second + 1 || by.tc.lo != zy->second + 1) continue;
      changed |= set_exact(rec, rec.nb.tc, "tc", bx.tc.lo + by.tc.lo - 1, "R12",
                           "split " + to_string(x) + " x " + to_string(y) + ": tc(" + to_string(x) +
                               ") = 1 + zcl = " + std::to_string(bx.tc.lo) + " and tc(" +
                               to_string(y) + ") = 1 + zcl = " + std::to_string(by.tc.lo) +
                               " over " + f.name(),
                           kAnchorProdTc);
      break;
    }
  }
  return changed;
}

bool BoundsEngine::rule_sphere_wedge_tc(Record& rec) {
  if (rec.expr->kind != NodeKind::Wedge || !all_sphere_children(rec.expr)) return false;
  return raise_lo(rec, rec.nb.tc, "tc", 3, "R13",
                  "two or more sphere summands carry independent zero-divisors",
                  kAnchorSphereWedge);
}

bool BoundsEngine::rule_dimension(Record& rec) {
  return drop_hi(rec, rec.nb.cat, "cat", rec.expr->dim + 1, "R14",
                 "dim = " + std::to_string(rec.expr->dim), kAnchorDim);
}

void BoundsEngine::compute(Record& rec) {
  const ExprPtr& e = rec.expr;
  if (e->kind == NodeKind::Product || e->kind == NodeKind::Wedge)
    for (const auto& c : e->children) bounds(c);

  if (e->kind == NodeKind::GroupAtom) {
    const AtomInfo* info = atom_info(e->name);
    if (info && info->registry_cat)
      set_exact(rec, rec.nb.cat, "cat", *info->registry_cat, "registry",
                "externally sourced category value for " + e->name, info->source);
  }

  using RuleFn = bool (BoundsEngine::*)(Record&);
  static const std::pair<const char*, RuleFn> rules[] = {
      {"R1", &BoundsEngine::rule_cup_lower},
      {"R2", &BoundsEngine::rule_zcl_lower},
      {"R3", &BoundsEngine::rule_product_cat},
      {"R4", &BoundsEngine::rule_wedge_cat},
      {"R5", &BoundsEngine::rule_sphere_cat},
      {"R6", &BoundsEngine::rule_tc_from_cat},
      {"R7", &BoundsEngine::rule_group_tc},
      {"R8", &BoundsEngine::rule_sphere_tc},
      {"R9", &BoundsEngine::rule_chain},
      {"R10", &BoundsEngine::rule_wedge_max},
      {"R11", &BoundsEngine::rule_wedge_sphere},
      {"R12", &BoundsEngine::rule_product_tc},
      {"R13", &BoundsEngine::rule_sphere_wedge_tc},
      {"R14", &BoundsEngine::rule_dimension},
  };

  for (int pass = 0; pass < 1000; ++pass) {
    bool changed = false;
    for (const auto& [id, fn] : rules) {
      if (!enabled(id)) continue;
      changed |= (this->*fn)(rec);
    }
    if (!changed) return;
  }
  throw std::logic_error("rule engine failed to reach a fixpoint on '" + rec.key + "'");
}

SpaceReport analyze(const std::string& text, std::vector<Field> fields,
                    std::set<std::string> disabled) {
  SpaceReport rep;
  rep.input = parse_space(text);
  NormalizeResult norm = normalize(rep.input);
  rep.normalized = norm.expr;
  rep.steps = std::move(norm.steps);
  rep.monoidal_applicable = structurally_equal(rep.input, rep.normalized);
  BoundsEngine engine(std::move(fields), std::move(disabled));
  rep.bounds = engine.bounds(rep.normalized);
  return rep;
}

std::string render_certificates(const NodeBounds& nb) {
  std::ostringstream out;
  for (const auto& c : nb.chain) {
    out << "  " << c.rule;
    for (std::size_t i = c.rule.size(); i < 9; ++i) out << ' ';
    out << c.statement << "\n";
    out << "           [" << c.anchor << "]\n";
  }
  return out.str();
}

}  // namespace tcat
