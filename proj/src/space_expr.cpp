#include "tcat/space_expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace tcat {

namespace {

ExprPtr make_node(NodeKind k, unsigned dim, std::string name, std::vector<ExprPtr> ch) {
  auto n = std::make_shared<SpaceNode>();
  n->kind = k;
  n->dim = dim;
  n->name = std::move(name);
  n->children = std::move(ch);
  return n;
}

const std::string kRotationSource =
    "LS-category tables for rotation groups (Iwase-Mimura-Nishimoto and follow-up computations)";

// Atoms with externally sourced category data instead of ring tables.
// Values are normalized (a contractible space has category 1); the cup
// length is over Z2.
struct RotationEntry {
  unsigned m, dim, cat, cup_z2;
};
const RotationEntry kRotation[] = {
    {4, 6, 5, 4},    {5, 10, 9, 8},   {6, 15, 10, 9}, {7, 21, 12, 11},
    {8, 28, 13, 12}, {9, 36, 21, 20}, {10, 45, 22, 21},
};

}  // namespace

ExprPtr make_sphere(unsigned m) {
  if (m == 0) throw NormalizeError("S0 is disconnected; spheres S^m need m >= 1");
  return make_node(NodeKind::Sphere, m, "", {});
}

ExprPtr make_euclidean(unsigned n) { return make_node(NodeKind::Euclidean, n, "", {}); }

ExprPtr make_point() { return make_node(NodeKind::Point, 0, "", {}); }

ExprPtr make_group_atom(const std::string& canonical_name) {
  const AtomInfo* info = atom_info(canonical_name);
  if (!info) throw NormalizeError("unknown group atom '" + canonical_name + "'");
  return make_node(NodeKind::GroupAtom, info->dim, canonical_name, {});
}

namespace {

// Products and wedges are associative; nested nodes of the same kind are
// spliced so one flat node is the canonical shape.
std::vector<ExprPtr> splice(NodeKind kind, std::vector<ExprPtr> children) {
  std::vector<ExprPtr> flat;
  for (auto& c : children) {
    if (c->kind == kind)
      flat.insert(flat.end(), c->children.begin(), c->children.end());
    else
      flat.push_back(std::move(c));
  }
  return flat;
}

}  // namespace

ExprPtr make_product(std::vector<ExprPtr> children) {
  children = splice(NodeKind::Product, std::move(children));
  if (children.empty()) return make_point();
  if (children.size() == 1) return children[0];
  unsigned d = 0;
  for (const auto& c : children) d += c->dim;
  return make_node(NodeKind::Product, d, "", std::move(children));
}

ExprPtr make_wedge(std::vector<ExprPtr> children) {
  children = splice(NodeKind::Wedge, std::move(children));
  if (children.empty()) return make_point();
  if (children.size() == 1) return children[0];
  unsigned d = 0;
  for (const auto& c : children) d = std::max(d, c->dim);
  return make_node(NodeKind::Wedge, d, "", std::move(children));
}

ExprPtr make_config2(ExprPtr inner) {
  unsigned d = 2 * inner->dim;
  return make_node(NodeKind::Config2, d, "", {std::move(inner)});
}

const AtomInfo* atom_info(const std::string& canonical_name) {
  static std::map<std::string, AtomInfo> table = [] {
    std::map<std::string, AtomInfo> t;
    t["RP3"] = AtomInfo{3, true, true, std::nullopt, std::nullopt, ""};
    for (const auto& r : kRotation) {
      t["SO" + std::to_string(r.m)] = AtomInfo{r.dim, true, false, r.cat, r.cup_z2, kRotationSource};
    }
    for (unsigned k = 2; k <= 10; ++k) {
      t["T" + std::to_string(k)] = AtomInfo{k, true, true, std::nullopt, std::nullopt, ""};
    }
    return t;
  }();
  auto it = table.find(canonical_name);
  return it == table.end() ? nullptr : &it->second;
}

bool group_capable(const ExprPtr& e) {
  switch (e->kind) {
    case NodeKind::Point:
      return true;
    case NodeKind::Sphere:
      return e->dim == 1 || e->dim == 3;  // the only spheres carrying group structures
    case NodeKind::GroupAtom:
      return atom_info(e->name) && atom_info(e->name)->lie;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Word, Number, LParen, RParen, Comma, Times, Caret, Vee, End };

struct Token {
  Tok kind;
  std::string text;
  unsigned long value = 0;
  std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == '(') {
      out.push_back({Tok::LParen, "(", 0, start});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", 0, start});
      ++i;
    } else if (c == ',') {
      out.push_back({Tok::Comma, ",", 0, start});
      ++i;
    } else if (c == '*') {
      out.push_back({Tok::Times, "*", 0, start});
      ++i;
    } else if (c == '^') {
      out.push_back({Tok::Caret, "^", 0, start});
      ++i;
    } else if (c == 0xC3 && i + 1 < n && static_cast<unsigned char>(text[i + 1]) == 0x97) {
      out.push_back({Tok::Times, "x", 0, start});  // multiplication sign
      i += 2;
    } else if (c == 0xE2 && i + 2 < n && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
               static_cast<unsigned char>(text[i + 2]) == 0xA8) {
      out.push_back({Tok::Vee, "v", 0, start});  // logical-or sign used for wedges
      i += 3;
    } else if (std::isdigit(c)) {
      unsigned long v = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        ++i;
      }
      out.push_back({Tok::Number, text.substr(start, i - start), v, start});
    } else if (std::isalpha(c)) {
      std::string w;
      while (i < n && std::isalnum(static_cast<unsigned char>(text[i]))) {
        w.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(text[i]))));
        ++i;
      }
      if (w == "X") {
        out.push_back({Tok::Times, "x", 0, start});
      } else if (w == "V") {
        out.push_back({Tok::Vee, "v", 0, start});
      } else {
        out.push_back({Tok::Word, w, 0, start});
      }
    } else {
      throw ParseError("unexpected character '" + text.substr(i, 1) + "'", i);
    }
  }
  out.push_back({Tok::End, "", 0, n});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    expect(Tok::End, "trailing input after expression");
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;

  const Token& peek() const { return toks_[at_]; }
  Token next() { return toks_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++at_;
      return true;
    }
    return false;
  }
  void expect(Tok k, const std::string& what) {
    if (!accept(k)) throw ParseError("expected " + what, peek().pos);
  }

  ExprPtr parse_expr() {
    std::vector<ExprPtr> parts{parse_product()};
    while (accept(Tok::Vee)) parts.push_back(parse_product());
    return parts.size() == 1 ? parts[0] : make_wedge(std::move(parts));
  }

  ExprPtr parse_product() {
    std::vector<ExprPtr> parts{parse_postfix()};
    while (accept(Tok::Times)) parts.push_back(parse_postfix());
    return parts.size() == 1 ? parts[0] : make_product(std::move(parts));
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    if (peek().kind == Tok::Caret) {
      ++at_;
      const Token t = peek();
      if (t.kind != Tok::Number) throw ParseError("expected an exponent after '^'", t.pos);
      ++at_;
      if (t.value == 0) throw ParseError("exponent must be at least 1", t.pos);
      std::vector<ExprPtr> copies(t.value, e);
      e = make_product(std::move(copies));
    }
    return e;
  }

  ExprPtr parse_primary() {
    const Token t = peek();
    if (t.kind == Tok::LParen) {
      ++at_;
      ExprPtr e = parse_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.kind != Tok::Word) throw ParseError("expected a space expression", t.pos);
    ++at_;
    const std::string& w = t.text;
    if (w == "F") return parse_config(t.pos);
    if (w == "WEDGE") return parse_wedge_call(t.pos);
    if (w == "PT" || w == "POINT") return make_point();
    return parse_atom(t);
  }

  ExprPtr parse_config(std::size_t pos) {
    expect(Tok::LParen, "'(' after F");
    ExprPtr inner = parse_expr();
    expect(Tok::Comma, "',' between the space and the body count");
    const Token cnt = peek();
    if (cnt.kind != Tok::Number) throw ParseError("expected the body count", cnt.pos);
    ++at_;
    if (cnt.value != 2)
      throw ParseError("only two-body configuration spaces F(-, 2) are supported", cnt.pos);
    expect(Tok::RParen, "')'");
    (void)pos;
    return make_config2(inner);
  }

  ExprPtr parse_wedge_call(std::size_t pos) {
    expect(Tok::LParen, "'(' after wedge");
    std::vector<ExprPtr> parts{parse_expr()};
    while (accept(Tok::Comma)) parts.push_back(parse_expr());
    expect(Tok::RParen, "')'");
    (void)pos;
    return parts.size() == 1 ? parts[0] : make_wedge(std::move(parts));
  }

  // Atom words: S<m>, R<n>, T<k>, RP3, SO3, SO<m>, and the caret forms
  // S^m, R^n, T^k, RP^3.  SO(m) in call form is handled here as well.
  ExprPtr parse_atom(const Token& t) {
    const std::string& w = t.text;
    auto index_after = [&](std::size_t prefix_len) -> std::optional<unsigned long> {
      if (w.size() > prefix_len) {
        for (std::size_t i = prefix_len; i < w.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(w[i]))) return std::nullopt;
        return std::stoul(w.substr(prefix_len));
      }
      // bare prefix followed by ^<number>
      if (peek().kind == Tok::Caret && toks_[at_ + 1].kind == Tok::Number) {
        at_ += 2;
        return toks_[at_ - 1].value;
      }
      return std::nullopt;
    };

    if (w == "SO" && peek().kind == Tok::LParen) {
      ++at_;
      const Token m = peek();
      if (m.kind != Tok::Number) throw ParseError("expected an index in SO(m)", m.pos);
      ++at_;
      expect(Tok::RParen, "')'");
      return rotation_atom(m.value, m.pos);
    }
    if (w.rfind("SO", 0) == 0) {
      auto idx = index_after(2);
      if (idx) return rotation_atom(*idx, t.pos);
    }
    if (w.rfind("RP", 0) == 0) {
      auto idx = index_after(2);
      if (idx) {
        if (*idx != 3)
          throw ParseError("only RP3 is registered among projective spaces", t.pos);
        return make_group_atom("RP3");
      }
    }
    if (w[0] == 'S') {
      auto idx = index_after(1);
      if (idx) {
        if (*idx == 0) throw ParseError("S0 is disconnected and not supported", t.pos);
        return make_sphere(static_cast<unsigned>(*idx));
      }
    }
    if (w[0] == 'R') {
      auto idx = index_after(1);
      if (idx) return make_euclidean(static_cast<unsigned>(*idx));
    }
    if (w[0] == 'T') {
      auto idx = index_after(1);
      if (idx) {
        if (*idx == 0) return make_point();
        if (*idx == 1) return make_sphere(1);
        if (*idx > 10) throw ParseError("torus rank is capped at 10", t.pos);
        return make_group_atom("T" + std::to_string(*idx));
      }
    }
    throw ParseError("unknown atom '" + w + "'", t.pos);
  }

  ExprPtr rotation_atom(unsigned long m, std::size_t pos) {
    if (m == 3) return make_group_atom("RP3");
    if (m < 3 || m > 10)
      throw ParseError("SO(m) is registered for 3 <= m <= 10", pos);
    return make_group_atom("SO" + std::to_string(m));
  }
};

}  // namespace

ExprPtr parse_space(const std::string& text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Display

namespace {

void print_node(const ExprPtr& e, std::ostringstream& out, bool need_parens) {
  switch (e->kind) {
    case NodeKind::Sphere:
      out << "S" << e->dim;
      return;
    case NodeKind::Euclidean:
      out << "R" << e->dim;
      return;
    case NodeKind::Point:
      out << "pt";
      return;
    case NodeKind::GroupAtom:
      out << e->name;
      return;
    case NodeKind::Config2: {
      out << "F(";
      print_node(e->children[0], out, false);
      out << ", 2)";
      return;
    }
    case NodeKind::Product:
    case NodeKind::Wedge: {
      if (need_parens) out << "(";
      const char* sep = e->kind == NodeKind::Product ? " x " : " v ";
      bool first = true;
      for (const auto& c : e->children) {
        if (!first) out << sep;
        first = false;
        print_node(c, out, c->kind == NodeKind::Product || c->kind == NodeKind::Wedge);
      }
      if (need_parens) out << ")";
      return;
    }
  }
}

}  // namespace

std::string to_string(const ExprPtr& e) {
  std::ostringstream out;
  print_node(e, out, false);
  return out.str();
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  return to_string(a) == to_string(b);
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

void add_step(std::vector<RewriteStep>& steps, std::string text) {
  steps.push_back({std::move(text)});
}

ExprPtr norm_rec(const ExprPtr& e, std::vector<RewriteStep>& steps);

// Splits the inside of F(-, 2) into group factors and a total Euclidean
// dimension.  Rejects factors that carry no group structure.
void collect_config_factors(const ExprPtr& e, std::vector<ExprPtr>& groups, unsigned& euclid) {
  if (e->kind == NodeKind::Product) {
    for (const auto& c : e->children) collect_config_factors(c, groups, euclid);
    return;
  }
  if (e->kind == NodeKind::Euclidean) {
    euclid += e->dim;
    return;
  }
  if (e->kind == NodeKind::Point) return;
  if (group_capable(e)) {
    groups.push_back(e);
    return;
  }
  throw NormalizeError(
      "F(-, 2) supports products of compact connected groups (S1, S3, T<k>, RP3 = SO3, SO(m)) "
      "with Euclidean factors; '" +
      to_string(e) + "' is not such a factor");
}

ExprPtr norm_config(const ExprPtr& cfg, std::vector<RewriteStep>& steps) {
  std::vector<ExprPtr> groups;
  unsigned n = 0;
  collect_config_factors(cfg->children[0], groups, n);

  if (groups.empty()) {
    if (n >= 2) {
      add_step(steps, "F(R" + std::to_string(n) +
                          ", 2): translating the first body to the origin leaves the second in "
                          "R" + std::to_string(n) + " minus a point, which retracts to S" +
                          std::to_string(n - 1));
      return make_sphere(n - 1);
    }
    if (n == 1)
      throw NormalizeError(
          "F(R1, 2) is disconnected (two ordered bodies on a line cannot trade places)");
    throw NormalizeError("two distinct bodies cannot occupy a space with no room to differ");
  }

  ExprPtr g = groups.size() == 1 ? groups[0] : make_product(groups);
  const unsigned m = g->dim;

  if (n == 0) {
    if (m == 1) {
      add_step(steps,
               "F(S1, 2): rotating the first body to a basepoint leaves the second on an arc; "
               "the pair space retracts to the circle");
      return g;
    }
    throw NormalizeError(
        "F(G, 2) for a closed group of dimension >= 2 does not simplify in this language; add a "
        "Euclidean factor (e.g. F(" + to_string(g) + " x R1, 2))");
  }

  const std::string gs = to_string(g);
  add_step(steps, "group translation pins the first body: F(" + gs + " x R" + std::to_string(n) +
                      ", 2) is a bundle " + gs + " x R" + std::to_string(n) +
                      " x (once-punctured " + gs + " x R" + std::to_string(n) + ")");
  add_step(steps, "contractible factor R" + std::to_string(n) + " elided");
  add_step(steps, "once-punctured " + gs + " x R" + std::to_string(n) + " collapses to " + gs +
                      " v S" + std::to_string(m + n - 1) +
                      " (crush the complement of a ball around the puncture)");

  std::vector<ExprPtr> outer = groups;
  outer.push_back(make_wedge({g, make_sphere(m + n - 1)}));
  return make_product(std::move(outer));
}

ExprPtr norm_rec(const ExprPtr& e, std::vector<RewriteStep>& steps) {
  switch (e->kind) {
    case NodeKind::Sphere:
    case NodeKind::Point:
    case NodeKind::GroupAtom:
      return e;
    case NodeKind::Euclidean:
      add_step(steps, "R" + std::to_string(e->dim) + " is contractible: replaced by a point");
      return make_point();
    case NodeKind::Config2:
      return norm_config(e, steps);
    case NodeKind::Product: {
      std::vector<ExprPtr> out;
      for (const auto& raw : e->children) {
        if (raw->kind == NodeKind::Euclidean) {
          add_step(steps, "contractible factor R" + std::to_string(raw->dim) + " elided");
          continue;
        }
        ExprPtr c = norm_rec(raw, steps);
        if (c->kind == NodeKind::Point) {
          if (raw->kind != NodeKind::Point)
            add_step(steps, "contractible factor '" + to_string(raw) + "' elided");
          continue;
        }
        if (c->kind == NodeKind::Product) {
          out.insert(out.end(), c->children.begin(), c->children.end());
        } else {
          out.push_back(c);
        }
      }
      if (out.empty()) {
        add_step(steps, "product of contractible factors is a point");
        return make_point();
      }
      return make_product(std::move(out));
    }
    case NodeKind::Wedge: {
      std::vector<ExprPtr> out;
      for (const auto& raw : e->children) {
        ExprPtr c = norm_rec(raw, steps);
        if (c->kind == NodeKind::Point) {
          add_step(steps, "contractible wedge summand '" + to_string(raw) + "' elided");
          continue;
        }
        if (c->kind == NodeKind::Wedge) {
          out.insert(out.end(), c->children.begin(), c->children.end());
        } else {
          out.push_back(c);
        }
      }
      if (out.empty()) {
        add_step(steps, "wedge of contractible summands is a point");
        return make_point();
      }
      return make_wedge(std::move(out));
    }
  }
  throw std::logic_error("unhandled node kind");
}

}  // namespace

NormalizeResult normalize(const ExprPtr& e) {
  NormalizeResult r;
  r.expr = norm_rec(e, r.steps);
  return r;
}

// ---------------------------------------------------------------------------
// Cohomology

AlgebraPtr cohomology(const ExprPtr& e, Field f) {
  switch (e->kind) {
    case NodeKind::Point:
    case NodeKind::Euclidean:
      return GradedAlgebra::point(f);
    case NodeKind::Sphere:
      return GradedAlgebra::truncated_polynomial(f, "x", e->dim, 2);
    case NodeKind::GroupAtom: {
      const AtomInfo* info = atom_info(e->name);
      if (!info || !info->has_ring)
        throw UnregisteredRing("no ring table for '" + e->name +
                               "'; its category data comes from registry values");
      if (e->name == "RP3") {
        if (f.characteristic() == 2)
          return GradedAlgebra::truncated_polynomial(f, "a", 1, 4);
        return GradedAlgebra::truncated_polynomial(f, "x", 3, 2);
      }
      if (e->name[0] == 'T') {
        std::vector<std::pair<std::string, unsigned>> gens;
        for (unsigned i = 1; i <= info->dim; ++i) gens.emplace_back("t" + std::to_string(i), 1);
        return GradedAlgebra::exterior(f, gens);
      }
      throw UnregisteredRing("no ring table for '" + e->name + "'");
    }
    case NodeKind::Product: {
      AlgebraPtr acc = cohomology(e->children[0], f);
      for (std::size_t i = 1; i < e->children.size(); ++i)
        acc = GradedAlgebra::tensor_product(acc, cohomology(e->children[i], f));
      return acc;
    }
    case NodeKind::Wedge: {
      AlgebraPtr acc = cohomology(e->children[0], f);
      for (std::size_t i = 1; i < e->children.size(); ++i)
        acc = GradedAlgebra::wedge_sum(acc, cohomology(e->children[i], f));
      return acc;
    }
    case NodeKind::Config2:
      throw std::logic_error("cohomology requires a normalized expression (normalize first)");
  }
  throw std::logic_error("unhandled node kind");
}

}  // namespace tcat
