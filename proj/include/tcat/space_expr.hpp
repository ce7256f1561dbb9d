#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tcat/graded_algebra.hpp"

namespace tcat {

enum class NodeKind { Sphere, Euclidean, Point, GroupAtom, Product, Wedge, Config2 };

struct SpaceNode;
using ExprPtr = std::shared_ptr<const SpaceNode>;

// Immutable space expression node.  `dim` caches the covering dimension
// (sum over product factors, max over wedge summands, doubled for
// two-point configuration spaces).
struct SpaceNode {
  NodeKind kind;
  unsigned dim = 0;
  std::string name;               // group atoms: canonical registry key
  std::vector<ExprPtr> children;  // product/wedge members, config inner
};

ExprPtr make_sphere(unsigned m);
ExprPtr make_euclidean(unsigned n);
ExprPtr make_point();
ExprPtr make_group_atom(const std::string& canonical_name);
ExprPtr make_product(std::vector<ExprPtr> children);
ExprPtr make_wedge(std::vector<ExprPtr> children);
ExprPtr make_config2(ExprPtr inner);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// Grammar: atoms S<m>/S^<m>, R<n>/R^<n>, RP3, SO3, SO(<m>) for m ≤ 10,
// T<k>, pt; product `x`/`*`; wedge(a, b, ...); F(<expr>, 2); parentheses;
// postfix ^k repeats a factor k times.  Case- and whitespace-insensitive.
ExprPtr parse_space(const std::string& text);

// Raised when an expression parses but denotes a space outside the
// supported language (e.g. configuration pairs on a bare closed manifold).
struct NormalizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RewriteStep {
  std::string description;
};

struct NormalizeResult {
  ExprPtr expr;
  std::vector<RewriteStep> steps;
};

// Rewrites to a homotopy-canonical form: configuration spaces of pairs are
// split into product x wedge form, contractible factors are dropped,
// products and wedges are flattened, points elided.  The result contains
// no Config2 and no Euclidean nodes.
NormalizeResult normalize(const ExprPtr& e);

// Unambiguous display form; doubles as the memoization key.
std::string to_string(const ExprPtr& e);
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

// Builds the cohomology ring of a normalized expression over the field.
// Throws UnregisteredRing when an atom has no ring table for the field.
struct UnregisteredRing : std::runtime_error {
  using std::runtime_error::runtime_error;
};
AlgebraPtr cohomology(const ExprPtr& e, Field f);

// Registry data for group atoms.  Atoms without ring tables carry
// externally sourced category/cup-length values instead.
struct AtomInfo {
  unsigned dim = 0;
  bool lie = false;
  bool has_ring = false;
  std::optional<unsigned> registry_cat;     // trusted external value
  std::optional<unsigned> registry_cup_z2;  // trusted external value
  std::string source;                       // citation for external values
};
const AtomInfo* atom_info(const std::string& canonical_name);

// True for factors accepted inside a two-point configuration space: compact
// connected topological groups in the expression language.
bool group_capable(const ExprPtr& e);

}  // namespace tcat
