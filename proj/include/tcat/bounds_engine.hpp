#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tcat/invariants.hpp"
#include "tcat/space_expr.hpp"

namespace tcat {

// Half-open knowledge about a normalized integer invariant; hi empty means
// no upper bound has been derived yet.
struct Interval {
  unsigned lo = 1;
  std::optional<unsigned> hi;
  bool exact() const { return hi.has_value() && *hi == lo; }
  std::string str() const;
};

// A rule fired and narrowed an interval.  `statement` spells out the
// narrowing with its premises; `anchor` names the literature result or the
// construction justifying it.
struct Certificate {
  std::string rule;
  std::string quantity;  // "cat" | "tc" | "tcm"
  std::string statement;
  std::string anchor;
};

struct BoundCrossing : std::logic_error {
  using std::logic_error::logic_error;
};

struct NodeBounds {
  Interval cat, tc, tcm;
  // Field name -> longest nonzero product of positive classes (cup) and of
  // multiplication-kernel classes (zcl).  Facts are recorded by the rules
  // that compute them and consumed by premises of later rules.
  std::map<std::string, unsigned> cup;
  std::map<std::string, unsigned> zcl;
  std::vector<Certificate> chain;
};

// Monotone interval-narrowing engine over a fixed rule set R1..R14.
// Intervals only shrink; rules fire round-robin until a full pass changes
// nothing.  Results are memoized per expression, so premises about
// subexpressions reuse finished work.  Rules can be disabled by id, which
// the self-checks use to confirm each one carries weight.
class BoundsEngine {
 public:
  explicit BoundsEngine(std::vector<Field> fields = {Field::rationals(), Field::prime(2)},
                        std::set<std::string> disabled = {});
  ~BoundsEngine();
  BoundsEngine(const BoundsEngine&) = delete;
  BoundsEngine& operator=(const BoundsEngine&) = delete;

  // `e` must be normalized (no Config2/Euclidean nodes).
  const NodeBounds& bounds(const ExprPtr& e);

  static const std::vector<std::string>& rule_ids();

 private:
  struct Record;

  std::vector<Field> fields_;
  std::set<std::string> disabled_;
  std::map<std::string, std::unique_ptr<Record>> memo_;

  Record& record_for(const ExprPtr& e);
  void compute(Record& rec);
  bool enabled(const std::string& rule) const { return !disabled_.count(rule); }

  AlgebraPtr ring_for(Record& rec, Field f);
  std::optional<unsigned> cup_fact(Record& rec, Field f);
  std::optional<unsigned> zcl_fact(Record& rec, Field f);

  bool raise_lo(Record& rec, Interval& iv, const char* quantity, unsigned v,
                const std::string& rule, const std::string& why, const std::string& anchor);
  bool drop_hi(Record& rec, Interval& iv, const char* quantity, unsigned v,
               const std::string& rule, const std::string& why, const std::string& anchor);
  bool set_exact(Record& rec, Interval& iv, const char* quantity, unsigned v,
                 const std::string& rule, const std::string& why, const std::string& anchor);

  bool rule_cup_lower(Record& rec);        // R1
  bool rule_zcl_lower(Record& rec);        // R2
  bool rule_product_cat(Record& rec);      // R3
  bool rule_wedge_cat(Record& rec);        // R4
  bool rule_sphere_cat(Record& rec);       // R5
  bool rule_tc_from_cat(Record& rec);      // R6
  bool rule_group_tc(Record& rec);         // R7
  bool rule_sphere_tc(Record& rec);        // R8
  bool rule_chain(Record& rec);            // R9
  bool rule_wedge_max(Record& rec);        // R10
  bool rule_wedge_sphere(Record& rec);     // R11
  bool rule_product_tc(Record& rec);       // R12
  bool rule_sphere_wedge_tc(Record& rec);  // R13
  bool rule_dimension(Record& rec);        // R14
};

// One-stop analysis of an input string: parse, normalize with trace, run
// the engine on the normal form.  The monoidal invariant is only claimed
// for inputs already in normal form, since it is not a homotopy invariant.
struct SpaceReport {
  ExprPtr input;
  ExprPtr normalized;
  std::vector<RewriteStep> steps;
  NodeBounds bounds;
  bool monoidal_applicable = false;
};

SpaceReport analyze(const std::string& text,
                    std::vector<Field> fields = {Field::rationals(), Field::prime(2)},
                    std::set<std::string> disabled = {});

// Human-readable certificate chain, one firing per line.
std::string render_certificates(const NodeBounds& nb);

}  // namespace tcat
