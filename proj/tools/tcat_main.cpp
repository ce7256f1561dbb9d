// tcat: exact cohomology invariants, motion planners, and their audits.
//
// Subcommands:
//   invariants <expr>     cat/TC bounds with certificates for a space
//   ring <presentation>   Betti numbers and product lengths of a ring
//   plan <space> <A> <B>  one motion-planning query as path JSON
//   verify <space>        statistical audit of a planner (exit 0 iff pass)
//   catalog               what the tool knows about
//
// Exit codes: 0 success/pass, 1 verification or planning failure, 2 usage.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tcat/bounds_engine.hpp"
#include "tcat/invariants.hpp"
#include "tcat/planner.hpp"
#include "tcat/verifier.hpp"

using nlohmann::json;
using namespace tcat;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<Field> parse_fields_csv(const std::string& csv) {
  std::vector<Field> fields;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) fields.push_back(parse_field(token));
  }
  if (fields.empty()) throw std::invalid_argument("no fields given");
  return fields;
}

json interval_to_json(const Interval& iv) {
  json j;
  j["lo"] = iv.lo;
  if (iv.hi) j["hi"] = *iv.hi;
  else j["hi"] = nullptr;
  j["exact"] = iv.exact();
  return j;
}

std::string interval_to_text(const std::string& label, const Interval& iv) {
  std::ostringstream out;
  out << label << " ";
  if (iv.exact()) out << "= " << iv.lo << " (exact)";
  else if (iv.hi) out << "in [" << iv.lo << ", " << *iv.hi << "]";
  else out << ">= " << iv.lo;
  return out.str();
}

// ---------------------------------------------------------------- invariants

int cmd_invariants(const std::string& expr, const std::string& fields_csv, bool as_json) {
  const std::vector<Field> fields = parse_fields_csv(fields_csv);
  const SpaceReport rep = analyze(expr, fields);

  struct FieldRow {
    std::string name;
    std::optional<std::vector<std::size_t>> betti;
    std::optional<unsigned> cup, zcl;
  };
  std::vector<FieldRow> rows;
  for (const Field& f : fields) {
    FieldRow row;
    row.name = f.name();
    try {
      row.betti = cohomology(rep.normalized, f)->betti_numbers();
    } catch (const UnregisteredRing&) {
      // Registry-only atoms (e.g. rotation groups beyond three dimensions)
      // carry trusted invariant values but no ring table.
    }
    if (auto it = rep.bounds.cup.find(row.name); it != rep.bounds.cup.end()) row.cup = it->second;
    if (auto it = rep.bounds.zcl.find(row.name); it != rep.bounds.zcl.end()) row.zcl = it->second;
    rows.push_back(std::move(row));
  }

  if (as_json) {
    json j;
    j["schema"] = "tcat.invariants/1";
    j["input"] = to_string(rep.input);
    j["normalized"] = to_string(rep.normalized);
    j["rewrites"] = json::array();
    for (const auto& s : rep.steps) j["rewrites"].push_back(s.description);
    j["fields"] = json::object();
    for (const auto& row : rows) {
      json jf;
      jf["betti"] = row.betti ? json(*row.betti) : json(nullptr);
      jf["cup"] = row.cup ? json(*row.cup) : json(nullptr);
      jf["zcl"] = row.zcl ? json(*row.zcl) : json(nullptr);
      j["fields"][row.name] = jf;
    }
    j["cat"] = interval_to_json(rep.bounds.cat);
    j["tc"] = interval_to_json(rep.bounds.tc);
    j["tcm_applicable"] = rep.monoidal_applicable;
    j["tcm"] = rep.monoidal_applicable ? interval_to_json(rep.bounds.tcm) : json(nullptr);
    j["certificates"] = json::array();
    for (const auto& c : rep.bounds.chain) {
      j["certificates"].push_back(
          {{"rule", c.rule}, {"quantity", c.quantity}, {"statement", c.statement}, {"anchor", c.anchor}});
    }
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }

  std::cout << "input:      " << to_string(rep.input) << "\n";
  std::cout << "normalized: " << to_string(rep.normalized) << "\n";
  for (const auto& s : rep.steps) std::cout << "rewrite:    " << s.description << "\n";
  for (const auto& row : rows) {
    std::cout << "field " << row.name << ": ";
    if (row.betti) {
      std::cout << "betti = [";
      for (std::size_t i = 0; i < row.betti->size(); ++i)
        std::cout << (i ? ", " : "") << (*row.betti)[i];
      std::cout << "]";
    } else {
      std::cout << "ring not registered";
    }
    if (row.cup) std::cout << "; cup = " << *row.cup;
    if (row.zcl) std::cout << "; zcl = " << *row.zcl;
    std::cout << "\n";
  }
  std::cout << interval_to_text("cat ", rep.bounds.cat) << "\n";
  std::cout << interval_to_text("TC  ", rep.bounds.tc) << "\n";
  if (rep.monoidal_applicable) {
    std::cout << interval_to_text("TC^M", rep.bounds.tcm) << "\n";
  } else {
    std::cout << "TC^M not reported: the input is not in normal form, and the "
                 "monoidal variant is not invariant under the rewrites\n";
  }
  std::cout << "certificates:\n" << render_certificates(rep.bounds);
  return kExitPass;
}

// ----------------------------------------------------------------- ring

// Recursive-descent parser for ring presentations:
//   exterior(x:1, y:3) | trunc(a:1, h=4) | tensor(R, S, ...) | wedge(R, S, ...)
// with an optional trailing field tag @Q / @Z2 (default Q).
class RingParser {
 public:
  explicit RingParser(std::string text) : text_(std::move(text)) {}

  AlgebraPtr parse() {
    Field f = Field::rationals();
    const auto at = text_.find('@');
    if (at != std::string::npos) {
      f = parse_field(text_.substr(at + 1));
      text_ = text_.substr(0, at);
    }
    pos_ = 0;
    AlgebraPtr r = parse_term(f);
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument(msg + " (at position " + std::to_string(pos_) + ")");
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }
  unsigned number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return static_cast<unsigned>(std::stoul(text_.substr(start, pos_ - start)));
  }

  AlgebraPtr parse_term(Field f) {
    std::string head = ident();
    std::transform(head.begin(), head.end(), head.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (head == "pt" || head == "point") return GradedAlgebra::point(f);
    expect('(');
    AlgebraPtr result;
    if (head == "exterior") {
      std::vector<std::pair<std::string, unsigned>> gens;
      do {
        std::string label = ident();
        expect(':');
        gens.emplace_back(std::move(label), number());
      } while (eat(','));
      result = GradedAlgebra::exterior(f, gens);
    } else if (head == "trunc") {
      std::string label = ident();
      expect(':');
      const unsigned degree = number();
      expect(',');
      const std::string h = ident();
      if (h != "h") fail("expected 'h=<height>'");
      expect('=');
      const unsigned height = number();
      result = GradedAlgebra::truncated_polynomial(f, label, degree, height);
    } else if (head == "tensor" || head == "wedge") {
      std::vector<AlgebraPtr> parts;
      do {
        parts.push_back(parse_term(f));
      } while (eat(','));
      if (parts.size() < 2) fail("need at least two arguments");
      result = parts[0];
      for (std::size_t i = 1; i < parts.size(); ++i) {
        result = head == "tensor" ? GradedAlgebra::tensor_product(result, parts[i])
                                  : GradedAlgebra::wedge_sum(result, parts[i]);
      }
    } else {
      fail("unknown ring constructor '" + head + "'");
    }
    expect(')');
    return result;
  }
};

int cmd_ring(const std::string& presentation, bool as_json) {
  const AlgebraPtr ring = RingParser(presentation).parse();
  const auto betti = ring->betti_numbers();
  const IdealPowerTrace cup = cup_length_trace(ring);

  // The zero-divisor length squares the ring; keep the work bounded.
  constexpr std::size_t kZclDimensionCap = 40;
  std::optional<std::size_t> zcl;
  std::vector<std::string> zcl_witness;
  if (ring->dimension() <= kZclDimensionCap) {
    ZclResult z = zero_divisor_cup_length_trace(ring);
    zcl = z.trace.length();
    zcl_witness = z.trace.witness_factors;
  }

  if (as_json) {
    json j;
    j["schema"] = "tcat.ring/1";
    j["field"] = ring->field().name();
    j["dimension"] = ring->dimension();
    j["betti"] = betti;
    j["cup"] = cup.length();
    j["cup_witness"] = cup.witness_factors;
    j["zcl"] = zcl ? json(*zcl) : json(nullptr);
    j["zcl_witness"] = zcl_witness;
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }

  std::cout << "field:     " << ring->field().name() << "\n";
  std::cout << "dimension: " << ring->dimension() << "\n";
  std::cout << "betti:     [";
  for (std::size_t i = 0; i < betti.size(); ++i) std::cout << (i ? ", " : "") << betti[i];
  std::cout << "]\n";
  std::cout << "cup = " << cup.length();
  if (!cup.witness_factors.empty()) {
    std::cout << "  via";
    for (const auto& w : cup.witness_factors) std::cout << " " << w;
  }
  std::cout << "\n";
  if (zcl) {
    std::cout << "zcl = " << *zcl;
    if (!zcl_witness.empty()) {
      std::cout << "  via";
      for (const auto& w : zcl_witness) std::cout << " " << w;
    }
    std::cout << "\n";
  } else {
    std::cout << "zcl skipped (dimension " << ring->dimension() << " > " << kZclDimensionCap
              << "; the tensor square would be too large)\n";
  }
  return kExitPass;
}

// ----------------------------------------------------------------- planners

Planner planner_by_name(const std::string& name) {
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  unsigned arg = 0;
  if (colon != std::string::npos) {
    const std::string tail = name.substr(colon + 1);
    if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](unsigned char c) {
          return std::isdigit(c);
        }))
      throw std::invalid_argument("bad parameter in space name '" + name + "'");
    arg = static_cast<unsigned>(std::stoul(tail));
  }
  if (head == "circle" && colon == std::string::npos) return circle_planner();
  if (head == "sphere" && colon != std::string::npos) return sphere_planner(arg);
  if (head == "wedge" && colon != std::string::npos) return wedge_planner(arg);
  if (head == "cylinder" && colon != std::string::npos) return cylinder_planner(arg);
  if (head == "punctured-cylinder" && colon != std::string::npos)
    return punctured_cylinder_planner(arg);
  if (head == "cylinder-config" && colon != std::string::npos)
    return config_cylinder_planner(arg);
  throw std::invalid_argument(
      "unknown space '" + name +
      "' (try circle, sphere:m, wedge:m, cylinder:n, punctured-cylinder:n, "
      "cylinder-config:n)");
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (used != token.size()) throw std::invalid_argument("bad number '" + token + "'");
    out.push_back(v);
  }
  return out;
}

double degrees_to_radians(const std::string& text) {
  std::string t = text;
  // Tolerate a trailing degree sign.
  while (!t.empty() && (static_cast<unsigned char>(t.back()) & 0x80u)) t.pop_back();
  std::size_t used = 0;
  const double v = std::stod(t, &used);
  if (used != t.size()) throw std::invalid_argument("bad angle '" + text + "'");
  return v * M_PI / 180.0;
}

Pt cylinder_body(const std::string& text, unsigned heights) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("cylinder point needs 'angle_degrees,heights...'");
  const double angle = degrees_to_radians(text.substr(0, comma));
  const std::vector<double> hs = parse_numbers(text.substr(comma + 1));
  if (hs.size() != heights)
    throw std::invalid_argument("expected " + std::to_string(heights) + " height(s)");
  Pt z{std::cos(angle), std::sin(angle)};
  z.insert(z.end(), hs.begin(), hs.end());
  return z;
}

// Point syntax per space: circle "90"; sphere "x,y,z"; wedge "c:180" /
// "s:x,y,z" / "join"; cylinders "angle,h1[,h2]"; two-body pairs joined by ';'.
Pt parse_point(const GeometricSpace& g, const std::string& text) {
  switch (g.kind) {
    case GeometricSpace::Kind::Sphere: {
      if (g.param == 1 && text.find(',') == std::string::npos) {
        const double a = degrees_to_radians(text);
        return Pt{std::cos(a), std::sin(a)};
      }
      Pt z = parse_numbers(text);
      if (z.size() != g.ambient_dim())
        throw std::invalid_argument("expected " + std::to_string(g.ambient_dim()) +
                                    " coordinates");
      return z;
    }
    case GeometricSpace::Kind::Wedge: {
      Pt z(g.ambient_dim(), 0.0);
      z[0] = 1.0;
      z[2] = 1.0;
      if (text == "join") return z;
      if (text.size() > 2 && text[1] == ':') {
        if (text[0] == 'c') {
          const double a = degrees_to_radians(text.substr(2));
          z[0] = std::cos(a);
          z[1] = std::sin(a);
          return z;
        }
        if (text[0] == 's') {
          const Pt s = parse_numbers(text.substr(2));
          if (s.size() != g.ambient_dim() - 2)
            throw std::invalid_argument("sphere part needs " +
                                        std::to_string(g.ambient_dim() - 2) + " coordinates");
          std::copy(s.begin(), s.end(), z.begin() + 2);
          return z;
        }
      }
      throw std::invalid_argument(
          "wedge points are 'c:<degrees>', 's:<coordinates>', or 'join'");
    }
    case GeometricSpace::Kind::PuncturedCylinder:
      return cylinder_body(text, g.param);
    case GeometricSpace::Kind::ConfigCylinder: {
      const auto semi = text.find(';');
      if (semi == std::string::npos)
        throw std::invalid_argument("two-body points are 'angle,heights;angle,heights'");
      Pt first = cylinder_body(text.substr(0, semi), g.param);
      const Pt second = cylinder_body(text.substr(semi + 1), g.param);
      first.insert(first.end(), second.begin(), second.end());
      return first;
    }
    case GeometricSpace::Kind::Product: {
      // Factor texts joined by ';' in order.
      std::vector<std::string> parts;
      std::string token;
      std::istringstream in(text);
      while (std::getline(in, token, ';')) parts.push_back(token);
      if (parts.size() != g.factors.size())
        throw std::invalid_argument("expected " + std::to_string(g.factors.size()) +
                                    " factor points joined by ';'");
      Pt z;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const Pt f = parse_point(g.factors[i], parts[i]);
        z.insert(z.end(), f.begin(), f.end());
      }
      return z;
    }
    case GeometricSpace::Kind::Euclidean: {
      Pt z = parse_numbers(text);
      if (z.size() != g.ambient_dim())
        throw std::invalid_argument("expected " + std::to_string(g.ambient_dim()) +
                                    " coordinates");
      return z;
    }
  }
  throw std::invalid_argument("unhandled space kind");
}

void require_member(const GeometricSpace& g, const Pt& z, const std::string& which) {
  const double defect = g.membership_error(z);
  if (defect > 1e-9) {
    throw std::invalid_argument(which + " is not on the space (constraint defect " +
                                std::to_string(defect) + ")");
  }
  if (!(g.strict_margin(z) > 0.0)) {
    throw std::invalid_argument(which + " touches the removed locus (collision)");
  }
}

int cmd_plan(const std::string& space, const std::string& a_text, const std::string& b_text,
             int resolution) {
  const Planner p = planner_by_name(space);
  const Pt a = parse_point(p.space, a_text);
  const Pt b = parse_point(p.space, b_text);
  require_member(p.space, a, "start");
  require_member(p.space, b, "goal");

  const int rule = p.select_rule(a, b);
  if (rule < 0) {
    std::cerr << "no rule covers this pair\n";
    return kExitFail;
  }
  const Path path = p.rules[rule].section(a, b);
  const auto samples = sample_path(path, resolution);

  double min_sep = std::numeric_limits<double>::infinity();
  for (const auto& z : samples) min_sep = std::min(min_sep, p.space.strict_margin(z));

  json j;
  j["schema"] = "tcat.plan/1";
  j["space"] = p.space.describe();
  j["planner"] = p.name;
  j["rule"] = {{"index", rule},
               {"name", p.rules[rule].name},
               {"anchor", p.rules[rule].anchor},
               {"margin", p.rule_margin(static_cast<std::size_t>(rule), a, b)}};
  j["start"] = a;
  j["goal"] = b;
  j["resolution"] = resolution;
  if (std::isfinite(min_sep)) j["min_separation"] = min_sep;
  j["samples"] = samples;
  std::cout << j.dump(2) << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& space, int samples, std::uint64_t seed, bool timing) {
  const Planner p = planner_by_name(space);
  VerifyOptions opts;
  opts.pairs = samples;
  opts.seed = seed;
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport rep = verify_planner(p, opts);
  const auto t1 = std::chrono::steady_clock::now();
  std::cout << rep.to_json() << "\n";
  if (timing) {
    std::cerr << "elapsed_ms "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << "\n";
  }
  return rep.pass ? kExitPass : kExitFail;
}

// ----------------------------------------------------------------- catalog

int cmd_catalog(bool as_json) {
  const std::vector<std::pair<std::string, std::string>> atoms = {
      {"S<m> / S^<m>", "sphere of dimension m >= 1"},
      {"R<n> / R^<n>", "contractible euclidean factor"},
      {"pt", "a point"},
      {"T<k>", "torus, the k-fold product of circles"},
      {"RP3 (= SO3)", "real projective three-space"},
      {"SO(4) .. SO(10)", "rotation groups with registry category values"},
      {"X x Y, X^k", "products"},
      {"wedge(X, Y, ...)", "one-point unions"},
      {"F(X, 2)", "ordered pairs of distinct points, X a group times R^n"},
  };
  const std::vector<std::pair<std::string, std::string>> rings = {
      {"exterior(x:1, y:3)", "exterior algebra on odd generators"},
      {"trunc(a:1, h=4)", "truncated polynomial ring a^4 = 0"},
      {"tensor(R, S)", "product of spaces (Koszul signs)"},
      {"wedge(R, S)", "one-point union"},
      {"... @Q or @Z2", "coefficient field tag (default Q)"},
  };
  const std::vector<std::string> planner_names = {
      "circle", "sphere:2", "sphere:3", "wedge:1", "wedge:2",
      "cylinder:1", "punctured-cylinder:1", "punctured-cylinder:2",
      "cylinder-config:1", "cylinder-config:2"};

  if (as_json) {
    json j;
    j["schema"] = "tcat.catalog/1";
    j["space_atoms"] = json::array();
    for (const auto& [k, v] : atoms) j["space_atoms"].push_back({{"syntax", k}, {"meaning", v}});
    j["ring_constructors"] = json::array();
    for (const auto& [k, v] : rings)
      j["ring_constructors"].push_back({{"syntax", k}, {"meaning", v}});
    j["planners"] = json::array();
    for (const auto& n : planner_names) {
      const Planner p = planner_by_name(n);
      json jp;
      jp["name"] = n;
      jp["space"] = p.space.describe();
      jp["rules"] = p.rules.size();
      jp["reserved"] = p.reserved;
      j["planners"].push_back(jp);
    }
    j["fields"] = {"Q", "Z2"};
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }

  std::cout << "space expressions (for `invariants`):\n";
  for (const auto& [k, v] : atoms) std::cout << "  " << k << "  -  " << v << "\n";
  std::cout << "ring presentations (for `ring`):\n";
  for (const auto& [k, v] : rings) std::cout << "  " << k << "  -  " << v << "\n";
  std::cout << "planners (for `plan` / `verify`):\n";
  for (const auto& n : planner_names) {
    const Planner p = planner_by_name(n);
    std::cout << "  " << n << "  -  " << p.rules.size() << " rules on " << p.space.describe()
              << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariant bounds and executable motion planners"};
  app.require_subcommand(1);

  std::string expr, fields_csv = "Q,Z2", presentation, space, point_a, point_b;
  bool as_json = false, timing = false;
  int resolution = 64;
  int samples = 10000;
  std::uint64_t seed = 20240801;

  CLI::App* inv = app.add_subcommand("invariants", "cat/TC bounds with certificates");
  inv->add_option("expr", expr, "space expression, e.g. F(S1 x R^2, 2)")->required();
  inv->add_option("--fields", fields_csv, "comma-separated coefficient fields")
      ->envname("TCAT_FIELDS");
  inv->add_flag("--json", as_json, "machine-readable output");

  CLI::App* ring = app.add_subcommand("ring", "Betti numbers and product lengths");
  ring->add_option("presentation", presentation, "e.g. trunc(a:1, h=4)@Z2")->required();
  ring->add_flag("--json", as_json, "machine-readable output");

  CLI::App* plan = app.add_subcommand("plan", "one motion-planning query");
  plan->add_option("space", space, "circle | sphere:m | wedge:m | cylinder-config:n | ...")
      ->required();
  plan->add_option("start", point_a, "start point")->required();
  plan->add_option("goal", point_b, "goal point")->required();
  plan->add_option("--resolution", resolution, "number of path samples")
      ->check(CLI::Range(2, 100000));

  CLI::App* verify = app.add_subcommand("verify", "statistical audit of a planner");
  verify->add_option("space", space, "planner name as in `plan`")->required();
  verify->add_option("--samples", samples, "random start/goal pairs")->check(CLI::Range(1, 10000000));
  verify->add_option("--seed", seed, "random seed");
  verify->add_flag("--timing", timing, "report elapsed time on stderr");

  CLI::App* catalog = app.add_subcommand("catalog", "list spaces, rings, planners");
  catalog->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(expr, fields_csv, as_json);
    if (ring->parsed()) return cmd_ring(presentation, as_json);
    if (plan->parsed()) return cmd_plan(space, point_a, point_b, resolution);
    if (verify->parsed()) return cmd_verify(space, samples, seed, timing);
    if (catalog->parsed()) return cmd_catalog(as_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NormalizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnregisteredRing& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
