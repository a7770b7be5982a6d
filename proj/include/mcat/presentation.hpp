// Monoidal presentations: generating objects, generating morphisms (edges of
// a monoidal quiver), and linear relations between layered morphism words.
// Includes the text format parser/serializer and the built-in presentations.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcat/error.hpp"
#include "mcat/field.hpp"

namespace mcat {

// A word in the generating objects, stored as one char per object index.
// The empty string is the monoidal unit.
using ObjectWord = std::string;

// A generating morphism e : dom -> cod between object words.
struct GeneratorEdge {
  std::string name;
  ObjectWord dom;
  ObjectWord cod;
  bool operator==(const GeneratorEdge&) const = default;
};

// One tensor factor inside a layer: either an identity strand (a generating
// object) or a generating morphism.
struct ExprFactor {
  enum class Kind { Object, Edge };
  Kind kind;
  int index;
  bool operator==(const ExprFactor&) const = default;
};

// A layer is a tensor product of factors, leftmost factor on the leftmost
// strands. The empty layer is the identity of the monoidal unit.
using ExprLayer = std::vector<ExprFactor>;

// coeff * (layer_n o ... o layer_1); layers are listed in application order,
// first-applied leftmost.
struct ExprTerm {
  FieldValue coeff;
  std::vector<ExprLayer> layers;
  bool operator==(const ExprTerm&) const = default;
};

// A linear combination of layered morphism words.
struct MorphismExpr {
  std::vector<ExprTerm> terms;
  bool operator==(const MorphismExpr&) const = default;
};

// A named relation, stored in "expr = 0" form ("lhs = rhs" input text is
// folded into lhs - rhs).
struct NamedRelation {
  std::string name;
  MorphismExpr expr;
  bool operator==(const NamedRelation&) const = default;
};

// Structure constants of a finite-dimensional algebra with a distinguished
// basis, optionally with a trace form making it Frobenius. Used to generate
// the wreath-product presentations and their reference models.
struct FrobeniusAlgebraData {
  FieldTag tag = FieldTag::Q;
  std::vector<std::string> labels;  // basis labels, embedded in edge names
  // mul[i][j][k]: coefficient of basis k in (basis i) * (basis j).
  std::vector<std::vector<std::vector<FieldValue>>> mul;
  // Coordinates of the unit element; computed by validate().
  std::vector<FieldValue> unit;
  // Trace of each basis element, if a trace form is given.
  std::optional<std::vector<FieldValue>> trace;
  // dual[i][c]: coefficient of basis c in the basis dual to i with respect to
  // the pairing (x, y) -> trace(x y); computed by validate() when trace is set.
  std::optional<std::vector<std::vector<FieldValue>>> dual;

  std::size_t dim() const { return labels.size(); }
  int label_index(const std::string& label) const;  // -1 if absent

  // Checks associativity, finds the (two-sided) unit, and, when a trace is
  // given, checks its symmetry and nondegeneracy and computes the dual basis.
  // Throws Error if any check fails.
  void validate();

  // The group algebra of Z/n with basis e, g, g2, ..., g{n-1} and the trace
  // picking out the coefficient of e.
  static FrobeniusAlgebraData cyclic_group(int n, FieldTag tag);

  bool operator==(const FrobeniusAlgebraData&) const = default;
};

// A presentation of a monoidal category by generators and relations, linear
// over Q or Q(q).
struct MonoidalPresentation {
  FieldTag tag = FieldTag::Q;
  std::vector<std::string> objects;
  std::vector<GeneratorEdge> edges;
  std::vector<NamedRelation> relations;
  // Present when the relations were generated from algebra data (wreath
  // presentations); used to build reference models.
  std::optional<FrobeniusAlgebraData> algebra;

  int object_index(const std::string& name) const;  // -1 if absent
  int edge_index(const std::string& name) const;    // -1 if absent

  bool operator==(const MonoidalPresentation&) const = default;
};

// ---------------------------------------------------------------------------
// Text format.
//
//   # comment until end of line
//   coefficients Q            (or: coefficients Q(q))
//   object a
//   morphism s : a a -> a a   ("-" denotes the empty word)
//   relation name : expr      (or: relation name : lhs = rhs)
//
// An expression is a sum of terms. A term is an optional parenthesized
// coefficient followed by layers separated by ";", each layer a
// whitespace-separated tensor word of object and morphism names, leftmost
// layer applied first. The token "1" denotes the identity of the monoidal
// unit. Examples:
//
//   relation involution : s ; s = a a
//   relation skein : sp = sm + (q - 1/q) a a
// ---------------------------------------------------------------------------

MonoidalPresentation parse_presentation(const std::string& text);

// Canonical text for the presentation; parse_presentation round-trips it.
std::string serialize_presentation(const MonoidalPresentation& p);

// Parses a standalone expression ("=" not allowed) against the presentation's
// names, and checks that its terms chain and share endpoints.
MorphismExpr parse_morphism_expr(const MonoidalPresentation& p, const std::string& text);

std::string format_morphism_expr(const MonoidalPresentation& p, const MorphismExpr& expr);

// Appends "body", "- body", "(coeff) body" (first term) or " + body",
// " - body", " + (coeff) body" to out; shared by every sum formatter.
void append_sum_term(std::string& out, bool& first, const FieldValue& coeff,
                     const std::string& body, FieldTag tag);

// "a a b" -> word; "-" -> empty word. Throws ParseError on unknown names.
ObjectWord parse_object_word(const MonoidalPresentation& p, const std::string& text);

// Inverse of parse_object_word; the empty word prints as "-".
std::string format_object_word(const MonoidalPresentation& p, const ObjectWord& w);

// Common domain and codomain of all terms. Throws Error if layers fail to
// chain or terms disagree.
std::pair<ObjectWord, ObjectWord> expr_endpoints(const MonoidalPresentation& p,
                                                 const MorphismExpr& expr);

// ---------------------------------------------------------------------------
// Built-in presentations.
// ---------------------------------------------------------------------------

// Names accepted by builtin_presentation, in display order.
std::vector<std::string> builtin_names();

// Source text of a built-in presentation. The wreath presentations are
// generated from the algebra data and require it (affine-wreath additionally
// requires a trace). Throws UsageError for unknown names or missing algebra.
std::string builtin_presentation_source(const std::string& name,
                                        const std::optional<FrobeniusAlgebraData>& algebra = {});

// Parsed built-in presentation; for the wreath presentations the validated
// algebra data is attached to the result.
MonoidalPresentation builtin_presentation(const std::string& name,
                                          std::optional<FrobeniusAlgebraData> algebra = {});

}  // namespace mcat
