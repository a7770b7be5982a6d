// Unit tests for monoidal presentations: the text format, expression
// structure, algebra data, and the built-in presentations.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frozen.hpp"
#include "mcat/presentation.hpp"

using namespace mcat;

namespace {

ObjectWord w(std::initializer_list<int> idx) {
  ObjectWord out;
  for (int i : idx) out.push_back(static_cast<char>(i));
  return out;
}

ExprFactor obj(int i) { return {ExprFactor::Kind::Object, i}; }
ExprFactor edge(int i) { return {ExprFactor::Kind::Edge, i}; }

}  // namespace

TEST_CASE("symmetric builtin parses to the expected structure") {
  MonoidalPresentation p = builtin_presentation("symmetric");
  CHECK(p.tag == FieldTag::Q);
  REQUIRE(p.objects == std::vector<std::string>{"a"});
  REQUIRE(p.edges.size() == 1);
  CHECK(p.edges[0].name == "s");
  CHECK(p.edges[0].dom == w({0, 0}));
  CHECK(p.edges[0].cod == w({0, 0}));
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0].name == "involution");
  CHECK(p.relations[1].name == "braid");

  // involution: s ; s - 1_(a a), folded from "s ; s = a a".
  const MorphismExpr& inv = p.relations[0].expr;
  REQUIRE(inv.terms.size() == 2);
  CHECK(inv.terms[0].coeff == FieldValue::one(FieldTag::Q));
  CHECK(inv.terms[0].layers == std::vector<ExprLayer>{{edge(0)}, {edge(0)}});
  CHECK(inv.terms[1].coeff == FieldValue::integer(FieldTag::Q, -1));
  CHECK(inv.terms[1].layers == std::vector<ExprLayer>{{obj(0), obj(0)}});

  auto [dom, cod] = expr_endpoints(p, inv);
  CHECK(dom == w({0, 0}));
  CHECK(cod == w({0, 0}));

  // braid: both sides have three layers on three strands.
  const MorphismExpr& braid = p.relations[1].expr;
  REQUIRE(braid.terms.size() == 2);
  CHECK(braid.terms[0].layers ==
        std::vector<ExprLayer>{{edge(0), obj(0)}, {obj(0), edge(0)}, {edge(0), obj(0)}});
  auto ep = expr_endpoints(p, braid);
  CHECK(ep.first == w({0, 0, 0}));
}

TEST_CASE("object words parse and format, with '-' for the empty word") {
  MonoidalPresentation p = builtin_presentation("symmetric");
  CHECK(parse_object_word(p, "a a a") == w({0, 0, 0}));
  CHECK(parse_object_word(p, "  a ") == w({0}));
  CHECK(parse_object_word(p, "-") == ObjectWord{});
  CHECK(format_object_word(p, w({0, 0})) == "a a");
  CHECK(format_object_word(p, {}) == "-");
  CHECK_THROWS_AS(parse_object_word(p, "b"), ParseError);
  CHECK_THROWS_AS(parse_object_word(p, "a -"), ParseError);
  CHECK_THROWS_AS(parse_object_word(p, ""), ParseError);
}

TEST_CASE("standalone expressions parse, with endpoint checking") {
  MonoidalPresentation p = builtin_presentation("symmetric");
  MorphismExpr e = parse_morphism_expr(p, "s ; s + (3/2) a a");
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[1].coeff == parse_field_value("3/2", FieldTag::Q));
  CHECK_THROWS_AS(parse_morphism_expr(p, "s = s"), ParseError);
  CHECK_THROWS_AS(parse_morphism_expr(p, "s + a"), Error);        // endpoint mismatch
  CHECK_THROWS_AS(parse_morphism_expr(p, "s ; s ; a"), Error);    // layers do not chain
  CHECK_THROWS_AS(parse_morphism_expr(p, "zz"), ParseError);      // unknown name
  CHECK_THROWS_AS(parse_morphism_expr(p, ""), ParseError);
  CHECK_THROWS_AS(parse_morphism_expr(p, "s ; ; s"), ParseError);
  CHECK_THROWS_AS(parse_morphism_expr(p, "2 s"), ParseError);     // bare numeric coefficient
  CHECK_THROWS_AS(parse_morphism_expr(p, "s (2)"), ParseError);   // coefficient not leading
  CHECK_THROWS_AS(parse_morphism_expr(p, "(2 s"), ParseError);    // unclosed paren
}

TEST_CASE("parse errors carry 1-based line and column") {
  try {
    parse_presentation("coefficients Q\nobject a\nrelation r : s\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 14);
    CHECK(std::string(e.what()).find("unknown name 's'") != std::string::npos);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  // Coefficient errors are repositioned into the enclosing line.
  try {
    parse_presentation("coefficients Q\nobject a\nrelation r : (1/0) a\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column > 14);
  }
}

TEST_CASE("structural errors in presentation sources are rejected") {
  CHECK_THROWS_AS(parse_presentation("object a\nrelation r : a\n"), ParseError);  // tag after use
  CHECK_THROWS_AS(parse_presentation("object a\n"), ParseError);                  // tag missing
  CHECK_THROWS_AS(parse_presentation("coefficients R\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("coefficients Q\ncoefficients Q\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("coefficients Q\nobject a\nobject a\n"), ParseError);
  CHECK_THROWS_AS(
      parse_presentation("coefficients Q\nobject a\nmorphism a : a -> a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("coefficients Q\nobject a\nmorphism f : b -> a\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("coefficients Q\nfoo bar\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("coefficients Q\nobject a\nmorphism f a -> a\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("coefficients Q\nobject a\nmorphism f : a a\n"), ParseError);
  // A relation with two '=' signs.
  CHECK_THROWS_AS(
      parse_presentation(
          "coefficients Q\nobject a\nmorphism f : a -> a\nrelation r : f = f = f\n"),
      ParseError);
  // Relation terms with different endpoints.
  CHECK_THROWS_AS(
      parse_presentation("coefficients Q\nobject a\nmorphism f : a -> a\nrelation r : f = a a\n"),
      ParseError);
  // Duplicate relation names.
  CHECK_THROWS_AS(parse_presentation("coefficients Q\nobject a\nmorphism f : a -> a\n"
                                     "relation r : f = a\nrelation r : f = a\n"),
                  ParseError);
}

TEST_CASE("comments, blank lines, and the unit token are accepted") {
  std::string src =
      "# leading comment\n"
      "coefficients Q\n"
      "\n"
      "object a   # trailing comment\n"
      "morphism c : - -> a a\n"
      "morphism d : a a -> -\n"
      "relation zigzag : c ; d = 1\n";
  MonoidalPresentation p = parse_presentation(src);
  CHECK(p.edges[0].dom == ObjectWord{});
  CHECK(p.edges[0].cod == w({0, 0}));
  REQUIRE(p.relations.size() == 1);
  const MorphismExpr& e = p.relations[0].expr;
  REQUIRE(e.terms.size() == 2);
  // The "1" side is a single empty layer: the identity of the monoidal unit.
  CHECK(e.terms[1].layers == std::vector<ExprLayer>{{}});
  auto ep = expr_endpoints(p, e);
  CHECK(ep.first == ObjectWord{});
  CHECK(ep.second == ObjectWord{});
}

TEST_CASE("serialize/parse round-trips every builtin") {
  auto z2 = FrobeniusAlgebraData::cyclic_group(2, FieldTag::Q);
  auto z3 = FrobeniusAlgebraData::cyclic_group(3, FieldTag::Q);
  std::vector<MonoidalPresentation> ps = {
      builtin_presentation("symmetric"), builtin_presentation("braid"),
      builtin_presentation("hecke"),     builtin_presentation("daha"),
      builtin_presentation("wreath", z2), builtin_presentation("affine-wreath", z2),
      builtin_presentation("wreath", z3), builtin_presentation("affine-wreath", z3),
  };
  for (const auto& p : ps) {
    MonoidalPresentation q = parse_presentation(serialize_presentation(p));
    CHECK(q.tag == p.tag);
    CHECK(q.objects == p.objects);
    CHECK(q.edges == p.edges);
    CHECK(q.relations == p.relations);
  }
}

TEST_CASE("hecke skein coefficient is the exact rational function") {
  MonoidalPresentation p = builtin_presentation("hecke");
  CHECK(p.tag == FieldTag::Qq);
  const NamedRelation* skein = nullptr;
  for (const auto& r : p.relations)
    if (r.name == "skein") skein = &r;
  REQUIRE(skein != nullptr);
  REQUIRE(skein->expr.terms.size() == 3);
  // sp - sm - (q - 1/q) 1_(a a); the last coefficient prints via num/den form.
  CHECK(to_string(field_neg(skein->expr.terms[2].coeff)) == frozen::str_q_minus_qinv);
}

TEST_CASE("cyclic group algebra data has the expected structure") {
  auto z1 = FrobeniusAlgebraData::cyclic_group(1, FieldTag::Q);
  CHECK(z1.labels == std::vector<std::string>{"e"});
  CHECK(z1.unit == std::vector<FieldValue>{FieldValue::one(FieldTag::Q)});
  REQUIRE(z1.dual.has_value());

  auto z3 = FrobeniusAlgebraData::cyclic_group(3, FieldTag::Q);
  CHECK(z3.labels == std::vector<std::string>{"e", "g", "g2"});
  // g * g2 = e.
  CHECK(field_is_one(z3.mul[1][2][0]));
  CHECK(field_is_zero(z3.mul[1][2][1]));
  // Unit is e.
  CHECK(field_is_one(z3.unit[0]));
  CHECK(field_is_zero(z3.unit[1]));
  // Dual basis of g is g2 under the trace picking out e.
  REQUIRE(z3.dual.has_value());
  CHECK(field_is_one((*z3.dual)[1][2]));
  CHECK(field_is_zero((*z3.dual)[1][1]));

  CHECK_THROWS_AS(FrobeniusAlgebraData::cyclic_group(0, FieldTag::Q), Error);
}

TEST_CASE("algebra validation rejects bad data") {
  auto zero = FieldValue::zero(FieldTag::Q);
  auto one = FieldValue::one(FieldTag::Q);

  // No unit: the zero product on one basis element.
  FrobeniusAlgebraData no_unit;
  no_unit.labels = {"e"};
  no_unit.mul = {{{zero}}};
  CHECK_THROWS_AS(no_unit.validate(), Error);

  // Non-associative table: with x e = e + x, (x e) e differs from x (e e).
  FrobeniusAlgebraData broken;
  broken.labels = {"e", "x"};
  broken.mul.assign(2, std::vector<std::vector<FieldValue>>(2, std::vector<FieldValue>(2, zero)));
  broken.mul[0][0][0] = one;  // e e = e
  broken.mul[0][1][1] = one;  // e x = x
  broken.mul[1][1][1] = one;  // x x = x
  broken.mul[1][0][0] = one;  // x e = e + x
  broken.mul[1][0][1] = one;
  CHECK_THROWS_AS(broken.validate(), Error);

  // Degenerate trace.
  FrobeniusAlgebraData degen;
  degen.labels = {"e"};
  degen.mul = {{{one}}};
  degen.trace = std::vector<FieldValue>{zero};
  CHECK_THROWS_AS(degen.validate(), Error);

  // Mismatched table size.
  FrobeniusAlgebraData sized;
  sized.labels = {"e", "x"};
  sized.mul = {{{one}}};
  CHECK_THROWS_AS(sized.validate(), Error);
}

TEST_CASE("wreath builtins are generated from the algebra data") {
  auto z2 = FrobeniusAlgebraData::cyclic_group(2, FieldTag::Q);
  MonoidalPresentation p = builtin_presentation("wreath", z2);
  REQUIRE(p.edges.size() == 3);
  CHECK(p.edges[0].name == "s");
  CHECK(p.edges[1].name == "u_e");
  CHECK(p.edges[2].name == "u_g");
  CHECK(p.relations.size() == 9);  // involution, braid, unit, 4 mul, 2 slide
  REQUIRE(p.algebra.has_value());
  CHECK(p.algebra->labels == z2.labels);

  MonoidalPresentation ap = builtin_presentation("affine-wreath", z2);
  REQUIRE(ap.edges.size() == 4);
  CHECK(ap.edges[3].name == "t");
  CHECK(ap.relations.size() == 12);  // + 2 dot_token, affine_skein
  const NamedRelation& skein = ap.relations.back();
  CHECK(skein.name == "affine_skein");
  // s;t a = a t;s + u_e u_e + u_g u_g: four terms total once folded.
  CHECK(skein.expr.terms.size() == 4);
  auto ep = expr_endpoints(ap, skein.expr);
  CHECK(ep.first == w({0, 0}));

  // unit relation pins the token for the algebra unit to the identity strand.
  const NamedRelation* unit = nullptr;
  for (const auto& r : p.relations)
    if (r.name == "unit") unit = &r;
  REQUIRE(unit != nullptr);
  REQUIRE(unit->expr.terms.size() == 2);
  CHECK(unit->expr.terms[0].layers == std::vector<ExprLayer>{{edge(1)}});
  CHECK(unit->expr.terms[1].layers == std::vector<ExprLayer>{{obj(0)}});
}

TEST_CASE("builtin lookup and algebra requirements") {
  CHECK(builtin_names().size() == 6);
  CHECK_THROWS_AS(builtin_presentation("nope"), UsageError);
  CHECK_THROWS_AS(builtin_presentation("wreath"), UsageError);
  CHECK_THROWS_AS(builtin_presentation("affine-wreath"), UsageError);
  // Algebra without a trace cannot feed affine-wreath.
  auto z2 = FrobeniusAlgebraData::cyclic_group(2, FieldTag::Q);
  z2.trace.reset();
  z2.dual.reset();
  CHECK_THROWS_AS(builtin_presentation("affine-wreath", z2), UsageError);
  CHECK_NOTHROW(builtin_presentation("wreath", z2));
  // Source text is available for display.
  CHECK(builtin_presentation_source("symmetric").find("relation braid") != std::string::npos);
}
