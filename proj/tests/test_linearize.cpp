// Unit tests for the linear-category compilation and the endomorphism-algebra
// extraction.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frozen.hpp"
#include "mcat/linearize.hpp"

using namespace mcat;

namespace {

ObjectWord w(std::initializer_list<int> idx) {
  ObjectWord out;
  for (int i : idx) out.push_back(static_cast<char>(i));
  return out;
}

GenWord gw(std::initializer_list<int> idx) {
  GenWord out;
  for (int i : idx) out.push_back(static_cast<char>(i));
  return out;
}

NCPolynomial mono(std::initializer_list<int> word, long c, FieldTag tag = FieldTag::Q) {
  return nc_monomial(gw(word), FieldValue::integer(tag, c));
}

MonoidalPresentation zero_width_pair() {
  return parse_presentation(
      "coefficients Q\n"
      "object a\n"
      "morphism s : a a -> a a\n"
      "morphism z : - -> -\n"
      "morphism y : - -> -\n");
}

// An interchange instance between two zero-width edges at the same position
// cannot be oriented by the interchange normal form (the swap would cycle);
// every other instance must cancel under normalization.
bool degenerate_instance(const MonoidalPresentation& p, const InterchangeInstance& inst) {
  const GeneratorEdge& a = p.edges[inst.edge_low];
  const GeneratorEdge& b = p.edges[inst.edge_high];
  return a.dom.empty() && a.cod.empty() && b.dom.empty() && b.cod.empty() && inst.gap.empty();
}

}  // namespace

TEST_CASE("linearize: truncated symmetric presentation has the expected sizes") {
  MonoidalPresentation p = builtin_presentation("symmetric");
  for (const auto& fc : frozen::linearize_sym) {
    LinearPresentation lp = linearize(p, fc.max_len);
    CHECK(lp.max_len == fc.max_len);
    CHECK(lp.generators.size() == fc.generators);
    CHECK(lp.interchange.size() == fc.interchange);
    CHECK(lp.relations.size() == fc.whiskered);
  }
  CHECK_THROWS_AS(linearize(p, -1), Error);
}

TEST_CASE("linearize: generator and frame enumeration order") {
  MonoidalPresentation p = builtin_presentation("symmetric");
  LinearPresentation lp = linearize(p, 3);
  REQUIRE(lp.generators.size() == 3);
  CHECK(lp.generators[0] == Triple{0, {}, {}});
  CHECK(lp.generators[1] == Triple{0, {}, w({0})});
  CHECK(lp.generators[2] == Triple{0, w({0}), {}});

  REQUIRE(lp.relations.size() == 4);
  CHECK(lp.relations[0].name == "involution[-|-]");
  CHECK(lp.relations[1].name == "involution[-|a]");
  CHECK(lp.relations[2].name == "involution[a|-]");
  CHECK(lp.relations[3].name == "braid[-|-]");
  CHECK(lp.relations[3].source == 1);
}

TEST_CASE("linearize: the single interchange instance at length four") {
  MonoidalPresentation p = builtin_presentation("symmetric");
  LinearPresentation lp = linearize(p, 4);
  REQUIRE(lp.interchange.size() == 1);
  const InterchangeInstance& inst = lp.interchange[0];
  CHECK(inst.edge_low == 0);
  CHECK(inst.edge_high == 0);
  CHECK(inst.left.empty());
  CHECK(inst.gap.empty());
  CHECK(inst.right.empty());

  const ObjectWord aaaa = w({0, 0, 0, 0});
  REQUIRE(inst.value.terms.size() == 2);
  // Sorted term order puts the low-offset-first path (the negated side) first.
  Path low_first{aaaa, {Triple{0, {}, w({0, 0})}, Triple{0, w({0, 0}), {}}}};
  Path high_first{aaaa, {Triple{0, w({0, 0}), {}}, Triple{0, {}, w({0, 0})}}};
  CHECK(inst.value.terms[0].first == low_first);
  CHECK(inst.value.terms[0].second == FieldValue::integer(FieldTag::Q, -1));
  CHECK(inst.value.terms[1].first == high_first);
  CHECK(inst.value.terms[1].second == FieldValue::one(FieldTag::Q));
}

TEST_CASE("linearize: interchange instances cancel under normalization") {
  for (const char* name : {"symmetric", "braid", "daha"}) {
    MonoidalPresentation p = builtin_presentation(name);
    LinearPresentation lp = linearize(p, 4);
    for (const auto& inst : lp.interchange)
      CHECK(normal_form(p, inst.value).terms.empty());
  }

  // Zero-width edges: mixed pairs still cancel; the same-position pair of two
  // distinct zero-width edges is emitted once and cannot be oriented.
  MonoidalPresentation p = zero_width_pair();
  LinearPresentation lp = linearize(p, 2);
  std::size_t degenerate = 0;
  for (const auto& inst : lp.interchange) {
    if (degenerate_instance(p, inst)) {
      ++degenerate;
      CHECK(inst.edge_low < inst.edge_high);
      CHECK(normal_form(p, inst.value).terms.size() == 2);
    } else {
      CHECK(normal_form(p, inst.value).terms.empty());
    }
  }
  // One z/y pair per position word of length <= 2: |-, a, aa| = 1 + 1 + ... ;
  // frames (left, right) with |left|+|right| <= 2 give 6 placements.
  CHECK(degenerate == 6);
}

TEST_CASE("end-algebra: generator and relation counts for the builtins") {
  MonoidalPresentation sym = builtin_presentation("symmetric");
  for (int d = 0; d <= 4; ++d) {
    AlgebraPresentation ap = end_algebra(sym, ObjectWord(static_cast<std::size_t>(d), '\0'));
    CHECK(ap.generators.size() == frozen::endalg_sym_gens[static_cast<std::size_t>(d)]);
    CHECK(ap.relations.size() == frozen::endalg_sym_rels[static_cast<std::size_t>(d)]);
  }

  MonoidalPresentation braid = builtin_presentation("braid");
  AlgebraPresentation b2 = end_algebra(braid, w({0, 0}));
  CHECK(b2.generators.size() == frozen::endalg_braid_d2_gens);
  CHECK(b2.relations.size() == frozen::endalg_braid_d2_rels);
  AlgebraPresentation b3 = end_algebra(braid, w({0, 0, 0}));
  CHECK(b3.generators.size() == frozen::endalg_braid_d3_gens);
  CHECK(b3.relations.size() == frozen::endalg_braid_d3_rels);

  AlgebraPresentation w2 =
      end_algebra(builtin_presentation("wreath", FrobeniusAlgebraData::cyclic_group(2, FieldTag::Q)),
                  w({0, 0}));
  CHECK(w2.generators.size() == frozen::endalg_wreath_d2_gens);
  CHECK(w2.relations.size() == frozen::endalg_wreath_d2_rels);

  AlgebraPresentation h2 = end_algebra(builtin_presentation("daha"), w({0, 0}));
  CHECK(h2.generators.size() == frozen::endalg_daha_d2_gens);
  CHECK(h2.relations.size() == frozen::endalg_daha_d2_rels);

  AlgebraPresentation a2 = end_algebra(
      builtin_presentation("affine-wreath", FrobeniusAlgebraData::cyclic_group(2, FieldTag::Q)),
      w({0, 0}));
  CHECK(a2.generators.size() == frozen::endalg_awreath_d2_gens);
  CHECK(a2.relations.size() == frozen::endalg_awreath_d2_rels);
}

TEST_CASE("end-algebra: symmetric on three strands, named and spelled out") {
  AlgebraPresentation ap = end_algebra(builtin_presentation("symmetric"), w({0, 0, 0}));
  REQUIRE(ap.generators.size() == 2);
  CHECK(ap.generators[0].name == "s[0]");
  CHECK(ap.generators[1].name == "s[1]");
  CHECK(ap.generators[1].offset == 1);

  REQUIRE(ap.relations.size() == 3);
  CHECK(ap.relations[0].name == "involution[-|a]");
  CHECK(ap.relations[0].value == nc_sub(mono({0, 0}, 1), mono({}, 1)));
  CHECK(ap.relations[1].name == "involution[a|-]");
  CHECK(ap.relations[1].value == nc_sub(mono({1, 1}, 1), mono({}, 1)));
  CHECK(ap.relations[2].name == "braid[-|-]");
  CHECK(ap.relations[2].value == nc_sub(mono({0, 1, 0}, 1), mono({1, 0, 1}, 1)));
  CHECK(ap.default_max_degree == 18);  // 2 * 3 strands * degree-3 relation
}

TEST_CASE("end-algebra: degenerate affine Hecke on two strands") {
  AlgebraPresentation ap = end_algebra(builtin_presentation("daha"), w({0, 0}));
  REQUIRE(ap.generators.size() == 3);
  CHECK(ap.generators[0].name == "s[0]");
  CHECK(ap.generators[1].name == "t[0]");
  CHECK(ap.generators[2].name == "t[1]");

  REQUIRE(ap.relations.size() == 3);
  CHECK(ap.relations[0].value == nc_sub(mono({0, 0}, 1), mono({}, 1)));
  // Dot slide: t[0] s - s t[1] - 1.
  CHECK(ap.relations[1].name == "dot_slide[-|-]");
  CHECK(ap.relations[1].value ==
        nc_sub(nc_sub(mono({1, 0}, 1), mono({0, 2}, 1)), mono({}, 1)));
  CHECK(ap.relations[2].name == "interchange[t[0]|t[1]]");
  CHECK(ap.relations[2].value == nc_sub(mono({1, 2}, 1), mono({2, 1}, 1)));
  CHECK(ap.default_max_degree == 8);
}

TEST_CASE("end-algebra: Hecke skein keeps its Q(q) scalar") {
  AlgebraPresentation ap = end_algebra(builtin_presentation("hecke"), w({0, 0}));
  CHECK(ap.tag == FieldTag::Qq);
  REQUIRE(ap.generators.size() == 2);
  CHECK(ap.generators[0].name == "sp[0]");
  CHECK(ap.generators[1].name == "sm[0]");
  const auto c = parse_field_value("q - 1/q", FieldTag::Qq);
  bool found = false;
  for (const auto& r : ap.relations)
    if (r.name == "skein[-|-]") {
      found = true;
      CHECK(r.value == nc_sub(nc_sub(mono({0}, 1, FieldTag::Qq), mono({1}, 1, FieldTag::Qq)),
                              nc_monomial({}, c)));
    }
  CHECK(found);
}

TEST_CASE("end-algebra: zero-width edges commute past everything disjoint") {
  MonoidalPresentation p = zero_width_pair();
  AlgebraPresentation ap = end_algebra(p, w({0, 0}));
  // s[0]; z[0], z[1], z[2]; y[0], y[1], y[2].
  REQUIRE(ap.generators.size() == 7);
  CHECK(ap.generators[0].name == "s[0]");
  CHECK(ap.generators[3].name == "z[2]");
  CHECK(ap.generators[4].name == "y[0]");

  // All relations are commutators; a zero-width generator at position 1 sits
  // inside the crossing's strands and gets no relation with it.
  for (const auto& r : ap.relations) CHECK(r.name.rfind("interchange[", 0) == 0);
  std::size_t with_crossing = 0, same_position = 0;
  for (const auto& r : ap.relations) {
    if (r.name.find("s[0]") != std::string::npos) ++with_crossing;
    if (r.name.find("z[1]|y[1]") != std::string::npos ||
        r.name.find("y[1]|z[1]") != std::string::npos)
      ++same_position;
  }
  // z[0]|s[0], y[0]|s[0], s[0]|z[2], s[0]|y[2].
  CHECK(with_crossing == 4);
  // The same-position pair appears once, oriented by edge order (z before y).
  CHECK(same_position == 1);
  bool oriented = false;
  for (const auto& r : ap.relations)
    if (r.name == "interchange[z[1]|y[1]]") oriented = true;
  CHECK(oriented);
}

TEST_CASE("end-algebra: mini pipeline reproduces the group-algebra dimension") {
  AlgebraPresentation ap = end_algebra(builtin_presentation("symmetric"), w({0, 0, 0}));
  GroebnerResult gb = nc_complete(relation_values(ap), 6);
  DimensionResult dim = quotient_dimension(gb, static_cast<int>(ap.generators.size()));
  CHECK(dim.finite);
  CHECK(dim.dimension == frozen::sym_dims[3]);
}

TEST_CASE("end-algebra: rejects non-endomorphism edges and generator overflow") {
  MonoidalPresentation p = parse_presentation(
      "coefficients Q\n"
      "object a\n"
      "morphism c : - -> a a\n");
  CHECK_THROWS_WITH_AS(end_algebra(p, w({0, 0})),
                       "end-algebra extraction requires every generating morphism to be an "
                       "endomorphism; 'c' is not",
                       Error);

  MonoidalPresentation q = parse_presentation(
      "coefficients Q\n"
      "object a\n"
      "morphism u : a -> a\n");
  CHECK_THROWS_AS(end_algebra(q, ObjectWord(200, '\0')), Error);
  CHECK(end_algebra(q, ObjectWord(127, '\0')).generators.size() == 127);
}
