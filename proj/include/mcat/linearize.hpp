// Compilation of a monoidal presentation into a linear-category presentation:
// the free linear monoidal category restricted to object words of bounded
// length is an ordinary linear category presented by whiskered generating
// edges, interchange commutation instances, and whiskered copies of the
// original relations. For a word of endomorphism type this further collapses
// to an associative-algebra presentation suitable for the Groebner engine.
#pragma once

#include <string>
#include <vector>

#include "mcat/freemon.hpp"
#include "mcat/ncalg.hpp"
#include "mcat/presentation.hpp"

namespace mcat {

// One instance of the interchange law between two disjoint whiskered edges:
// edge_low acts at offset |left|, edge_high at offset |left|+|dom(edge_low)|
// +|gap|. The value is (high applied first, then low) minus (low applied
// first, then high); both sides share endpoints.
struct InterchangeInstance {
  int edge_low = 0;
  int edge_high = 0;
  ObjectWord left;
  ObjectWord gap;
  ObjectWord right;
  Morphism value;
};

// A relation of the original presentation whiskered into a fixed frame:
// 1_left (x) r (x) 1_right, kept as a raw (un-normalized) combination of
// paths. name is "<relation>[<left>|<right>]" with "-" for an empty word.
struct WhiskeredRelation {
  std::string name;
  int source = 0;  // index into the monoidal presentation's relations
  ObjectWord left;
  ObjectWord right;
  Morphism value;
};

// Presentation of the length-truncated linear category: every generator and
// every relation term stays on object words of length at most max_len.
struct LinearPresentation {
  FieldTag tag = FieldTag::Q;
  int max_len = 0;
  std::vector<Triple> generators;
  std::vector<InterchangeInstance> interchange;
  std::vector<WhiskeredRelation> relations;
};

// Enumerates the truncated linear presentation. Generators are sorted by
// (edge, |left|, |right|, left, right); interchange instances by (edge_low,
// edge_high, |left|, |gap|, |right|, then the words); whiskered relations
// follow the source-relation order with frames sorted by (|left|, |right|,
// left, right). Throws Error if max_len is negative.
LinearPresentation linearize(const MonoidalPresentation& p, int max_len);

// A generator of the endomorphism algebra of a fixed object word: an edge
// acting at a fixed offset. Named "<edge>[<offset>]".
struct AlgebraGenerator {
  std::string name;
  int edge = 0;
  int offset = 0;
};

struct AlgebraRelation {
  std::string name;
  NCPolynomial value;
};

// Presentation of End(object) in the presented linear monoidal category as
// an associative algebra: free on the placed-edge generators modulo the
// whiskered relations and the interchange commutators. Words follow the
// composition convention of NCPolynomial: the leftmost letter is applied
// last.
struct AlgebraPresentation {
  FieldTag tag = FieldTag::Q;
  ObjectWord object;
  std::vector<AlgebraGenerator> generators;
  std::vector<AlgebraRelation> relations;
  // A degree bound sufficient for the builtin families when none is given.
  int default_max_degree = 0;
};

// Extracts the endomorphism-algebra presentation of the given object word.
// Requires every edge of p to be an endomorphism (equal endpoints); throws
// Error otherwise, and when more than 127 generators would be needed.
AlgebraPresentation end_algebra(const MonoidalPresentation& p, const ObjectWord& object);

// The input polynomials for the Groebner engine: every relation's value.
std::vector<NCPolynomial> relation_values(const AlgebraPresentation& ap);

// Formats a word in the algebra's generators ("s[0] s[1]", empty word "1").
std::string format_algebra_word(const AlgebraPresentation& ap, const GenWord& word);

// Sum of formatted words with coefficients; the zero polynomial prints as "0".
std::string format_algebra_poly(const AlgebraPresentation& ap, const NCPolynomial& poly);

}  // namespace mcat
