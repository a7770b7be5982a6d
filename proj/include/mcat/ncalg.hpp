// Finitely presented associative algebras: words in generators, linear
// combinations, degree-truncated two-sided Groebner bases (overlap/ambiguity
// completion), and normal-word counting for quotient dimensions.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mcat/field.hpp"

namespace mcat {

// A word in the generators, one char per generator index. The generator
// precedence is the index order, so plain string comparison is the
// lexicographic part of the monomial order. Words read left to right in
// algebra notation: the leftmost letter is applied last under composition.
using GenWord = std::string;

// Degree-lexicographic order: shorter words first, ties by index-lex.
bool deglex_less(const GenWord& a, const GenWord& b);

// Nonzero terms sorted descending in deglex order (leading term first).
struct NCPolynomial {
  std::vector<std::pair<GenWord, FieldValue>> terms;
  bool operator==(const NCPolynomial&) const = default;

  bool is_zero() const { return terms.empty(); }
  const GenWord& leading_word() const;     // throws Error on zero
  const FieldValue& leading_coeff() const; // throws Error on zero
  int degree() const;                      // longest word; -1 for zero
};

// Sorts, merges duplicate words, drops zero coefficients.
NCPolynomial nc_make(std::vector<std::pair<GenWord, FieldValue>> terms);
NCPolynomial nc_monomial(GenWord w, FieldValue c);
NCPolynomial nc_add(const NCPolynomial& f, const NCPolynomial& g);
NCPolynomial nc_sub(const NCPolynomial& f, const NCPolynomial& g);
NCPolynomial nc_scale(const FieldValue& c, const NCPolynomial& f);
NCPolynomial nc_mul_word(const GenWord& u, const NCPolynomial& f, const GenWord& v);  // u f v
NCPolynomial nc_mul(const NCPolynomial& f, const NCPolynomial& g);
NCPolynomial nc_monic(const NCPolynomial& f);  // zero stays zero

// Total reduction modulo monic polynomials: rewrites every occurrence of a
// leading word (first matching basis element, leftmost occurrence) until no
// term contains one.
NCPolynomial nc_reduce(const NCPolynomial& f, const std::vector<NCPolynomial>& basis);

// A degree-truncated two-sided Groebner basis. All overlap ambiguities whose
// overlap word has length at most max_degree resolve to zero against `basis`,
// so reduction to normal form is well defined for elements of degree at most
// max_degree. `truncated` records whether any ambiguity beyond the bound was
// set aside; when false the basis is a full Groebner basis.
struct GroebnerResult {
  std::vector<NCPolynomial> basis;  // monic, inter-reduced, leading words ascending
  int max_degree = 0;
  int verified_degree = 0;  // == max_degree: the closing sweep re-checked all
                            // in-bound ambiguities against the final basis
  bool truncated = false;
};

// Buchberger/Mora completion with the deglex order, processing ambiguities in
// (degree, overlap word, ids) order. The basis is kept fully inter-reduced,
// so only overlap ambiguities (proper suffix-prefix overlaps, including
// self-overlaps) arise. Throws Error if the internal work budget is exceeded.
GroebnerResult nc_complete(const std::vector<NCPolynomial>& input, int max_degree);

// counts[k] = number of words of length k (over n_generators letters) that
// avoid every basis leading word as a subword, for k = 0..max_degree.
std::vector<std::size_t> normal_word_counts(const GroebnerResult& gb, int n_generators,
                                            int max_degree);

// Dimension of the quotient algebra read off from normal-word counts.
// The count sequence certifies finiteness when it hits zero at some degree
// k <= max_degree: normal words are closed under subwords, so no longer
// normal word can exist either.
struct DimensionResult {
  bool finite = false;
  std::size_t dimension = 0;            // total normal words below zero_at (when finite)
  int zero_at = -1;                     // first length with zero normal words
  std::vector<std::size_t> counts;      // per-length counts 0..max_degree
  std::vector<std::size_t> cumulative;  // partial sums of counts
};

DimensionResult quotient_dimension(const GroebnerResult& gb, int n_generators);

// Product in the quotient: reduces f*g to normal form. Throws Error when the
// raw product degree exceeds the verified bound, where reduction against a
// truncated basis would be unsound.
NCPolynomial quotient_mul(const GroebnerResult& gb, const NCPolynomial& f,
                          const NCPolynomial& g);

}  // namespace mcat
