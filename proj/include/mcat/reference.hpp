// Reference models: concrete finite-dimensional algebras given by structure
// constants, used to certify that a presented endomorphism algebra is the
// algebra it is expected to be. A surjective homomorphism between algebras of
// the same finite dimension is an isomorphism, so the verification combines
// three checks: the defining relations vanish on the chosen images, the
// images generate the reference algebra, and the Groebner-counted quotient
// dimension equals the reference dimension.
#pragma once

#include <string>
#include <vector>

#include "mcat/linearize.hpp"
#include "mcat/ncalg.hpp"

namespace mcat {

using Coordinates = std::vector<FieldValue>;

// An algebra with a distinguished basis. The product convention matches
// word evaluation for NCPolynomial: mul[i][j] is the element obtained by
// applying basis j first and basis i second.
struct ReferenceAlgebra {
  FieldTag tag = FieldTag::Q;
  std::vector<std::string> basis_names;
  // mul[i][j][k]: coefficient of basis k in (basis i) * (basis j).
  std::vector<std::vector<Coordinates>> mul;
  Coordinates unit;
  // gen_images[g]: the element representing generator g of the presented
  // algebra, indexed like AlgebraPresentation::generators.
  std::vector<Coordinates> gen_images;

  std::size_t dim() const { return basis_names.size(); }

  // Checks table shapes, associativity over all basis triples, and that unit
  // is a two-sided identity. Throws Error on failure.
  void validate() const;

  Coordinates zero() const;
  Coordinates multiply(const Coordinates& x, const Coordinates& y) const;
  // unit * images(letters), left to right; the leftmost letter acts last.
  Coordinates eval_word(const GenWord& word) const;
  Coordinates eval_poly(const NCPolynomial& f) const;
};

// Outcome of checking that generator images define a homomorphism from the
// presented algebra onto the reference algebra.
struct HomomorphismReport {
  bool relations_hold = false;
  std::string first_failure;   // name of the first violated relation
  std::size_t image_dim = 0;   // dimension of the subalgebra the images generate
  bool surjective = false;
  bool ok() const { return relations_hold && surjective; }
};

// Validates ref, evaluates every relation of ap on the images, and closes
// the span of the unit under right multiplication by the images. Throws
// Error if the generator counts disagree.
HomomorphismReport check_homomorphism(const AlgebraPresentation& ap, const ReferenceAlgebra& ref);

struct IsomorphismReport {
  DimensionResult quotient;  // normal-word count of the presented algebra
  HomomorphismReport hom;
  bool dimensions_match = false;
  bool isomorphic = false;   // relations hold, surjective, equal finite dims
};

// Certifies ap (completed as gb, with ap.generators.size() generators) to be
// isomorphic to ref.
IsomorphismReport verify_isomorphism(const AlgebraPresentation& ap, const GroebnerResult& gb,
                                     const ReferenceAlgebra& ref);

// The group algebra of the symmetric group on the strands of ap.object, with
// generator g mapped to the adjacent transposition at its offset. Basis
// elements are permutations in one-line notation; products compose right
// factor first. Requires every generator's edge to span two strands.
ReferenceAlgebra symmetric_reference(const AlgebraPresentation& ap);

// The wreath product A^{(x) d} x| kS_d for the token algebra A attached to p
// (p.algebra must be present and validated): basis (label tuple, permutation),
// crossings map to bare transpositions, the token for label b at offset o to
// b placed in tensor slot o. Requires ap to come from a wreath presentation
// whose edges are the crossing "s" and the tokens "u_<label>".
ReferenceAlgebra wreath_reference(const MonoidalPresentation& p, const AlgebraPresentation& ap);

}  // namespace mcat
