// The free linear monoidal category on a monoidal quiver. Morphisms are
// linear combinations of paths whose steps are whiskered generating edges;
// tensor products are expanded into compositions of whiskered steps, and the
// interchange law is applied by a left-greedy normalization.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mcat/presentation.hpp"

namespace mcat {

// A generating edge whiskered by identity words: left . edge . right, acting
// on the strand interval starting at offset |left|.
struct Triple {
  int edge;
  ObjectWord left;
  ObjectWord right;
  bool operator==(const Triple&) const = default;
};

// Canonical step order: (offset, edge index, right length, left word, right
// word). A strict total order used to sort morphism terms.
bool triple_less(const Triple& a, const Triple& b);

// A composable sequence of steps in application order: steps[0] is applied
// first. The empty path is an identity.
struct Path {
  ObjectWord dom;
  std::vector<Triple> steps;
  bool operator==(const Path&) const = default;
};

// Orders by step count, then steps lexicographically, then domain.
bool path_less(const Path& a, const Path& b);

ObjectWord triple_dom(const MonoidalPresentation& p, const Triple& t);
ObjectWord triple_cod(const MonoidalPresentation& p, const Triple& t);
ObjectWord path_cod(const MonoidalPresentation& p, const Path& path);

// Checks that consecutive steps chain from dom; throws Error if not.
void check_path(const MonoidalPresentation& p, const Path& path);

// A finite linear combination of parallel paths. Terms are sorted by
// path_less, have nonzero coefficients, and all share dom -> cod, so equal
// morphisms compare equal structurally.
struct Morphism {
  ObjectWord dom;
  ObjectWord cod;
  std::vector<std::pair<Path, FieldValue>> terms;
  bool operator==(const Morphism&) const = default;
};

// Sorts, merges duplicate paths, drops zero coefficients.
Morphism make_morphism(ObjectWord dom, ObjectWord cod,
                       std::vector<std::pair<Path, FieldValue>> terms);

Morphism zero_morphism(const MonoidalPresentation& p, ObjectWord dom, ObjectWord cod);
Morphism identity(const MonoidalPresentation& p, const ObjectWord& w);

// The one-term morphism for a path (coefficient 1).
Morphism from_path(const MonoidalPresentation& p, Path path);

// f o g: g is applied first. Throws Error unless g.cod == f.dom.
Morphism compose(const MonoidalPresentation& p, const Morphism& f, const Morphism& g);

Morphism add(const MonoidalPresentation& p, const Morphism& f, const Morphism& g);
Morphism sub(const MonoidalPresentation& p, const Morphism& f, const Morphism& g);
Morphism scale(const FieldValue& c, const Morphism& f);

// 1_a (x) f  and  f (x) 1_a: shift every step without touching its order.
Morphism whisker_left(const MonoidalPresentation& p, const ObjectWord& a, const Morphism& f);
Morphism whisker_right(const MonoidalPresentation& p, const Morphism& f, const ObjectWord& a);

// f (x) g expanded as (f (x) 1) o (1 (x) g): the right factor's steps are
// applied first. No interchange normalization is performed.
Morphism tensor(const MonoidalPresentation& p, const Morphism& f, const Morphism& g);

// Interchange swap of an adjacent step pair (first applied, then second):
// when the second step acts strictly left of the first (its strands end at
// or before the first step's offset), returns the equal pair with the left
// action applied first. Returns nullopt when the pair is already in order,
// overlaps, or is the one ambiguous case of two zero-width steps at the same
// offset (which would swap forever).
std::optional<std::pair<Triple, Triple>> interchange_swap(const MonoidalPresentation& p,
                                                          const Triple& first,
                                                          const Triple& second);

// Left-greedy interchange normal form: repeatedly applies interchange_swap
// until no adjacent pair swaps, term by term, then re-merges terms. Throws
// Error if the number of swaps exceeds a budget (possible only for quivers
// with width-changing edges, where termination is not guaranteed).
Morphism normal_form(const MonoidalPresentation& p, const Morphism& f);

// Compiles a layered expression into a raw morphism (no normalization).
Morphism from_expr(const MonoidalPresentation& p, const MorphismExpr& expr);

// 1_a (x) r (x) 1_b for a relation value r.
Morphism tensor_ideal_element(const MonoidalPresentation& p, const ObjectWord& a,
                              const Morphism& r, const ObjectWord& b);

// after o (1_a (x) r (x) 1_b) o before.
Morphism ideal_element(const MonoidalPresentation& p, const Morphism& after, const ObjectWord& a,
                       const Morphism& r, const ObjectWord& b, const Morphism& before);

// All paths starting at dom with at most max_steps steps (any codomain),
// in depth-first order; extensions are tried by (edge index, offset). The
// empty path is included.
std::vector<Path> enumerate_paths(const MonoidalPresentation& p, const ObjectWord& dom,
                                  int max_steps);

// Spanning-set computation for a hom-space of the presented linear monoidal
// category, truncated by path length.
struct SpanReport {
  std::vector<Path> basis;   // distinct normal-form paths dom -> cod, sorted
  std::size_t path_count = 0;      // == basis.size()
  std::size_t instance_count = 0;  // relation instances that fit the bounds
  std::size_t rank = 0;            // rank of the span of those instances
  std::size_t dim = 0;             // path_count - rank
  // Canonical reduced rows of the instance span, in basis coordinates.
  std::vector<std::vector<FieldValue>> ideal_rows;
};

// Enumerates normal-form paths dom -> cod with at most max_steps steps, and
// every relation instance  f2 o (1_x (x) r (x) 1_y) o f1  whose framing paths
// f1, f2 have at most framing_bound steps and whose every term stays within
// max_steps steps; reduces the instances to a canonical row space. The
// quotient dimension path_count - rank is an upper-bound estimate for the
// hom-space dimension that is exact once max_steps is large enough.
SpanReport hom_span_quotient_dim(const MonoidalPresentation& p, const ObjectWord& dom,
                                 const ObjectWord& cod, int max_steps, int framing_bound);

// "1_{w}" for the empty path, else steps "(left | edge | right)" in applied
// order joined by " ; "; empty frame words print as "-".
std::string format_path(const MonoidalPresentation& p, const Path& path);

// Sum of formatted paths with coefficients; the zero morphism prints as "0".
std::string format_morphism(const MonoidalPresentation& p, const Morphism& f);

}  // namespace mcat
