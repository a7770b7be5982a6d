#include "mcat/reference.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "mcat/linalg.hpp"

namespace mcat {

namespace {

bool all_zero(const Coordinates& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldValue& c) { return field_is_zero(c); });
}

void axpy(Coordinates& acc, const FieldValue& c, const Coordinates& row) {
  for (std::size_t n = 0; n < acc.size(); ++n)
    acc[n] = field_add(acc[n], field_mul(c, row[n]));
}

using Perm = std::vector<int>;

std::vector<Perm> all_permutations(int d) {
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Apply q first, then p.
Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    r[x] = p[static_cast<std::size_t>(q[x])];
  return r;
}

Perm transposition(int d, int o) {
  Perm t(static_cast<std::size_t>(d));
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[static_cast<std::size_t>(o)], t[static_cast<std::size_t>(o) + 1]);
  return t;
}

std::string one_line(const Perm& p) {
  std::string s;
  for (int x : p) s.push_back(static_cast<char>('0' + x));
  return s;
}

// Label tuples of length d over n labels, odometer order (last slot fastest).
std::vector<std::vector<int>> all_tuples(int n, int d) {
  std::vector<std::vector<int>> out = {std::vector<int>()};
  for (int slot = 0; slot < d; ++slot) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out)
      for (int l = 0; l < n; ++l) {
        auto e = t;
        e.push_back(l);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

Coordinates ReferenceAlgebra::zero() const { return Coordinates(dim(), FieldValue::zero(tag)); }

Coordinates ReferenceAlgebra::multiply(const Coordinates& x, const Coordinates& y) const {
  Coordinates out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (field_is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (field_is_zero(y[j])) continue;
      axpy(out, field_mul(x[i], y[j]), mul[i][j]);
    }
  }
  return out;
}

Coordinates ReferenceAlgebra::eval_word(const GenWord& word) const {
  Coordinates acc = unit;
  for (char letter : word) acc = multiply(acc, gen_images[static_cast<std::size_t>(letter)]);
  return acc;
}

Coordinates ReferenceAlgebra::eval_poly(const NCPolynomial& f) const {
  Coordinates out = zero();
  for (const auto& term : f.terms) axpy(out, term.second, eval_word(term.first));
  return out;
}

void ReferenceAlgebra::validate() const {
  const std::size_t n = dim();
  if (n == 0) throw Error("reference algebra must have a nonempty basis");
  if (mul.size() != n || unit.size() != n)
    throw Error("reference algebra tables do not match the basis size");
  for (const auto& row : mul) {
    if (row.size() != n) throw Error("reference algebra tables do not match the basis size");
    for (const auto& cell : row)
      if (cell.size() != n) throw Error("reference algebra tables do not match the basis size");
  }
  for (const auto& img : gen_images)
    if (img.size() != n) throw Error("reference generator image has the wrong dimension");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Coordinates lhs(n, FieldValue::zero(tag)), rhs(n, FieldValue::zero(tag));
        for (std::size_t m = 0; m < n; ++m) {
          if (!field_is_zero(mul[i][j][m])) axpy(lhs, mul[i][j][m], mul[m][k]);
          if (!field_is_zero(mul[j][k][m])) axpy(rhs, mul[j][k][m], mul[i][m]);
        }
        if (lhs != rhs)
          throw Error("reference algebra multiplication is not associative at (" +
                      basis_names[i] + ", " + basis_names[j] + ", " + basis_names[k] + ")");
      }

  for (std::size_t j = 0; j < n; ++j) {
    Coordinates left(n, FieldValue::zero(tag)), right(n, FieldValue::zero(tag));
    for (std::size_t i = 0; i < n; ++i) {
      if (field_is_zero(unit[i])) continue;
      axpy(left, unit[i], mul[i][j]);
      axpy(right, unit[i], mul[j][i]);
    }
    Coordinates basis_j(n, FieldValue::zero(tag));
    basis_j[j] = FieldValue::one(tag);
    if (left != basis_j || right != basis_j)
      throw Error("reference algebra unit is not a two-sided identity");
  }
}

HomomorphismReport check_homomorphism(const AlgebraPresentation& ap, const ReferenceAlgebra& ref) {
  ref.validate();
  if (ref.gen_images.size() != ap.generators.size())
    throw Error("reference model provides " + std::to_string(ref.gen_images.size()) +
                " generator images for " + std::to_string(ap.generators.size()) + " generators");

  HomomorphismReport rep;
  rep.relations_hold = true;
  for (const AlgebraRelation& r : ap.relations)
    if (!all_zero(ref.eval_poly(r.value))) {
      rep.relations_hold = false;
      rep.first_failure = r.name;
      break;
    }

  RowSpace span(ref.dim());
  std::vector<Coordinates> frontier;
  if (span.add(ref.unit)) frontier.push_back(ref.unit);
  while (!frontier.empty()) {
    std::vector<Coordinates> next;
    for (const Coordinates& f : frontier)
      for (const Coordinates& g : ref.gen_images) {
        Coordinates prod = ref.multiply(f, g);
        if (span.add(prod)) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  rep.image_dim = span.rank();
  rep.surjective = rep.image_dim == ref.dim();
  return rep;
}

IsomorphismReport verify_isomorphism(const AlgebraPresentation& ap, const GroebnerResult& gb,
                                     const ReferenceAlgebra& ref) {
  IsomorphismReport rep;
  rep.quotient = quotient_dimension(gb, static_cast<int>(ap.generators.size()));
  rep.hom = check_homomorphism(ap, ref);
  rep.dimensions_match = rep.quotient.finite && rep.quotient.dimension == ref.dim();
  rep.isomorphic = rep.dimensions_match && rep.hom.ok();
  return rep;
}

ReferenceAlgebra symmetric_reference(const AlgebraPresentation& ap) {
  const int d = static_cast<int>(ap.object.size());
  if (d < 1) throw Error("symmetric reference model needs at least one strand");
  const auto perms = all_permutations(d);
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;

  ReferenceAlgebra ref;
  ref.tag = ap.tag;
  for (const Perm& p : perms) ref.basis_names.push_back(one_line(p));
  const std::size_t n = perms.size();
  ref.mul.assign(n, std::vector<Coordinates>(n, Coordinates(n, FieldValue::zero(ap.tag))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ref.mul[i][j][index.at(perm_compose(perms[i], perms[j]))] = FieldValue::one(ap.tag);
  ref.unit = Coordinates(n, FieldValue::zero(ap.tag));
  ref.unit[index.at(perms[0])] = FieldValue::one(ap.tag);

  for (const AlgebraGenerator& g : ap.generators) {
    if (g.offset + 2 > d)
      throw Error("symmetric reference model: generator '" + g.name + "' does not fit");
    Coordinates img(n, FieldValue::zero(ap.tag));
    img[index.at(transposition(d, g.offset))] = FieldValue::one(ap.tag);
    ref.gen_images.push_back(std::move(img));
  }
  return ref;
}

ReferenceAlgebra wreath_reference(const MonoidalPresentation& p, const AlgebraPresentation& ap) {
  if (!p.algebra) throw Error("wreath reference model needs the presentation's algebra data");
  const FrobeniusAlgebraData& alg = *p.algebra;
  const int d = static_cast<int>(ap.object.size());
  if (d < 1) throw Error("wreath reference model needs at least one strand");
  const int nl = static_cast<int>(alg.dim());
  const auto perms = all_permutations(d);
  const auto tuples = all_tuples(nl, d);
  const std::size_t n = perms.size() * tuples.size();

  // index = tuple-major, permutation-minor.
  const auto basis_index = [&](std::size_t tuple, std::size_t perm) {
    return tuple * perms.size() + perm;
  };
  std::map<Perm, std::size_t> perm_index;
  for (std::size_t i = 0; i < perms.size(); ++i) perm_index[perms[i]] = i;
  std::map<std::vector<int>, std::size_t> tuple_index;
  for (std::size_t i = 0; i < tuples.size(); ++i) tuple_index[tuples[i]] = i;

  ReferenceAlgebra ref;
  ref.tag = ap.tag;
  ref.basis_names.resize(n);
  for (std::size_t t = 0; t < tuples.size(); ++t)
    for (std::size_t q = 0; q < perms.size(); ++q) {
      std::string name;
      for (int l : tuples[t]) {
        if (!name.empty()) name.push_back('.');
        name += alg.labels[static_cast<std::size_t>(l)];
      }
      ref.basis_names[basis_index(t, q)] = name + "|" + one_line(perms[q]);
    }

  // (a; p) * (b; q) = (a . p(b); p q): permute the right tuple by p, multiply
  // slotwise in A with the left tuple first, compose the permutations.
  ref.mul.assign(n, std::vector<Coordinates>(n, Coordinates(n, FieldValue::zero(ap.tag))));
  for (std::size_t ti = 0; ti < tuples.size(); ++ti)
    for (std::size_t pi = 0; pi < perms.size(); ++pi)
      for (std::size_t tj = 0; tj < tuples.size(); ++tj)
        for (std::size_t qj = 0; qj < perms.size(); ++qj) {
          const Perm& pp = perms[pi];
          std::vector<int> moved(static_cast<std::size_t>(d));
          for (int x = 0; x < d; ++x)
            moved[static_cast<std::size_t>(pp[static_cast<std::size_t>(x)])] =
                tuples[tj][static_cast<std::size_t>(x)];
          const std::size_t rperm = perm_index.at(perm_compose(pp, perms[qj]));
          Coordinates& cell = ref.mul[basis_index(ti, pi)][basis_index(tj, qj)];
          // Expand the slotwise products: coefficient of each result tuple is
          // the product of the structure constants in every slot.
          for (std::size_t tk = 0; tk < tuples.size(); ++tk) {
            FieldValue c = FieldValue::one(ap.tag);
            for (int m = 0; m < d && !field_is_zero(c); ++m)
              c = field_mul(c, alg.mul[static_cast<std::size_t>(tuples[ti][static_cast<std::size_t>(m)])]
                                      [static_cast<std::size_t>(moved[static_cast<std::size_t>(m)])]
                                      [static_cast<std::size_t>(tuples[tk][static_cast<std::size_t>(m)])]);
            if (!field_is_zero(c))
              cell[basis_index(tk, rperm)] = field_add(cell[basis_index(tk, rperm)], c);
          }
        }

  // Unit: the tensor power of A's unit at the identity permutation.
  ref.unit = Coordinates(n, FieldValue::zero(ap.tag));
  for (std::size_t tk = 0; tk < tuples.size(); ++tk) {
    FieldValue c = FieldValue::one(ap.tag);
    for (int m = 0; m < d && !field_is_zero(c); ++m)
      c = field_mul(c, alg.unit[static_cast<std::size_t>(tuples[tk][static_cast<std::size_t>(m)])]);
    ref.unit[basis_index(tk, 0)] = c;
  }

  for (const AlgebraGenerator& g : ap.generators) {
    const std::string& edge = p.edges[static_cast<std::size_t>(g.edge)].name;
    Coordinates img(n, FieldValue::zero(ap.tag));
    if (edge == "s") {
      const std::size_t t = perm_index.at(transposition(d, g.offset));
      for (std::size_t tk = 0; tk < tuples.size(); ++tk) {
        FieldValue c = FieldValue::one(ap.tag);
        for (int m = 0; m < d && !field_is_zero(c); ++m)
          c = field_mul(c, alg.unit[static_cast<std::size_t>(tuples[tk][static_cast<std::size_t>(m)])]);
        img[basis_index(tk, t)] = c;
      }
    } else if (edge.rfind("u_", 0) == 0) {
      const int label = alg.label_index(edge.substr(2));
      if (label < 0) throw Error("wreath reference model: unknown token label in '" + edge + "'");
      for (std::size_t tk = 0; tk < tuples.size(); ++tk) {
        if (tuples[tk][static_cast<std::size_t>(g.offset)] != label) continue;
        FieldValue c = FieldValue::one(ap.tag);
        for (int m = 0; m < d && !field_is_zero(c); ++m) {
          if (m == g.offset) continue;
          c = field_mul(c, alg.unit[static_cast<std::size_t>(tuples[tk][static_cast<std::size_t>(m)])]);
        }
        img[basis_index(tk, 0)] = c;
      }
    } else {
      throw Error("wreath reference model has no image for edge '" + edge + "'");
    }
    ref.gen_images.push_back(std::move(img));
  }
  return ref;
}

}  // namespace mcat
