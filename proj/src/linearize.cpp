#include "mcat/linearize.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace mcat {

namespace {

// Object words grouped by exact length, lexicographic (by object index)
// within each length.
std::vector<std::vector<ObjectWord>> words_by_length(int n_objects, int max_len) {
  std::vector<std::vector<ObjectWord>> out(static_cast<std::size_t>(max_len) + 1);
  out[0] = {ObjectWord{}};
  for (int len = 1; len <= max_len; ++len)
    for (const ObjectWord& w : out[len - 1])
      for (int c = 0; c < n_objects; ++c) {
        ObjectWord e = w;
        e.push_back(static_cast<char>(c));
        out[len].push_back(std::move(e));
      }
  return out;
}

int edge_width(const GeneratorEdge& e) {
  return static_cast<int>(std::max(e.dom.size(), e.cod.size()));
}

// True when every object word the path passes through has length <= max_len.
bool path_within(const MonoidalPresentation& p, const Path& path, int max_len) {
  if (static_cast<int>(path.dom.size()) > max_len) return false;
  for (const Triple& t : path.steps) {
    const GeneratorEdge& e = p.edges[t.edge];
    const std::size_t frame = t.left.size() + t.right.size();
    if (static_cast<int>(frame + e.dom.size()) > max_len) return false;
    if (static_cast<int>(frame + e.cod.size()) > max_len) return false;
  }
  return true;
}

bool zero_width(const GeneratorEdge& e) { return e.dom.empty() && e.cod.empty(); }

}  // namespace

LinearPresentation linearize(const MonoidalPresentation& p, int max_len) {
  if (max_len < 0) throw Error("truncation length must be nonnegative");
  LinearPresentation out;
  out.tag = p.tag;
  out.max_len = max_len;
  const auto words = words_by_length(static_cast<int>(p.objects.size()), max_len);
  const int n_edges = static_cast<int>(p.edges.size());

  for (int e = 0; e < n_edges; ++e) {
    const int budget = max_len - edge_width(p.edges[e]);
    for (int lv = 0; lv <= budget; ++lv)
      for (int lw = 0; lv + lw <= budget; ++lw)
        for (const ObjectWord& v : words[lv])
          for (const ObjectWord& w : words[lw]) out.generators.push_back(Triple{e, v, w});
  }

  for (int ei = 0; ei < n_edges; ++ei) {
    const GeneratorEdge& a = p.edges[ei];
    for (int ej = 0; ej < n_edges; ++ej) {
      const GeneratorEdge& b = p.edges[ej];
      const int budget = max_len - edge_width(a) - edge_width(b);
      // When both edges have empty endpoints and no gap separates them, the
      // two orientations give the same instance up to sign (and ei == ej
      // vanishes): keep only ei < ej.
      const bool degenerate = zero_width(a) && zero_width(b);
      for (int lv = 0; lv <= budget; ++lv)
        for (int lg = 0; lv + lg <= budget; ++lg) {
          if (degenerate && lg == 0 && ei >= ej) continue;
          for (int lw = 0; lv + lg + lw <= budget; ++lw)
            for (const ObjectWord& v : words[lv])
              for (const ObjectWord& g : words[lg])
                for (const ObjectWord& w : words[lw]) {
                  InterchangeInstance inst;
                  inst.edge_low = ei;
                  inst.edge_high = ej;
                  inst.left = v;
                  inst.gap = g;
                  inst.right = w;
                  const ObjectWord dom = v + a.dom + g + b.dom + w;
                  const ObjectWord cod = v + a.cod + g + b.cod + w;
                  Path high_first{dom, {Triple{ej, v + a.dom + g, w}, Triple{ei, v, g + b.cod + w}}};
                  Path low_first{dom, {Triple{ei, v, g + b.dom + w}, Triple{ej, v + a.cod + g, w}}};
                  inst.value =
                      make_morphism(dom, cod, {{std::move(high_first), FieldValue::one(p.tag)},
                                               {std::move(low_first), FieldValue::integer(p.tag, -1)}});
                  out.interchange.push_back(std::move(inst));
                }
        }
    }
  }

  for (int r = 0; r < static_cast<int>(p.relations.size()); ++r) {
    const NamedRelation& rel = p.relations[r];
    const Morphism raw = from_expr(p, rel.expr);
    for (int la = 0; la <= max_len; ++la)
      for (int lb = 0; la + lb <= max_len; ++lb)
        for (const ObjectWord& a : words[la])
          for (const ObjectWord& b : words[lb]) {
            Morphism framed = tensor_ideal_element(p, a, raw, b);
            if (static_cast<int>(framed.dom.size()) > max_len ||
                static_cast<int>(framed.cod.size()) > max_len)
              continue;
            bool inside = true;
            for (const auto& term : framed.terms)
              if (!path_within(p, term.first, max_len)) {
                inside = false;
                break;
              }
            if (!inside) continue;
            WhiskeredRelation wr;
            wr.name = rel.name + "[" + format_object_word(p, a) + "|" +
                      format_object_word(p, b) + "]";
            wr.source = r;
            wr.left = a;
            wr.right = b;
            wr.value = std::move(framed);
            out.relations.push_back(std::move(wr));
          }
  }
  return out;
}

AlgebraPresentation end_algebra(const MonoidalPresentation& p, const ObjectWord& object) {
  for (const GeneratorEdge& e : p.edges)
    if (e.dom != e.cod)
      throw Error("end-algebra extraction requires every generating morphism to be an "
                  "endomorphism; '" +
                  e.name + "' is not");

  AlgebraPresentation ap;
  ap.tag = p.tag;
  ap.object = object;
  const int d = static_cast<int>(object.size());

  std::map<std::pair<int, int>, int> index;  // (edge, offset) -> generator
  for (int e = 0; e < static_cast<int>(p.edges.size()); ++e) {
    const ObjectWord& dom = p.edges[e].dom;
    for (int o = 0; o + static_cast<int>(dom.size()) <= d; ++o) {
      if (object.compare(o, dom.size(), dom) != 0) continue;
      if (ap.generators.size() >= 127)
        throw Error("end-algebra presentation needs more than 127 generators");
      index[{e, o}] = static_cast<int>(ap.generators.size());
      ap.generators.push_back(
          AlgebraGenerator{p.edges[e].name + "[" + std::to_string(o) + "]", e, o});
    }
  }

  // A path from object to object, read into a word: last-applied step first.
  const auto word_of = [&](const Path& path) {
    GenWord w;
    for (auto it = path.steps.rbegin(); it != path.steps.rend(); ++it) {
      const auto found = index.find({it->edge, static_cast<int>(it->left.size())});
      if (found == index.end()) throw Error("internal: path step is not a placed generator");
      w.push_back(static_cast<char>(found->second));
    }
    return w;
  };
  const auto poly_of = [&](const Morphism& m) {
    std::vector<std::pair<GenWord, FieldValue>> terms;
    terms.reserve(m.terms.size());
    for (const auto& term : m.terms) terms.emplace_back(word_of(term.first), term.second);
    return nc_make(std::move(terms));
  };

  int max_deg = 1;
  for (const NamedRelation& rel : p.relations) {
    const Morphism raw = from_expr(p, rel.expr);
    const int len = static_cast<int>(raw.dom.size());
    for (int o = 0; o + len <= d; ++o) {
      if (object.compare(o, static_cast<std::size_t>(len), raw.dom) != 0) continue;
      const ObjectWord a = object.substr(0, static_cast<std::size_t>(o));
      const ObjectWord b = object.substr(static_cast<std::size_t>(o + len));
      AlgebraRelation ar;
      ar.name = rel.name + "[" + format_object_word(p, a) + "|" + format_object_word(p, b) + "]";
      ar.value = poly_of(tensor_ideal_element(p, a, raw, b));
      max_deg = std::max(max_deg, ar.value.degree());
      ap.relations.push_back(std::move(ar));
    }
  }

  const int n = static_cast<int>(ap.generators.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const AlgebraGenerator& gi = ap.generators[i];
      const AlgebraGenerator& gj = ap.generators[j];
      const int wi = static_cast<int>(p.edges[gi.edge].dom.size());
      if (gi.offset + wi > gj.offset) continue;
      const int wj = static_cast<int>(p.edges[gj.edge].dom.size());
      if (wi == 0 && wj == 0 && gi.offset == gj.offset && gi.edge >= gj.edge) continue;
      AlgebraRelation ar;
      ar.name = "interchange[" + gi.name + "|" + gj.name + "]";
      GenWord ij{static_cast<char>(i), static_cast<char>(j)};
      GenWord ji{static_cast<char>(j), static_cast<char>(i)};
      ar.value = nc_sub(nc_monomial(ij, FieldValue::one(p.tag)),
                        nc_monomial(ji, FieldValue::one(p.tag)));
      max_deg = std::max(max_deg, 2);
      ap.relations.push_back(std::move(ar));
    }

  ap.default_max_degree = std::max(1, 2 * d * max_deg);
  return ap;
}

std::vector<NCPolynomial> relation_values(const AlgebraPresentation& ap) {
  std::vector<NCPolynomial> out;
  out.reserve(ap.relations.size());
  for (const AlgebraRelation& r : ap.relations) out.push_back(r.value);
  return out;
}

std::string format_algebra_word(const AlgebraPresentation& ap, const GenWord& word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += " ";
    out += ap.generators.at(static_cast<unsigned char>(word[i])).name;
  }
  return out;
}

std::string format_algebra_poly(const AlgebraPresentation& ap, const NCPolynomial& poly) {
  if (poly.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, coeff] : poly.terms)
    append_sum_term(out, first, coeff, format_algebra_word(ap, word), ap.tag);
  return out;
}

}  // namespace mcat
