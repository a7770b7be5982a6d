#include "mcat/freemon.hpp"

#include <algorithm>
#include <map>

#include "mcat/linalg.hpp"

namespace mcat {

namespace {

long swap_budget(std::size_t n) {
  long ln = static_cast<long>(n);
  return 8 * ln * ln * ln + 64;
}

}  // namespace

bool triple_less(const Triple& a, const Triple& b) {
  auto key = [](const Triple& t) {
    return std::make_tuple(t.left.size(), t.edge, t.right.size(), std::cref(t.left),
                           std::cref(t.right));
  };
  return key(a) < key(b);
}

bool path_less(const Path& a, const Path& b) {
  if (a.steps.size() != b.steps.size()) return a.steps.size() < b.steps.size();
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    if (triple_less(a.steps[i], b.steps[i])) return true;
    if (triple_less(b.steps[i], a.steps[i])) return false;
  }
  return a.dom < b.dom;
}

ObjectWord triple_dom(const MonoidalPresentation& p, const Triple& t) {
  return t.left + p.edges.at(t.edge).dom + t.right;
}

ObjectWord triple_cod(const MonoidalPresentation& p, const Triple& t) {
  return t.left + p.edges.at(t.edge).cod + t.right;
}

ObjectWord path_cod(const MonoidalPresentation& p, const Path& path) {
  return path.steps.empty() ? path.dom : triple_cod(p, path.steps.back());
}

void check_path(const MonoidalPresentation& p, const Path& path) {
  ObjectWord cur = path.dom;
  for (const Triple& t : path.steps) {
    if (triple_dom(p, t) != cur)
      throw Error("path steps do not chain: expected domain " + format_object_word(p, cur));
    cur = triple_cod(p, t);
  }
}

Morphism make_morphism(ObjectWord dom, ObjectWord cod,
                       std::vector<std::pair<Path, FieldValue>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return path_less(a.first, b.first); });
  std::vector<std::pair<Path, FieldValue>> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second = field_add(merged.back().second, t.second);
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const auto& t) { return field_is_zero(t.second); });
  return Morphism{std::move(dom), std::move(cod), std::move(merged)};
}

Morphism zero_morphism(const MonoidalPresentation&, ObjectWord dom, ObjectWord cod) {
  return Morphism{std::move(dom), std::move(cod), {}};
}

Morphism identity(const MonoidalPresentation& p, const ObjectWord& w) {
  return Morphism{w, w, {{Path{w, {}}, FieldValue::one(p.tag)}}};
}

Morphism from_path(const MonoidalPresentation& p, Path path) {
  ObjectWord cod = path_cod(p, path);
  ObjectWord dom = path.dom;
  return Morphism{std::move(dom), std::move(cod),
                  {{std::move(path), FieldValue::one(p.tag)}}};
}

Morphism compose(const MonoidalPresentation& p, const Morphism& f, const Morphism& g) {
  if (g.cod != f.dom)
    throw Error("cannot compose: first factor ends at " + format_object_word(p, g.cod) +
                " but second starts at " + format_object_word(p, f.dom));
  std::vector<std::pair<Path, FieldValue>> terms;
  for (const auto& [gp, gc] : g.terms)
    for (const auto& [fp, fc] : f.terms) {
      Path q{gp.dom, gp.steps};
      q.steps.insert(q.steps.end(), fp.steps.begin(), fp.steps.end());
      terms.emplace_back(std::move(q), field_mul(gc, fc));
    }
  return make_morphism(g.dom, f.cod, std::move(terms));
}

Morphism add(const MonoidalPresentation& p, const Morphism& f, const Morphism& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw Error("cannot add morphisms with different endpoints: " +
                format_object_word(p, f.dom) + " -> " + format_object_word(p, f.cod) + " vs " +
                format_object_word(p, g.dom) + " -> " + format_object_word(p, g.cod));
  auto terms = f.terms;
  terms.insert(terms.end(), g.terms.begin(), g.terms.end());
  return make_morphism(f.dom, f.cod, std::move(terms));
}

Morphism sub(const MonoidalPresentation& p, const Morphism& f, const Morphism& g) {
  return add(p, f, scale(FieldValue::integer(p.tag, -1), g));
}

Morphism scale(const FieldValue& c, const Morphism& f) {
  Morphism out{f.dom, f.cod, {}};
  if (field_is_zero(c)) return out;
  out.terms = f.terms;
  for (auto& t : out.terms) t.second = field_mul(c, t.second);
  return out;
}

Morphism whisker_left(const MonoidalPresentation& p, const ObjectWord& a, const Morphism& f) {
  std::vector<std::pair<Path, FieldValue>> terms;
  for (const auto& [path, c] : f.terms) {
    Path q{a + path.dom, path.steps};
    for (Triple& t : q.steps) t.left = a + t.left;
    terms.emplace_back(std::move(q), c);
  }
  return make_morphism(a + f.dom, a + f.cod, std::move(terms));
}

Morphism whisker_right(const MonoidalPresentation&, const Morphism& f, const ObjectWord& a) {
  std::vector<std::pair<Path, FieldValue>> terms;
  for (const auto& [path, c] : f.terms) {
    Path q{path.dom + a, path.steps};
    for (Triple& t : q.steps) t.right = t.right + a;
    terms.emplace_back(std::move(q), c);
  }
  return make_morphism(f.dom + a, f.cod + a, std::move(terms));
}

Morphism tensor(const MonoidalPresentation& p, const Morphism& f, const Morphism& g) {
  return compose(p, whisker_right(p, f, g.cod), whisker_left(p, f.dom, g));
}

std::optional<std::pair<Triple, Triple>> interchange_swap(const MonoidalPresentation& p,
                                                          const Triple& first,
                                                          const Triple& second) {
  const GeneratorEdge& eb = p.edges.at(first.edge);   // applied first
  const GeneratorEdge& ea = p.edges.at(second.edge);  // applied second
  std::size_t a_end = second.left.size() + ea.dom.size();
  if (a_end > first.left.size()) return std::nullopt;  // overlaps or acts to the right
  // Two zero-width steps at the same offset swap back and forth forever;
  // leave that pair alone.
  if (ea.dom.empty() && ea.cod.empty() && eb.dom.empty() && eb.cod.empty() &&
      second.left.size() == first.left.size())
    return std::nullopt;
  if (first.left.compare(0, second.left.size(), second.left) != 0 ||
      first.left.compare(second.left.size(), ea.dom.size(), ea.dom) != 0)
    throw Error("interchange_swap: steps do not chain");
  ObjectWord gap = first.left.substr(a_end);
  Triple new_first{second.edge, second.left, gap + eb.dom + first.right};
  Triple new_second{first.edge, second.left + ea.cod + gap, first.right};
  return std::make_pair(std::move(new_first), std::move(new_second));
}

Morphism normal_form(const MonoidalPresentation& p, const Morphism& f) {
  std::vector<std::pair<Path, FieldValue>> terms;
  for (const auto& [path, c] : f.terms) {
    Path q = path;
    long fuel = swap_budget(q.steps.size());
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < q.steps.size(); ++i) {
        if (auto sw = interchange_swap(p, q.steps[i], q.steps[i + 1])) {
          q.steps[i] = std::move(sw->first);
          q.steps[i + 1] = std::move(sw->second);
          changed = true;
          if (--fuel < 0) throw Error("interchange normalization budget exceeded");
        }
      }
    }
    terms.emplace_back(std::move(q), c);
  }
  return make_morphism(f.dom, f.cod, std::move(terms));
}

Morphism from_expr(const MonoidalPresentation& p, const MorphismExpr& expr) {
  auto [dom, cod] = expr_endpoints(p, expr);
  Morphism sum = zero_morphism(p, dom, cod);
  for (const ExprTerm& term : expr.terms) {
    Morphism value = identity(p, {});
    bool have = false;
    for (const ExprLayer& layer : term.layers) {
      Morphism lm = identity(p, {});
      for (const ExprFactor& f : layer) {
        Morphism fm = f.kind == ExprFactor::Kind::Object
                          ? identity(p, ObjectWord(1, static_cast<char>(f.index)))
                          : from_path(p, Path{p.edges.at(f.index).dom,
                                              {Triple{f.index, {}, {}}}});
        lm = tensor(p, lm, fm);
      }
      value = have ? compose(p, lm, value) : lm;
      have = true;
    }
    sum = add(p, sum, scale(term.coeff, value));
  }
  return sum;
}

Morphism tensor_ideal_element(const MonoidalPresentation& p, const ObjectWord& a,
                              const Morphism& r, const ObjectWord& b) {
  return whisker_left(p, a, whisker_right(p, r, b));
}

Morphism ideal_element(const MonoidalPresentation& p, const Morphism& after, const ObjectWord& a,
                       const Morphism& r, const ObjectWord& b, const Morphism& before) {
  return compose(p, after, compose(p, tensor_ideal_element(p, a, r, b), before));
}

namespace {

void extend_paths(const MonoidalPresentation& p, Path& cur, const ObjectWord& word, int remaining,
                  std::vector<Path>& out) {
  out.push_back(cur);
  if (remaining == 0) return;
  for (int e = 0; e < static_cast<int>(p.edges.size()); ++e) {
    const ObjectWord& d = p.edges[e].dom;
    const ObjectWord& c = p.edges[e].cod;
    for (std::size_t o = 0; o + d.size() <= word.size(); ++o) {
      if (word.compare(o, d.size(), d) != 0) continue;
      Triple t{e, word.substr(0, o), word.substr(o + d.size())};
      ObjectWord next = t.left + c + t.right;
      cur.steps.push_back(std::move(t));
      extend_paths(p, cur, next, remaining - 1, out);
      cur.steps.pop_back();
    }
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const MonoidalPresentation& p, const ObjectWord& dom,
                                  int max_steps) {
  std::vector<Path> out;
  Path cur{dom, {}};
  extend_paths(p, cur, dom, max_steps, out);
  return out;
}

SpanReport hom_span_quotient_dim(const MonoidalPresentation& p, const ObjectWord& dom,
                                 const ObjectWord& cod, int max_steps, int framing_bound) {
  SpanReport rep;

  // Basis: normal forms of all dom -> cod paths within the step bound.
  std::map<ObjectWord, std::vector<Path>> path_cache;
  auto paths_from = [&](const ObjectWord& w) -> const std::vector<Path>& {
    auto it = path_cache.find(w);
    if (it == path_cache.end())
      it = path_cache.emplace(w, enumerate_paths(p, w, framing_bound)).first;
    return it->second;
  };

  std::vector<Path> normal;
  for (const Path& path : enumerate_paths(p, dom, max_steps)) {
    if (path_cod(p, path) != cod) continue;
    Morphism nf = normal_form(p, from_path(p, path));
    normal.push_back(nf.terms.at(0).first);
  }
  std::sort(normal.begin(), normal.end(), path_less);
  normal.erase(std::unique(normal.begin(), normal.end()), normal.end());
  rep.basis = std::move(normal);
  rep.path_count = rep.basis.size();

  auto column_of = [&](const Path& path) {
    auto it = std::lower_bound(rep.basis.begin(), rep.basis.end(), path, path_less);
    if (it == rep.basis.end() || !(*it == path))
      throw Error("internal: normalized relation instance leaves the enumerated basis");
    return static_cast<std::size_t>(it - rep.basis.begin());
  };

  std::vector<Morphism> rels;
  rels.reserve(p.relations.size());
  for (const auto& r : p.relations) rels.push_back(from_expr(p, r.expr));

  RowSpace space(rep.path_count);
  auto zero = FieldValue::zero(p.tag);
  for (const Path& f1 : paths_from(dom)) {
    ObjectWord mid = path_cod(p, f1);
    Morphism mf1 = from_path(p, f1);
    for (const Morphism& rel : rels) {
      if (rel.dom.size() > mid.size()) continue;
      for (std::size_t o = 0; o + rel.dom.size() <= mid.size(); ++o) {
        if (mid.compare(o, rel.dom.size(), rel.dom) != 0) continue;
        ObjectWord x = mid.substr(0, o);
        ObjectWord y = mid.substr(o + rel.dom.size());
        Morphism framed = tensor_ideal_element(p, x, rel, y);
        Morphism partial = compose(p, framed, mf1);
        ObjectWord src2 = x + rel.cod + y;
        for (const Path& f2 : paths_from(src2)) {
          if (path_cod(p, f2) != cod) continue;
          Morphism elem = compose(p, from_path(p, f2), partial);
          bool within = std::all_of(elem.terms.begin(), elem.terms.end(), [&](const auto& t) {
            return t.first.steps.size() <= static_cast<std::size_t>(max_steps);
          });
          if (!within) continue;
          ++rep.instance_count;
          Morphism nf = normal_form(p, elem);
          std::vector<FieldValue> row(rep.path_count, zero);
          for (const auto& [path, c] : nf.terms) row[column_of(path)] = c;
          space.add(std::move(row));
        }
      }
    }
  }
  rep.rank = space.rank();
  rep.dim = rep.path_count - rep.rank;
  rep.ideal_rows = space.rows();
  return rep;
}

std::string format_path(const MonoidalPresentation& p, const Path& path) {
  if (path.steps.empty()) return "1_{" + format_object_word(p, path.dom) + "}";
  std::string out;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (i > 0) out += " ; ";
    const Triple& t = path.steps[i];
    out += "(" + format_object_word(p, t.left) + " | " + p.edges[t.edge].name + " | " +
           format_object_word(p, t.right) + ")";
  }
  return out;
}

std::string format_morphism(const MonoidalPresentation& p, const Morphism& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [path, coeff] : f.terms) append_sum_term(out, first, coeff, format_path(p, path), p.tag);
  return out;
}

}  // namespace mcat
