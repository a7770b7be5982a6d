#include "mcat/checks.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "mcat/linearize.hpp"
#include "mcat/reference.hpp"

namespace mcat {

bool CheckReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::vector<std::string> check_suite_names() { return {"core", "daha", "braid", "interchange"}; }

namespace {

std::size_t factorial(int d) {
  std::size_t f = 1;
  for (int i = 2; i <= d; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

ObjectWord strands(int d) { return ObjectWord(static_cast<std::size_t>(d), '\0'); }

CheckResult dimension_row(const std::string& name, const MonoidalPresentation& p, int d,
                          int max_degree, std::size_t expected) {
  CheckResult row{name, false, ""};
  try {
    AlgebraPresentation ap = end_algebra(p, strands(d));
    GroebnerResult gb = nc_complete(relation_values(ap), max_degree);
    DimensionResult dim = quotient_dimension(gb, static_cast<int>(ap.generators.size()));
    std::ostringstream out;
    if (dim.finite)
      out << "dim " << dim.dimension << " (expected " << expected << ")";
    else
      out << "no finiteness certificate within degree " << max_degree;
    row.detail = out.str();
    row.pass = dim.finite && dim.dimension == expected;
  } catch (const Error& e) {
    row.detail = e.what();
  }
  return row;
}

CheckResult graded_row(const std::string& name, const MonoidalPresentation& p, int d,
                       int max_degree, const std::vector<std::size_t>& expected_cumulative) {
  CheckResult row{name, false, ""};
  try {
    AlgebraPresentation ap = end_algebra(p, strands(d));
    GroebnerResult gb = nc_complete(relation_values(ap), max_degree);
    auto counts = normal_word_counts(gb, static_cast<int>(ap.generators.size()), max_degree);
    std::vector<std::size_t> cumulative;
    std::size_t total = 0;
    for (std::size_t c : counts) cumulative.push_back(total += c);
    std::ostringstream out;
    out << "cumulative";
    for (std::size_t c : cumulative) out << " " << c;
    row.detail = out.str();
    row.pass = cumulative == expected_cumulative;
  } catch (const Error& e) {
    row.detail = e.what();
  }
  return row;
}

CheckResult braid_invertibility_row(int d) {
  CheckResult row{"braid d=" + std::to_string(d) + " invertibility", false, ""};
  try {
    AlgebraPresentation ap = end_algebra(builtin_presentation("braid"), strands(d));
    GroebnerResult gb = nc_complete(relation_values(ap), 6);
    const NCPolynomial one = nc_monomial({}, FieldValue::one(ap.tag));
    bool ok = true;
    // Generators are sp[0..d-2] then sm[0..d-2].
    for (int i = 0; i + 1 < d && ok; ++i) {
      NCPolynomial pos = nc_monomial(GenWord(1, static_cast<char>(i)), FieldValue::one(ap.tag));
      NCPolynomial neg =
          nc_monomial(GenWord(1, static_cast<char>(d - 1 + i)), FieldValue::one(ap.tag));
      ok = quotient_mul(gb, pos, neg) == one && quotient_mul(gb, neg, pos) == one;
    }
    row.pass = ok;
    row.detail = ok ? "both crossing products reduce to the identity"
                    : "a crossing product failed to reduce to the identity";
  } catch (const Error& e) {
    row.detail = e.what();
  }
  return row;
}

// --- randomized interchange property suite ---------------------------------

MonoidalPresentation random_quiver(std::mt19937& rng) {
  MonoidalPresentation p;
  p.tag = FieldTag::Q;
  const int n_obj = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < n_obj; ++i) p.objects.push_back(std::string(1, static_cast<char>('a' + i)));
  const int n_edges = 2 + static_cast<int>(rng() % 3);
  for (int i = 0; i < n_edges; ++i) {
    const int width = 1 + static_cast<int>(rng() % 3);
    ObjectWord dom, cod;
    for (int k = 0; k < width; ++k) {
      dom.push_back(static_cast<char>(rng() % n_obj));
      cod.push_back(static_cast<char>(rng() % n_obj));
    }
    p.edges.push_back(GeneratorEdge{"e" + std::to_string(i), dom, cod});
  }
  return p;
}

ObjectWord random_word(std::mt19937& rng, const MonoidalPresentation& p, int max_len) {
  ObjectWord w;
  const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  for (int i = 0; i < len; ++i)
    w.push_back(static_cast<char>(rng() % p.objects.size()));
  return w;
}

std::vector<Triple> placements(const MonoidalPresentation& p, const ObjectWord& at) {
  std::vector<Triple> out;
  for (int e = 0; e < static_cast<int>(p.edges.size()); ++e) {
    const ObjectWord& dom = p.edges[e].dom;
    for (std::size_t o = 0; o + dom.size() <= at.size(); ++o)
      if (at.compare(o, dom.size(), dom) == 0)
        out.push_back(Triple{e, at.substr(0, o), at.substr(o + dom.size())});
  }
  return out;
}

Path random_path(std::mt19937& rng, const MonoidalPresentation& p, const ObjectWord& start,
                 int max_steps) {
  Path path{start, {}};
  ObjectWord cur = start;
  const int steps = static_cast<int>(rng() % static_cast<unsigned>(max_steps + 1));
  for (int s = 0; s < steps; ++s) {
    const auto options = placements(p, cur);
    if (options.empty()) break;
    const Triple t = options[rng() % options.size()];
    cur = t.left + p.edges[t.edge].cod + t.right;
    path.steps.push_back(t);
  }
  return path;
}

bool trial_idempotence(std::mt19937& rng, const MonoidalPresentation& p) {
  const Path path = random_path(rng, p, random_word(rng, p, 4), 4);
  Morphism m = scale(FieldValue::integer(p.tag, 1 + static_cast<long>(rng() % 3)),
                     from_path(p, path));
  const Morphism once = normal_form(p, m);
  return normal_form(p, once) == once;
}

bool trial_strategy_independence(std::mt19937& rng, const MonoidalPresentation& p) {
  const Path path = random_path(rng, p, random_word(rng, p, 4), 4);
  std::vector<Triple> steps = path.steps;
  for (int guard = 0;; ++guard) {
    if (guard > 100000) return false;
    std::vector<std::size_t> redexes;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
      if (interchange_swap(p, steps[i], steps[i + 1])) redexes.push_back(i);
    if (redexes.empty()) break;
    const std::size_t i = redexes[rng() % redexes.size()];
    const auto swapped = *interchange_swap(p, steps[i], steps[i + 1]);
    steps[i] = swapped.first;
    steps[i + 1] = swapped.second;
  }
  const Morphism nf = normal_form(p, from_path(p, path));
  return nf.terms.size() == 1 && nf.terms[0].first.steps == steps;
}

bool trial_bifunctoriality(std::mt19937& rng, const MonoidalPresentation& p) {
  const Path fp = random_path(rng, p, random_word(rng, p, 3), 3);
  const Path gp = random_path(rng, p, random_word(rng, p, 3), 3);
  const Morphism f = from_path(p, fp), g = from_path(p, gp);
  const Morphism lhs = tensor(p, f, g);
  const Morphism rhs =
      compose(p, whisker_left(p, f.cod, g), whisker_right(p, f, g.dom));
  return normal_form(p, lhs) == normal_form(p, rhs);
}

bool trial_tensor_laws(std::mt19937& rng, const MonoidalPresentation& p) {
  const Morphism f = from_path(p, random_path(rng, p, random_word(rng, p, 2), 2));
  const Morphism g = from_path(p, random_path(rng, p, random_word(rng, p, 2), 2));
  const Morphism h = from_path(p, random_path(rng, p, random_word(rng, p, 2), 2));
  const Morphism assoc_l = tensor(p, tensor(p, f, g), h);
  const Morphism assoc_r = tensor(p, f, tensor(p, g, h));
  if (normal_form(p, assoc_l) != normal_form(p, assoc_r)) return false;
  const Morphism unit = identity(p, {});
  return tensor(p, f, unit) == f && tensor(p, unit, f) == f;
}

bool trial_interchange_identity(std::mt19937& rng, const MonoidalPresentation& p) {
  const int ei = static_cast<int>(rng() % p.edges.size());
  const int ej = static_cast<int>(rng() % p.edges.size());
  const GeneratorEdge& a = p.edges[static_cast<std::size_t>(ei)];
  const GeneratorEdge& b = p.edges[static_cast<std::size_t>(ej)];
  const ObjectWord v = random_word(rng, p, 2);
  const ObjectWord g = random_word(rng, p, 2);
  const ObjectWord w = random_word(rng, p, 2);
  const ObjectWord dom = v + a.dom + g + b.dom + w;
  const ObjectWord cod = v + a.cod + g + b.cod + w;
  Path high_first{dom, {Triple{ej, v + a.dom + g, w}, Triple{ei, v, g + b.cod + w}}};
  Path low_first{dom, {Triple{ei, v, g + b.dom + w}, Triple{ej, v + a.cod + g, w}}};
  const Morphism diff =
      sub(p, from_path(p, std::move(high_first)), from_path(p, std::move(low_first)));
  return normal_form(p, diff).terms.empty();
}

CheckReport interchange_suite(unsigned long seed, int cases) {
  CheckReport report;
  report.suite = "interchange";
  const char* names[5] = {"normal form idempotence", "strategy independence", "bifunctoriality",
                          "tensor associativity and unit laws", "interchange identity"};
  bool (*trials[5])(std::mt19937&, const MonoidalPresentation&) = {
      trial_idempotence, trial_strategy_independence, trial_bifunctoriality, trial_tensor_laws,
      trial_interchange_identity};
  int passed[5] = {0, 0, 0, 0, 0};
  std::string first_failure[5];

  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  for (int c = 0; c < cases; ++c) {
    const MonoidalPresentation p = random_quiver(rng);
    for (int t = 0; t < 5; ++t) {
      bool ok = false;
      std::string note;
      try {
        ok = trials[t](rng, p);
      } catch (const Error& e) {
        note = e.what();
      }
      if (ok) {
        ++passed[t];
      } else if (first_failure[t].empty()) {
        first_failure[t] = "first failure at case " + std::to_string(c) +
                           (note.empty() ? "" : " (" + note + ")");
      }
    }
  }
  for (int t = 0; t < 5; ++t) {
    CheckResult row{names[t], passed[t] == cases,
                    std::to_string(passed[t]) + "/" + std::to_string(cases) + " cases"};
    if (!row.pass && !first_failure[t].empty()) row.detail += "; " + first_failure[t];
    report.results.push_back(std::move(row));
  }
  return report;
}

}  // namespace

CheckReport run_check_suite(const std::string& suite, unsigned long seed, int cases) {
  if (suite == "interchange") return interchange_suite(seed, cases);

  CheckReport report;
  report.suite = suite;
  if (suite == "core") {
    MonoidalPresentation sym = builtin_presentation("symmetric");
    for (int d = 1; d <= 4; ++d)
      report.results.push_back(
          dimension_row("symmetric d=" + std::to_string(d), sym, d, 12, factorial(d)));
    MonoidalPresentation hecke = builtin_presentation("hecke");
    for (int d = 2; d <= 3; ++d)
      report.results.push_back(
          dimension_row("hecke d=" + std::to_string(d), hecke, d, 10, factorial(d)));
    MonoidalPresentation wreath =
        builtin_presentation("wreath", FrobeniusAlgebraData::cyclic_group(2, FieldTag::Q));
    for (int d = 1; d <= 3; ++d)
      report.results.push_back(dimension_row("wreath Z2 d=" + std::to_string(d), wreath, d, 8,
                                             (std::size_t{1} << d) * factorial(d)));
  } else if (suite == "daha") {
    std::vector<std::size_t> expected;
    for (std::size_t L = 0; L <= 6; ++L) expected.push_back((L + 1) * (L + 1));
    report.results.push_back(
        graded_row("daha d=2 graded counts", builtin_presentation("daha"), 2, 6, expected));
  } else if (suite == "braid") {
    std::vector<std::size_t> expected;
    for (std::size_t L = 0; L <= 6; ++L) expected.push_back(2 * L + 1);
    report.results.push_back(
        graded_row("braid d=2 graded counts", builtin_presentation("braid"), 2, 6, expected));
    report.results.push_back(braid_invertibility_row(2));
    report.results.push_back(braid_invertibility_row(3));
  } else {
    throw UsageError("unknown check suite '" + suite + "'");
  }
  return report;
}

}  // namespace mcat
