#include "mcat/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcat/checks.hpp"
#include "mcat/error.hpp"
#include "mcat/freemon.hpp"
#include "mcat/linearize.hpp"
#include "mcat/ncalg.hpp"
#include "mcat/presentation.hpp"

namespace mcat {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Option plumbing shared between subcommands.
// ---------------------------------------------------------------------------

struct InputOpts {
  std::string builtin;
  std::string file;
  std::string algebra;
};

struct ObjectOpts {
  std::string object;
  std::string power;
};

struct OutputOpts {
  std::string format = "text";
  std::string path;
};

void add_input_options(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("--builtin", in.builtin,
                  "built-in presentation name (see `mcat examples list`)");
  cmd->add_option("--file", in.file, "presentation file in the mcat text format");
  cmd->add_option("--algebra", in.algebra,
                  "base algebra for the wreath presentations: Z<n> = group algebra of Z/n");
}

void add_object_options(CLI::App* cmd, ObjectOpts& obj) {
  cmd->add_option("--object", obj.object,
                  "object word as space-separated object names (\"-\" = unit)");
  cmd->add_option("--object-power", obj.power, "object word <name>:<d>, the name repeated d times");
}

void add_output_options(CLI::App* cmd, OutputOpts& outo) {
  cmd->add_option("--format", outo.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", outo.path, "write the report to this file instead of stdout");
}

std::optional<FrobeniusAlgebraData> parse_algebra_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text.size() >= 2 && text[0] == 'Z' &&
      std::all_of(text.begin() + 1, text.end(),
                  [](unsigned char c) { return std::isdigit(c) != 0; })) {
    int n = 0;
    try {
      n = std::stoi(text.substr(1));
    } catch (const std::exception&) {
      n = 0;
    }
    if (n >= 1) return FrobeniusAlgebraData::cyclic_group(n, FieldTag::Q);
  }
  throw UsageError("unknown algebra '" + text + "'; expected Z<n> (group algebra of Z/n)");
}

struct LoadedPresentation {
  MonoidalPresentation p;
  std::string label;  // builtin name or file path, for report headers
};

LoadedPresentation load_presentation(const InputOpts& in) {
  const bool has_builtin = !in.builtin.empty();
  const bool has_file = !in.file.empty();
  if (has_builtin == has_file)
    throw UsageError("specify exactly one input: --builtin <name> or --file <path>");
  std::optional<FrobeniusAlgebraData> algebra = parse_algebra_option(in.algebra);
  if (has_builtin) return {builtin_presentation(in.builtin, std::move(algebra)), in.builtin};

  std::ifstream stream(in.file, std::ios::binary);
  if (!stream) throw UsageError("cannot open input file '" + in.file + "'");
  std::ostringstream text;
  text << stream.rdbuf();
  MonoidalPresentation p = parse_presentation(text.str());
  if (algebra) {
    if (algebra->tag != p.tag)
      throw UsageError("--algebra coefficients do not match the presentation's");
    algebra->validate();
    p.algebra = std::move(algebra);
  }
  return {std::move(p), in.file};
}

ObjectWord resolve_object(const MonoidalPresentation& p, const ObjectOpts& o) {
  const bool has_word = !o.object.empty();
  const bool has_power = !o.power.empty();
  if (has_word == has_power)
    throw UsageError("specify exactly one of --object \"<word>\" or --object-power <name>:<d>");
  if (has_word) {
    try {
      return parse_object_word(p, o.object);
    } catch (const Error& e) {
      throw UsageError(std::string("invalid --object: ") + e.what());
    }
  }
  const std::size_t colon = o.power.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == o.power.size())
    throw UsageError("invalid --object-power '" + o.power + "'; expected <name>:<d>");
  const std::string name = o.power.substr(0, colon);
  const std::string count = o.power.substr(colon + 1);
  if (!std::all_of(count.begin(), count.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw UsageError("invalid --object-power '" + o.power + "'; expected <name>:<d>");
  const int oi = p.object_index(name);
  if (oi < 0) throw UsageError("invalid --object-power: unknown object '" + name + "'");
  int d = 0;
  try {
    d = std::stoi(count);
  } catch (const std::exception&) {
    throw UsageError("invalid --object-power '" + o.power + "': power out of range");
  }
  return ObjectWord(static_cast<std::size_t>(d), static_cast<char>(oi));
}

void deliver(const std::string& text, const OutputOpts& outo, std::ostream& out) {
  if (outo.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(outo.path, std::ios::binary);
  f << text;
  f.close();
  if (!f) throw Error("cannot write output file '" + outo.path + "'");
}

// ---------------------------------------------------------------------------
// Rendering helpers.
// ---------------------------------------------------------------------------

std::string join_counts(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string triple_text(const MonoidalPresentation& p, const Triple& t) {
  return "(" + format_object_word(p, t.left) + " | " + p.edges[t.edge].name + " | " +
         format_object_word(p, t.right) + ")";
}

// Relation values are canonical combinations whose first term may carry a -1
// coefficient; for display, such values are negated (an equivalent relation)
// so the printed string starts with a positive term.
std::string display_morphism(const MonoidalPresentation& p, const Morphism& f) {
  if (!f.terms.empty() && f.terms.front().second == FieldValue::integer(p.tag, -1))
    return format_morphism(p, scale(FieldValue::integer(p.tag, -1), f));
  return format_morphism(p, f);
}

std::string display_poly(const AlgebraPresentation& ap, const NCPolynomial& poly) {
  if (!poly.is_zero() && poly.leading_coeff() == FieldValue::integer(ap.tag, -1))
    return format_algebra_poly(ap, nc_scale(FieldValue::integer(ap.tag, -1), poly));
  return format_algebra_poly(ap, poly);
}

// All object words of length <= max_len, by length then alphabet order.
std::vector<ObjectWord> object_words(const MonoidalPresentation& p, int max_len) {
  std::vector<ObjectWord> out{ObjectWord{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t c = 0; c < p.objects.size(); ++c) {
        ObjectWord w = out[i];
        w.push_back(static_cast<char>(c));
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

int generator_width(const MonoidalPresentation& p, int edge) {
  const GeneratorEdge& e = p.edges[static_cast<std::size_t>(edge)];
  return static_cast<int>(std::max(e.dom.size(), e.cod.size()));
}

// Dictionary between offset-from-left naming and the right-numbered strand
// convention: a width-w generator at offset o inside a d-strand object is
// generator number d - o - max(w,1) + 1 counting from the right.
int right_numbered_index(const MonoidalPresentation& p, const ObjectWord& object,
                         const AlgebraGenerator& g) {
  const int d = static_cast<int>(object.size());
  return d - g.offset - std::max(generator_width(p, g.edge), 1) + 1;
}

json poly_terms_json(const AlgebraPresentation& ap, const NCPolynomial& poly) {
  json arr = json::array();
  for (const auto& [word, coeff] : poly.terms) {
    json letters = json::array();
    for (char letter : word)
      letters.push_back(ap.generators[static_cast<std::size_t>(letter)].name);
    arr.push_back(json{{"coefficient", to_string(coeff)}, {"word", std::move(letters)}});
  }
  return arr;
}

json path_json(const MonoidalPresentation& p, const Path& path) {
  json steps = json::array();
  for (const Triple& t : path.steps)
    steps.push_back(json{{"left", format_object_word(p, t.left)},
                         {"edge", p.edges[t.edge].name},
                         {"right", format_object_word(p, t.right)}});
  return steps;
}

json morphism_terms_json(const MonoidalPresentation& p, const Morphism& f) {
  json arr = json::array();
  for (const auto& [path, coeff] : f.terms)
    arr.push_back(json{{"coefficient", to_string(coeff)}, {"path", path_json(p, path)}});
  return arr;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Subcommand implementations. Each returns the full report as a string.
// ---------------------------------------------------------------------------

std::string cmd_linearize(const LoadedPresentation& lp, int max_len, const std::string& format) {
  const MonoidalPresentation& p = lp.p;
  const LinearPresentation lin = linearize(p, max_len);
  if (lin.generators.empty())
    throw Error("max word length " + std::to_string(max_len) +
                " is too small: no whiskered generator fits");
  const std::vector<ObjectWord> objects = object_words(p, max_len);

  auto interchange_name = [&](const InterchangeInstance& c) {
    return "interchange[" + format_object_word(p, c.left) + "|" +
           p.edges[c.edge_low].name + "|" + format_object_word(p, c.gap) + "|" +
           p.edges[c.edge_high].name + "|" + format_object_word(p, c.right) + "]";
  };

  if (format == "json") {
    json j;
    j["command"] = "linearize";
    j["input"] = lp.label;
    j["coefficients"] = to_string(p.tag);
    j["max_word_length"] = max_len;
    j["counts"] = {{"objects", objects.size()},
                   {"generators", lin.generators.size()},
                   {"interchange", lin.interchange.size()},
                   {"whiskered", lin.relations.size()}};
    json objs = json::array();
    for (const ObjectWord& w : objects) objs.push_back(format_object_word(p, w));
    j["objects"] = std::move(objs);
    json gens = json::array();
    for (const Triple& t : lin.generators)
      gens.push_back(json{{"left", format_object_word(p, t.left)},
                          {"edge", p.edges[t.edge].name},
                          {"right", format_object_word(p, t.right)}});
    j["generators"] = std::move(gens);
    json inter = json::array();
    for (const InterchangeInstance& c : lin.interchange)
      inter.push_back(json{{"name", interchange_name(c)},
                           {"edge_low", p.edges[c.edge_low].name},
                           {"edge_high", p.edges[c.edge_high].name},
                           {"left", format_object_word(p, c.left)},
                           {"gap", format_object_word(p, c.gap)},
                           {"right", format_object_word(p, c.right)},
                           {"value", display_morphism(p, c.value)},
                           {"terms", morphism_terms_json(p, c.value)}});
    j["interchange"] = std::move(inter);
    json rels = json::array();
    for (const WhiskeredRelation& r : lin.relations)
      rels.push_back(json{{"name", r.name},
                          {"source", p.relations[static_cast<std::size_t>(r.source)].name},
                          {"left", format_object_word(p, r.left)},
                          {"right", format_object_word(p, r.right)},
                          {"value", display_morphism(p, r.value)},
                          {"terms", morphism_terms_json(p, r.value)}});
    j["whiskered"] = std::move(rels);
    return dump_json(j);
  }

  std::string s;
  s += "linearized presentation: " + lp.label + "\n";
  s += "coefficients: " + to_string(p.tag) + "\n";
  s += "max word length: " + std::to_string(max_len) + "\n";
  s += "objects (" + std::to_string(objects.size()) + "):";
  for (std::size_t i = 0; i < objects.size(); ++i)
    s += (i ? ", " : " ") + format_object_word(p, objects[i]);
  s += "\n";
  s += "generators (" + std::to_string(lin.generators.size()) + "):\n";
  for (const Triple& t : lin.generators) s += "  " + triple_text(p, t) + "\n";
  s += "interchange instances (" + std::to_string(lin.interchange.size()) + "):\n";
  for (const InterchangeInstance& c : lin.interchange)
    s += "  " + interchange_name(c) + ": " + display_morphism(p, c.value) + "\n";
  s += "whiskered relations (" + std::to_string(lin.relations.size()) + "):\n";
  for (const WhiskeredRelation& r : lin.relations)
    s += "  " + r.name + ": " + display_morphism(p, r.value) + "\n";
  return s;
}

std::string cmd_end_alg(const LoadedPresentation& lp, const ObjectWord& object,
                        const std::string& format) {
  const MonoidalPresentation& p = lp.p;
  const AlgebraPresentation ap = end_algebra(p, object);
  const std::string object_text = format_object_word(p, object);

  if (format == "json") {
    json j;
    j["command"] = "end-alg";
    j["input"] = lp.label;
    j["object"] = object_text;
    j["coefficients"] = to_string(ap.tag);
    j["counts"] = {{"generators", ap.generators.size()}, {"relations", ap.relations.size()}};
    json gens = json::array();
    for (const AlgebraGenerator& g : ap.generators) {
      const GeneratorEdge& e = p.edges[static_cast<std::size_t>(g.edge)];
      ObjectWord left = object.substr(0, static_cast<std::size_t>(g.offset));
      ObjectWord right = object.substr(static_cast<std::size_t>(g.offset) + e.dom.size());
      gens.push_back(json{{"name", g.name},
                          {"edge", e.name},
                          {"offset", g.offset},
                          {"left", format_object_word(p, left)},
                          {"right", format_object_word(p, right)},
                          {"right_numbered_index", right_numbered_index(p, object, g)}});
    }
    j["generators"] = std::move(gens);
    json rels = json::array();
    for (const AlgebraRelation& r : ap.relations)
      rels.push_back(json{{"name", r.name},
                          {"value", display_poly(ap, r.value)},
                          {"terms", poly_terms_json(ap, r.value)}});
    j["relations"] = std::move(rels);
    j["default_max_degree"] = ap.default_max_degree;
    return dump_json(j);
  }

  std::string s;
  s += "endomorphism algebra: " + lp.label + " at " + object_text + "\n";
  s += "coefficients: " + to_string(ap.tag) + "\n";
  s += "generators (" + std::to_string(ap.generators.size()) + "):\n";
  for (const AlgebraGenerator& g : ap.generators) {
    const GeneratorEdge& e = p.edges[static_cast<std::size_t>(g.edge)];
    ObjectWord left = object.substr(0, static_cast<std::size_t>(g.offset));
    ObjectWord right = object.substr(static_cast<std::size_t>(g.offset) + e.dom.size());
    s += "  " + g.name + " = " +
         triple_text(p, Triple{g.edge, std::move(left), std::move(right)}) +
         "   right-numbered " + e.name + "_" +
         std::to_string(right_numbered_index(p, object, g)) + "\n";
  }
  s += "relations (" + std::to_string(ap.relations.size()) + "):\n";
  for (const AlgebraRelation& r : ap.relations)
    s += "  " + r.name + ": " + display_poly(ap, r.value) + "\n";
  s += "default max degree: " + std::to_string(ap.default_max_degree) + "\n";
  return s;
}

std::string cmd_dim(const LoadedPresentation& lp, const ObjectWord& object, int max_deg,
                    const std::string& format, std::ostream& err) {
  const MonoidalPresentation& p = lp.p;
  const auto t0 = std::chrono::steady_clock::now();
  const AlgebraPresentation ap = end_algebra(p, object);
  const int degree = max_deg > 0 ? max_deg : ap.default_max_degree;
  const GroebnerResult gb = nc_complete(relation_values(ap), degree);
  const DimensionResult dim = quotient_dimension(gb, static_cast<int>(ap.generators.size()));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char elapsed[64];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", seconds);
  err << "wall time: " << elapsed << " s\n";

  const std::string object_text = format_object_word(p, object);
  if (format == "json") {
    json j;
    j["command"] = "dim";
    j["input"] = lp.label;
    j["object"] = object_text;
    j["coefficients"] = to_string(ap.tag);
    j["max_degree"] = degree;
    j["groebner"] = {{"basis", gb.basis.size()},
                     {"truncated", gb.truncated},
                     {"verified_degree", gb.verified_degree}};
    j["finite"] = dim.finite;
    if (dim.finite) {
      j["dimension"] = dim.dimension;
      j["zero_at"] = dim.zero_at;
    }
    j["counts"] = dim.counts;
    j["cumulative"] = dim.cumulative;
    return dump_json(j);
  }

  std::string s;
  s += "dimension report: " + lp.label + " at " + object_text + "\n";
  s += "coefficients: " + to_string(ap.tag) + "\n";
  s += "max degree: " + std::to_string(degree) + "\n";
  s += "generators: " + std::to_string(ap.generators.size()) + "\n";
  s += "Groebner basis: " + std::to_string(gb.basis.size()) + " elements (" +
       (gb.truncated ? "truncated at degree " + std::to_string(degree) : "complete") + ")\n";
  s += "normal words by degree: " + join_counts(dim.counts) + "\n";
  if (dim.finite) {
    s += "status: finite (zero normal words at degree " + std::to_string(dim.zero_at) + ")\n";
    s += "dimension: " + std::to_string(dim.dimension) + "\n";
  } else {
    s += "status: no finiteness certificate within degree " + std::to_string(degree) + "\n";
    s += "cumulative dimension by degree: " + join_counts(dim.cumulative) + "\n";
  }
  return s;
}

std::string cmd_nf(const LoadedPresentation& lp, const std::string& expr_text,
                   const std::string& format) {
  const MonoidalPresentation& p = lp.p;
  const MorphismExpr expr = parse_morphism_expr(p, expr_text);
  const Morphism raw = from_expr(p, expr);
  const Morphism nf = normal_form(p, raw);

  if (format == "json") {
    json j;
    j["command"] = "nf";
    j["input"] = expr_text;
    j["domain"] = format_object_word(p, nf.dom);
    j["codomain"] = format_object_word(p, nf.cod);
    j["normal_form"] = format_morphism(p, nf);
    j["terms"] = morphism_terms_json(p, nf);
    return dump_json(j);
  }

  std::string s;
  s += "input: " + expr_text + "\n";
  s += "domain: " + format_object_word(p, nf.dom) + "\n";
  s += "codomain: " + format_object_word(p, nf.cod) + "\n";
  s += "normal form: " + format_morphism(p, nf) + "\n";
  return s;
}

std::string cmd_check(const CheckReport& report, unsigned long seed, int cases,
                      const std::string& format) {
  std::size_t passed = 0;
  for (const CheckResult& r : report.results) passed += r.pass ? 1 : 0;

  if (format == "json") {
    json j;
    j["command"] = "check";
    j["suite"] = report.suite;
    j["seed"] = seed;
    j["cases"] = cases;
    json rows = json::array();
    for (const CheckResult& r : report.results)
      rows.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    j["results"] = std::move(rows);
    j["passed"] = passed;
    j["total"] = report.results.size();
    j["all_pass"] = report.all_pass();
    return dump_json(j);
  }

  std::string s;
  s += "check suite: " + report.suite + "\n";
  for (const CheckResult& r : report.results)
    s += std::string("  ") + (r.pass ? "PASS" : "FAIL") + "  " + r.name + ": " + r.detail + "\n";
  s += "passed " + std::to_string(passed) + "/" + std::to_string(report.results.size()) + "\n";
  return s;
}

std::string cmd_examples_list(const std::string& format) {
  const std::vector<std::string> names = builtin_names();
  if (format == "json") {
    json j;
    j["command"] = "examples";
    j["action"] = "list";
    j["names"] = names;
    return dump_json(j);
  }
  std::string s;
  for (const std::string& n : names) s += n + "\n";
  return s;
}

std::string cmd_examples_show(const std::string& name, const std::string& algebra,
                              const std::string& format) {
  std::string source = builtin_presentation_source(name, parse_algebra_option(algebra));
  if (!source.empty() && source.back() != '\n') source += "\n";
  if (format == "json") {
    json j;
    j["command"] = "examples";
    j["action"] = "show";
    j["name"] = name;
    j["source"] = source;
    return dump_json(j);
  }
  return source;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symbolic engine for finitely presented linear monoidal categories", "mcat"};
  app.require_subcommand(1);
  int exit_code = 0;

  // linearize
  InputOpts lin_in;
  OutputOpts lin_out;
  int lin_max_len = 0;
  auto* lin = app.add_subcommand(
      "linearize", "compile a monoidal presentation into a length-truncated linear presentation");
  add_input_options(lin, lin_in);
  add_output_options(lin, lin_out);
  lin->add_option("--max-len", lin_max_len, "emit instances on object words of length <= N")
      ->required()
      ->check(CLI::PositiveNumber);
  lin->callback([&] {
    deliver(cmd_linearize(load_presentation(lin_in), lin_max_len, lin_out.format), lin_out, out);
  });

  // end-alg
  InputOpts ea_in;
  ObjectOpts ea_obj;
  OutputOpts ea_out;
  auto* ea = app.add_subcommand(
      "end-alg", "extract the endomorphism-algebra presentation of an object word");
  add_input_options(ea, ea_in);
  add_object_options(ea, ea_obj);
  add_output_options(ea, ea_out);
  ea->callback([&] {
    LoadedPresentation lp = load_presentation(ea_in);
    deliver(cmd_end_alg(lp, resolve_object(lp.p, ea_obj), ea_out.format), ea_out, out);
  });

  // dim
  InputOpts dim_in;
  ObjectOpts dim_obj;
  OutputOpts dim_out;
  int dim_max_deg = 0;
  auto* dim = app.add_subcommand(
      "dim", "compute the endomorphism-algebra dimension via degree-bounded completion");
  add_input_options(dim, dim_in);
  add_object_options(dim, dim_obj);
  add_output_options(dim, dim_out);
  dim->add_option("--max-deg", dim_max_deg,
                  "completion degree bound (default: derived from the presentation)")
      ->check(CLI::PositiveNumber);
  dim->callback([&] {
    LoadedPresentation lp = load_presentation(dim_in);
    deliver(cmd_dim(lp, resolve_object(lp.p, dim_obj), dim_max_deg, dim_out.format, err), dim_out,
            out);
  });

  // nf
  InputOpts nf_in;
  OutputOpts nf_out;
  std::string nf_expr;
  auto* nf = app.add_subcommand("nf", "interchange normal form of a morphism expression");
  add_input_options(nf, nf_in);
  add_output_options(nf, nf_out);
  nf->add_option("--expr", nf_expr, "morphism expression (layers with ';', factors with spaces)")
      ->required();
  nf->callback(
      [&] { deliver(cmd_nf(load_presentation(nf_in), nf_expr, nf_out.format), nf_out, out); });

  // check
  OutputOpts check_out;
  std::string check_suite;
  unsigned long check_seed = 0;
  int check_cases = 1000;
  auto* check = app.add_subcommand("check", "run a verification suite");
  {
    std::string suites;
    for (const std::string& n : check_suite_names()) suites += (suites.empty() ? "" : ", ") + n;
    check->add_option("--suite", check_suite, "suite name (" + suites + ")")->required();
  }
  check->add_option("--seed", check_seed, "random seed for the property suites")
      ->capture_default_str();
  check->add_option("--cases", check_cases, "number of random cases for the property suites")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_options(check, check_out);
  check->callback([&] {
    const CheckReport report = run_check_suite(check_suite, check_seed, check_cases);
    deliver(cmd_check(report, check_seed, check_cases, check_out.format), check_out, out);
    if (!report.all_pass()) exit_code = 1;
  });

  // examples
  auto* ex = app.add_subcommand("examples", "the built-in presentation corpus");
  ex->require_subcommand(1);
  OutputOpts exl_out;
  auto* exl = ex->add_subcommand("list", "list the built-in presentation names");
  add_output_options(exl, exl_out);
  exl->callback([&] { deliver(cmd_examples_list(exl_out.format), exl_out, out); });
  OutputOpts exs_out;
  std::string exs_name;
  std::string exs_algebra;
  auto* exs = ex->add_subcommand("show", "print the source text of a built-in presentation");
  exs->add_option("name", exs_name, "built-in presentation name")->required();
  exs->add_option("--algebra", exs_algebra,
                  "base algebra for the wreath presentations: Z<n> = group algebra of Z/n");
  add_output_options(exs, exs_out);
  exs->callback(
      [&] { deliver(cmd_examples_show(exs_name, exs_algebra, exs_out.format), exs_out, out); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace mcat
