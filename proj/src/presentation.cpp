#include "mcat/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mcat/linalg.hpp"

namespace mcat {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_identifier(const std::string& s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

std::string tag_name(FieldTag tag) { return tag == FieldTag::Q ? "Q" : "Q(q)"; }

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// ---------------------------------------------------------------------------
// Expression lexer/parser. Columns are 1-based positions in the original
// line; `col0` is the column of text[0].
// ---------------------------------------------------------------------------

struct Tok {
  enum class K { Name, Unit, Semi, Plus, Minus, Eq, Coeff, End };
  K k;
  std::string text;  // name text, or the inside of a coefficient "(...)"
  int col;
};

std::vector<Tok> lex_expr(const std::string& s, int line, int col0) {
  std::vector<Tok> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int col = col0 + static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && is_ident_char(s[j])) ++j;
      out.push_back({Tok::K::Name, s.substr(i, j - i), col});
      i = j;
    } else if (c == '1' && (i + 1 >= s.size() || !is_ident_char(s[i + 1]))) {
      out.push_back({Tok::K::Unit, "1", col});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("numeric coefficients must be written in parentheses", line, col);
    } else if (c == ';') {
      out.push_back({Tok::K::Semi, ";", col});
      ++i;
    } else if (c == '+') {
      out.push_back({Tok::K::Plus, "+", col});
      ++i;
    } else if (c == '-') {
      out.push_back({Tok::K::Minus, "-", col});
      ++i;
    } else if (c == '=') {
      out.push_back({Tok::K::Eq, "=", col});
      ++i;
    } else if (c == '(') {
      int depth = 1;
      std::size_t j = i + 1;
      while (j < s.size() && depth > 0) {
        if (s[j] == '(') ++depth;
        if (s[j] == ')') --depth;
        ++j;
      }
      if (depth > 0) throw ParseError("unclosed '('", line, col);
      out.push_back({Tok::K::Coeff, s.substr(i + 1, j - i - 2), col});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Tok::K::End, "", col0 + static_cast<int>(s.size())});
  return out;
}

class ExprParser {
 public:
  ExprParser(const MonoidalPresentation& p, std::vector<Tok> toks, int line)
      : p_(p), toks_(std::move(toks)), line_(line) {}

  // Parses a sum of terms, stopping at '=' or end of input.
  MorphismExpr parse_sum() {
    MorphismExpr e;
    int sign = +1;
    if (cur().k == Tok::K::Plus) {
      next();
    } else if (cur().k == Tok::K::Minus) {
      sign = -1;
      next();
    }
    while (true) {
      e.terms.push_back(parse_term(sign));
      if (cur().k == Tok::K::End || cur().k == Tok::K::Eq) break;
      if (cur().k == Tok::K::Plus) {
        sign = +1;
      } else if (cur().k == Tok::K::Minus) {
        sign = -1;
      } else {
        throw ParseError("expected '+' or '-' between terms", line_, cur().col);
      }
      next();
    }
    return e;
  }

  bool at_equals() const { return cur().k == Tok::K::Eq; }
  void skip_equals() { next(); }
  int column() const { return cur().col; }

 private:
  const Tok& cur() const { return toks_[pos_]; }
  void next() { ++pos_; }

  ExprTerm parse_term(int sign) {
    FieldValue coeff = FieldValue::integer(p_.tag, sign);
    if (cur().k == Tok::K::Coeff) {
      FieldValue c;
      try {
        c = parse_field_value(cur().text, p_.tag);
      } catch (const ParseError& pe) {
        // Reposition: the inner text starts one column after '('.
        throw ParseError(pe.message, line_, cur().col + pe.column);
      }
      coeff = sign < 0 ? field_neg(c) : c;
      next();
    }
    std::vector<ExprLayer> layers;
    ExprLayer layer;
    bool have = false;  // current layer saw at least one factor or "1"
    while (true) {
      const Tok& t = cur();
      if (t.k == Tok::K::Name) {
        int oi = p_.object_index(t.text);
        if (oi >= 0) {
          layer.push_back({ExprFactor::Kind::Object, oi});
        } else {
          int ei = p_.edge_index(t.text);
          if (ei < 0) throw ParseError("unknown name '" + t.text + "'", line_, t.col);
          layer.push_back({ExprFactor::Kind::Edge, ei});
        }
        have = true;
        next();
      } else if (t.k == Tok::K::Unit) {
        have = true;  // identity of the monoidal unit: contributes no factor
        next();
      } else if (t.k == Tok::K::Semi) {
        if (!have) throw ParseError("empty layer before ';'", line_, t.col);
        layers.push_back(std::move(layer));
        layer.clear();
        have = false;
        next();
      } else if (t.k == Tok::K::Coeff) {
        throw ParseError("coefficient must come first in a term", line_, t.col);
      } else {
        break;  // Plus, Minus, Eq, End
      }
    }
    if (!have) {
      if (layers.empty()) throw ParseError("expected a morphism term", line_, cur().col);
      throw ParseError("empty layer after ';'", line_, cur().col);
    }
    layers.push_back(std::move(layer));
    return ExprTerm{std::move(coeff), std::move(layers)};
  }

  const MonoidalPresentation& p_;
  std::vector<Tok> toks_;
  int line_;
  std::size_t pos_ = 0;
};

// Parses "expr" or "lhs = rhs" (folded into lhs - rhs).
MorphismExpr parse_expr_text(const MonoidalPresentation& p, const std::string& text, int line,
                             int col0, bool allow_equation) {
  ExprParser parser(p, lex_expr(text, line, col0), line);
  MorphismExpr e = parser.parse_sum();
  if (parser.at_equals()) {
    if (!allow_equation) throw ParseError("'=' is not allowed here", line, parser.column());
    parser.skip_equals();
    MorphismExpr rhs = parser.parse_sum();
    if (parser.at_equals()) throw ParseError("more than one '='", line, parser.column());
    for (auto& t : rhs.terms) {
      t.coeff = field_neg(t.coeff);
      e.terms.push_back(std::move(t));
    }
  }
  return e;
}

ObjectWord parse_object_word_at(const MonoidalPresentation& p, const std::string& text, int line,
                                int col0) {
  ObjectWord w;
  bool saw_dash = false;
  int n_tokens = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    int col = col0 + static_cast<int>(i);
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string tok = text.substr(i, j - i);
    ++n_tokens;
    if (tok == "-") {
      saw_dash = true;
    } else {
      int oi = p.object_index(tok);
      if (oi < 0) throw ParseError("unknown object '" + tok + "'", line, col);
      w.push_back(static_cast<char>(oi));
    }
    i = j;
  }
  if (n_tokens == 0) throw ParseError("expected an object word", line, col0);
  if (saw_dash && n_tokens > 1)
    throw ParseError("'-' denotes the empty word and must stand alone", line, col0);
  return w;
}

}  // namespace

void append_sum_term(std::string& out, bool& first, const FieldValue& coeff,
                     const std::string& body, FieldTag tag) {
  bool pos1 = coeff == FieldValue::one(tag);
  bool neg1 = coeff == FieldValue::integer(tag, -1);
  if (first) {
    if (pos1)
      out += body;
    else if (neg1)
      out += "- " + body;
    else
      out += "(" + to_string(coeff) + ") " + body;
    first = false;
  } else {
    if (pos1)
      out += " + " + body;
    else if (neg1)
      out += " - " + body;
    else
      out += " + (" + to_string(coeff) + ") " + body;
  }
}

// ---------------------------------------------------------------------------
// MonoidalPresentation lookups.
// ---------------------------------------------------------------------------

int MonoidalPresentation::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return static_cast<int>(i);
  return -1;
}

int MonoidalPresentation::edge_index(const std::string& name) const {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].name == name) return static_cast<int>(i);
  return -1;
}

int FrobeniusAlgebraData::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

// ---------------------------------------------------------------------------
// Algebra data.
// ---------------------------------------------------------------------------

void FrobeniusAlgebraData::validate() {
  const std::size_t n = labels.size();
  if (n == 0) throw Error("algebra must have at least one basis element");
  for (const auto& l : labels) {
    if (l.empty() || !std::all_of(l.begin(), l.end(), is_ident_char))
      throw Error("invalid algebra basis label '" + l + "'");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) throw Error("duplicate algebra basis label '" + labels[i] + "'");
  if (mul.size() != n) throw Error("algebra multiplication table has wrong size");
  for (const auto& row : mul) {
    if (row.size() != n) throw Error("algebra multiplication table has wrong size");
    for (const auto& cell : row)
      if (cell.size() != n) throw Error("algebra multiplication table has wrong size");
  }

  auto zero = FieldValue::zero(tag);
  auto one = FieldValue::one(tag);

  // Associativity: (b_i b_j) b_k == b_i (b_j b_k).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m) {
          FieldValue lhs = zero, rhs = zero;
          for (std::size_t l = 0; l < n; ++l) {
            lhs = field_add(lhs, field_mul(mul[i][j][l], mul[l][k][m]));
            rhs = field_add(rhs, field_mul(mul[j][k][l], mul[i][l][m]));
          }
          if (!(lhs == rhs))
            throw Error("algebra multiplication is not associative at (" + labels[i] + ", " +
                        labels[j] + ", " + labels[k] + ")");
        }

  // Left unit: solve sum_i u_i (b_i b_j) = b_j in coordinates.
  std::vector<std::vector<FieldValue>> rows;
  std::vector<FieldValue> rhs;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<FieldValue> row(n, zero);
      for (std::size_t i = 0; i < n; ++i) row[i] = mul[i][j][k];
      rows.push_back(std::move(row));
      rhs.push_back(j == k ? one : zero);
    }
  auto u = solve_linear(rows, rhs, tag);
  if (!u) throw Error("algebra has no unit element");
  // Right unit: sum_i u_i (b_j b_i) = b_j.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      FieldValue acc = zero;
      for (std::size_t i = 0; i < n; ++i) acc = field_add(acc, field_mul((*u)[i], mul[j][i][k]));
      if (!(acc == (j == k ? one : zero))) throw Error("algebra unit is not two-sided");
    }
  unit = *u;

  dual.reset();
  if (trace) {
    if (trace->size() != n) throw Error("algebra trace vector has wrong size");
    // Pairing G[i][j] = trace(b_i b_j); must be symmetric and nondegenerate.
    std::vector<std::vector<FieldValue>> G(n, std::vector<FieldValue>(n, zero));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        FieldValue acc = zero;
        for (std::size_t k = 0; k < n; ++k)
          acc = field_add(acc, field_mul(mul[i][j][k], (*trace)[k]));
        G[i][j] = acc;
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(G[i][j] == G[j][i])) throw Error("algebra trace form is not symmetric");
    RowSpace span(n);
    for (const auto& row : G) span.add(row);
    if (span.rank() != n) throw Error("algebra trace pairing is degenerate");
    // Dual basis rows: kappa G = identity, solved row by row.
    std::vector<std::vector<FieldValue>> kappa;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<FieldValue> ei(n, zero);
      ei[i] = one;
      auto row = solve_linear(G, ei, tag);
      if (!row) throw Error("algebra trace pairing is degenerate");
      kappa.push_back(std::move(*row));
    }
    dual = std::move(kappa);
  }
}

FrobeniusAlgebraData FrobeniusAlgebraData::cyclic_group(int n, FieldTag tag) {
  if (n < 1) throw Error("cyclic group order must be at least 1");
  FrobeniusAlgebraData a;
  a.tag = tag;
  for (int k = 0; k < n; ++k) {
    if (k == 0)
      a.labels.push_back("e");
    else if (k == 1)
      a.labels.push_back("g");
    else
      a.labels.push_back("g" + std::to_string(k));
  }
  auto zero = FieldValue::zero(tag);
  auto one = FieldValue::one(tag);
  a.mul.assign(n, std::vector<std::vector<FieldValue>>(n, std::vector<FieldValue>(n, zero)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.mul[i][j][(i + j) % n] = one;
  a.trace = std::vector<FieldValue>(n, zero);
  (*a.trace)[0] = one;
  a.validate();
  return a;
}

// ---------------------------------------------------------------------------
// Endpoints.
// ---------------------------------------------------------------------------

std::pair<ObjectWord, ObjectWord> expr_endpoints(const MonoidalPresentation& p,
                                                 const MorphismExpr& expr) {
  if (expr.terms.empty()) throw Error("empty expression has no endpoints");
  std::optional<std::pair<ObjectWord, ObjectWord>> common;
  for (const auto& term : expr.terms) {
    if (term.layers.empty()) throw Error("expression term has no layers");
    ObjectWord dom, cod;
    bool first = true;
    for (const auto& layer : term.layers) {
      ObjectWord ldom, lcod;
      for (const auto& f : layer) {
        if (f.kind == ExprFactor::Kind::Object) {
          ldom.push_back(static_cast<char>(f.index));
          lcod.push_back(static_cast<char>(f.index));
        } else {
          ldom += p.edges[f.index].dom;
          lcod += p.edges[f.index].cod;
        }
      }
      if (first) {
        dom = ldom;
        first = false;
      } else if (cod != ldom) {
        throw Error("layers do not compose: codomain " + format_object_word(p, cod) +
                    " does not match next domain " + format_object_word(p, ldom));
      }
      cod = lcod;
    }
    if (!common) {
      common = {dom, cod};
    } else if (!(common->first == dom && common->second == cod)) {
      throw Error("terms have different endpoints: " + format_object_word(p, common->first) +
                  " -> " + format_object_word(p, common->second) + " vs " +
                  format_object_word(p, dom) + " -> " + format_object_word(p, cod));
    }
  }
  return *common;
}

// ---------------------------------------------------------------------------
// Parsing.
// ---------------------------------------------------------------------------

MonoidalPresentation parse_presentation(const std::string& text) {
  MonoidalPresentation p;
  bool have_tag = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t dend = start;
    while (dend < line.size() && is_ident_char(line[dend])) ++dend;
    std::string directive = line.substr(start, dend - start);
    int dcol = static_cast<int>(start) + 1;
    std::string rest = line.substr(dend);
    int rest_col = static_cast<int>(dend) + 1;

    if (directive == "coefficients") {
      if (have_tag) throw ParseError("duplicate 'coefficients' line", line_no, dcol);
      std::string t = trim(rest);
      if (t == "Q")
        p.tag = FieldTag::Q;
      else if (t == "Q(q)")
        p.tag = FieldTag::Qq;
      else
        throw ParseError("coefficients must be 'Q' or 'Q(q)', got '" + t + "'", line_no, rest_col);
      have_tag = true;
    } else if (directive == "object") {
      std::string name = trim(rest);
      if (!is_identifier(name))
        throw ParseError("invalid object name '" + name + "'", line_no, rest_col);
      if (p.object_index(name) >= 0 || p.edge_index(name) >= 0)
        throw ParseError("name '" + name + "' is already in use", line_no, rest_col);
      if (p.objects.size() >= 127) throw ParseError("too many objects (limit 127)", line_no, dcol);
      p.objects.push_back(name);
    } else if (directive == "morphism") {
      std::size_t colon = rest.find(':');
      if (colon == std::string::npos)
        throw ParseError("expected ':' after morphism name", line_no, rest_col);
      std::string name = trim(rest.substr(0, colon));
      if (!is_identifier(name))
        throw ParseError("invalid morphism name '" + name + "'", line_no, rest_col);
      if (p.object_index(name) >= 0 || p.edge_index(name) >= 0)
        throw ParseError("name '" + name + "' is already in use", line_no, rest_col);
      if (p.edges.size() >= 127) throw ParseError("too many morphisms (limit 127)", line_no, dcol);
      std::string type = rest.substr(colon + 1);
      int type_col = rest_col + static_cast<int>(colon) + 1;
      std::size_t arrow = type.find("->");
      if (arrow == std::string::npos)
        throw ParseError("expected '->' in morphism type", line_no, type_col);
      ObjectWord dom = parse_object_word_at(p, type.substr(0, arrow), line_no, type_col);
      ObjectWord cod = parse_object_word_at(p, type.substr(arrow + 2), line_no,
                                            type_col + static_cast<int>(arrow) + 2);
      p.edges.push_back({name, std::move(dom), std::move(cod)});
    } else if (directive == "relation") {
      if (!have_tag)
        throw ParseError("'coefficients' must appear before the first relation", line_no, dcol);
      std::size_t colon = rest.find(':');
      if (colon == std::string::npos)
        throw ParseError("expected ':' after relation name", line_no, rest_col);
      std::string name = trim(rest.substr(0, colon));
      if (!is_identifier(name))
        throw ParseError("invalid relation name '" + name + "'", line_no, rest_col);
      for (const auto& r : p.relations)
        if (r.name == name)
          throw ParseError("duplicate relation name '" + name + "'", line_no, rest_col);
      std::string body = rest.substr(colon + 1);
      int body_col = rest_col + static_cast<int>(colon) + 1;
      MorphismExpr expr = parse_expr_text(p, body, line_no, body_col, /*allow_equation=*/true);
      try {
        expr_endpoints(p, expr);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no, body_col);
      }
      p.relations.push_back({name, std::move(expr)});
    } else {
      throw ParseError("unknown directive '" + directive + "'", line_no, dcol);
    }
  }
  if (!have_tag) throw ParseError("missing 'coefficients' line", 1, 1);
  return p;
}

MorphismExpr parse_morphism_expr(const MonoidalPresentation& p, const std::string& text) {
  MorphismExpr expr = parse_expr_text(p, text, 1, 1, /*allow_equation=*/false);
  expr_endpoints(p, expr);  // validate chaining and term agreement
  return expr;
}

ObjectWord parse_object_word(const MonoidalPresentation& p, const std::string& text) {
  return parse_object_word_at(p, text, 1, 1);
}

// ---------------------------------------------------------------------------
// Formatting.
// ---------------------------------------------------------------------------

std::string format_object_word(const MonoidalPresentation& p, const ObjectWord& w) {
  if (w.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += p.objects.at(static_cast<unsigned char>(w[i]));
  }
  return out;
}

std::string format_morphism_expr(const MonoidalPresentation& p, const MorphismExpr& expr) {
  std::string out;
  bool first = true;
  for (const auto& term : expr.terms) {
    std::string body;
    for (std::size_t li = 0; li < term.layers.size(); ++li) {
      if (li) body += " ; ";
      const auto& layer = term.layers[li];
      if (layer.empty()) {
        body += "1";
        continue;
      }
      for (std::size_t fi = 0; fi < layer.size(); ++fi) {
        if (fi) body += " ";
        const auto& f = layer[fi];
        body += f.kind == ExprFactor::Kind::Object ? p.objects.at(f.index) : p.edges.at(f.index).name;
      }
    }
    append_sum_term(out, first, term.coeff, body, p.tag);
  }
  if (expr.terms.empty()) out = "(0) 1";
  return out;
}

std::string serialize_presentation(const MonoidalPresentation& p) {
  std::string out = "coefficients " + tag_name(p.tag) + "\n";
  for (const auto& o : p.objects) out += "object " + o + "\n";
  for (const auto& e : p.edges)
    out += "morphism " + e.name + " : " + format_object_word(p, e.dom) + " -> " +
           format_object_word(p, e.cod) + "\n";
  for (const auto& r : p.relations)
    out += "relation " + r.name + " : " + format_morphism_expr(p, r.expr) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Built-ins.
// ---------------------------------------------------------------------------

namespace {

const char* kSymmetricSource =
    "# One strand generator and a crossing satisfying the transposition\n"
    "# and braid-move relations.\n"
    "coefficients Q\n"
    "object a\n"
    "morphism s : a a -> a a\n"
    "relation involution : s ; s = a a\n"
    "relation braid : s a ; a s ; s a = a s ; s a ; a s\n";

const char* kBraidSource =
    "# One strand generator and a pair of mutually inverse crossings\n"
    "# satisfying the braid-move relation.\n"
    "coefficients Q\n"
    "object a\n"
    "morphism sp : a a -> a a\n"
    "morphism sm : a a -> a a\n"
    "relation pos_neg : sm ; sp = a a\n"
    "relation neg_pos : sp ; sm = a a\n"
    "relation braid : sp a ; a sp ; sp a = a sp ; sp a ; a sp\n";

const char* kHeckeSource =
    "# Invertible crossings over Q(q) with the quadratic skein relation\n"
    "# relating the two crossings.\n"
    "coefficients Q(q)\n"
    "object a\n"
    "morphism sp : a a -> a a\n"
    "morphism sm : a a -> a a\n"
    "relation pos_neg : sm ; sp = a a\n"
    "relation neg_pos : sp ; sm = a a\n"
    "relation braid : sp a ; a sp ; sp a = a sp ; sp a ; a sp\n"
    "relation skein : sp = sm + (q - 1/q) a a\n";

const char* kDahaSource =
    "# Crossing plus a dot; the dot slides through the crossing at the\n"
    "# cost of an identity correction term.\n"
    "coefficients Q\n"
    "object a\n"
    "morphism s : a a -> a a\n"
    "morphism t : a -> a\n"
    "relation involution : s ; s = a a\n"
    "relation braid : s a ; a s ; s a = a s ; s a ; a s\n"
    "relation dot_slide : s ; t a = a t ; s + a a\n";

// Generates the wreath (affine = false) or affine wreath (affine = true)
// source for a validated algebra.
std::string wreath_source(const FrobeniusAlgebraData& a, bool affine) {
  const std::size_t n = a.dim();
  std::string s;
  if (!affine) {
    s += "# Crossing plus one token per basis element of the coefficient\n";
    s += "# algebra; tokens multiply pointwise and slide through crossings.\n";
  } else {
    s += "# Crossing, one token per basis element of the coefficient algebra,\n";
    s += "# and a dot that slides through the crossing at the cost of a token\n";
    s += "# correction term built from the dual bases.\n";
  }
  s += "coefficients " + tag_name(a.tag) + "\n";
  s += "object a\n";
  s += "morphism s : a a -> a a\n";
  for (const auto& l : a.labels) s += "morphism u_" + l + " : a -> a\n";
  if (affine) s += "morphism t : a -> a\n";
  s += "relation involution : s ; s = a a\n";
  s += "relation braid : s a ; a s ; s a = a s ; s a ; a s\n";
  {
    s += "relation unit : ";
    bool first = true;
    for (std::size_t b = 0; b < n; ++b) {
      if (field_is_zero(a.unit[b])) continue;
      append_sum_term(s, first, a.unit[b], "u_" + a.labels[b], a.tag);
    }
    s += " = a\n";
  }
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) {
      s += "relation mul_" + a.labels[b] + "_" + a.labels[c] + " : u_" + a.labels[c] + " ; u_" +
           a.labels[b];
      bool first = true;
      std::string rhs;
      for (std::size_t k = 0; k < n; ++k) {
        if (field_is_zero(a.mul[b][c][k])) continue;
        append_sum_term(rhs, first, a.mul[b][c][k], "u_" + a.labels[k], a.tag);
      }
      if (!rhs.empty()) s += " = " + rhs;
      s += "\n";
    }
  for (std::size_t b = 0; b < n; ++b)
    s += "relation slide_" + a.labels[b] + " : u_" + a.labels[b] + " a ; s = s ; a u_" +
         a.labels[b] + "\n";
  if (affine) {
    for (std::size_t b = 0; b < n; ++b)
      s += "relation dot_token_" + a.labels[b] + " : t ; u_" + a.labels[b] + " = u_" + a.labels[b] +
           " ; t\n";
    s += "relation affine_skein : s ; t a = a t ; s";
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const FieldValue& kappa = (*a.dual)[b][c];
        if (field_is_zero(kappa)) continue;
        s += " + ";
        if (!(kappa == FieldValue::one(a.tag))) s += "(" + to_string(kappa) + ") ";
        s += "u_" + a.labels[b] + " u_" + a.labels[c];
      }
    s += "\n";
  }
  return s;
}

// Validates algebra requirements for the given builtin; returns the validated
// copy for the wreath builtins, nullopt for the others.
std::optional<FrobeniusAlgebraData> prepare_algebra(const std::string& name,
                                                    const std::optional<FrobeniusAlgebraData>& algebra) {
  bool wreath = name == "wreath" || name == "affine-wreath";
  if (!wreath) return std::nullopt;
  if (!algebra)
    throw UsageError("builtin '" + name + "' requires algebra data (use --algebra)");
  FrobeniusAlgebraData a = *algebra;
  a.validate();
  if (name == "affine-wreath" && !a.dual)
    throw UsageError("builtin 'affine-wreath' requires an algebra with a trace form");
  return a;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"symmetric", "braid", "hecke", "daha", "wreath", "affine-wreath"};
}

std::string builtin_presentation_source(const std::string& name,
                                        const std::optional<FrobeniusAlgebraData>& algebra) {
  if (name == "symmetric") return kSymmetricSource;
  if (name == "braid") return kBraidSource;
  if (name == "hecke") return kHeckeSource;
  if (name == "daha") return kDahaSource;
  if (name == "wreath" || name == "affine-wreath")
    return wreath_source(*prepare_algebra(name, algebra), name == "affine-wreath");
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw UsageError("unknown builtin '" + name + "' (known: " + known + ")");
}

MonoidalPresentation builtin_presentation(const std::string& name,
                                          std::optional<FrobeniusAlgebraData> algebra) {
  auto prepared = prepare_algebra(name, algebra);
  MonoidalPresentation p = parse_presentation(builtin_presentation_source(name, algebra));
  p.algebra = std::move(prepared);
  return p;
}

}  // namespace mcat
