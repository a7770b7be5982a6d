#include "mcat/field.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace mcat {

std::string to_string(FieldTag tag) { return tag == FieldTag::Q ? "Q" : "Q(q)"; }

// ---------------------------------------------------------------------------
// QPolynomial
// ---------------------------------------------------------------------------

QPolynomial::QPolynomial(Rational c) {
  if (c != 0) c_.push_back(std::move(c));
}

QPolynomial QPolynomial::variable() { return monomial(1, 1); }

QPolynomial QPolynomial::monomial(Rational c, int power) {
  QPolynomial p;
  if (c != 0) {
    p.c_.assign(static_cast<std::size_t>(power) + 1, Rational(0));
    p.c_.back() = std::move(c);
  }
  return p;
}

Rational QPolynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational QPolynomial::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(power)];
}

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  QPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.trim();
  return r;
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const { return *this + (-o); }

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPolynomial QPolynomial::scaled(const Rational& k) const {
  if (k == 0) return {};
  QPolynomial r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  QPolynomial r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

QPolynomial::DivMod QPolynomial::divmod(const QPolynomial& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  QPolynomial rem = *this, quot;
  quot.c_.assign(c_.size(), Rational(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int k = rem.degree() - d.degree();
    Rational f = rem.leading() / d.leading();
    quot.c_[static_cast<std::size_t>(k)] += f;
    rem = rem - d * monomial(f, k);
  }
  quot.trim();
  return {quot, rem};
}

QPolynomial QPolynomial::gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    QPolynomial r = a.divmod(b).rem;
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) b = b.scaled(1 / b.leading());  // keep coefficients tame
  }
  if (!a.is_zero()) a = a.scaled(1 / a.leading());  // monic
  return a;
}

namespace {
std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}
}  // namespace

std::string QPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(k);
    if (c == 0) continue;
    bool first = out.empty();
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    std::string mag;
    if (k == 0) {
      mag = rational_str(a);
    } else {
      std::string var = (k == 1) ? "q" : "q^" + std::to_string(k);
      mag = (a == 1) ? var : rational_str(a) + "*" + var;
    }
    if (first)
      out = (neg ? "-" : "") + mag;
    else
      out += (neg ? " - " : " + ") + mag;
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalFunction
// ---------------------------------------------------------------------------

RationalFunction::RationalFunction() : num_(), den_(Rational(1)) {}

RationalFunction::RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}

RationalFunction::RationalFunction(QPolynomial num, QPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(QPolynomial::variable(), QPolynomial(Rational(1)));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = QPolynomial(Rational(1));
    return;
  }
  QPolynomial g = QPolynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).quot;
    den_ = den_.divmod(g).quot;
  }
  Rational lc = den_.leading();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  return RationalFunction(den_, num_);
}

std::string RationalFunction::str() const {
  if (den_ == QPolynomial(Rational(1))) return num_.str();
  auto wrap = [](const QPolynomial& p) {
    // Parenthesize sums; single monomials reparse correctly unwrapped.
    int terms = 0;
    for (const auto& c : p.coeffs())
      if (c != 0) ++terms;
    std::string s = p.str();
    return terms > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

// ---------------------------------------------------------------------------
// FieldValue
// ---------------------------------------------------------------------------

FieldValue FieldValue::zero(FieldTag tag) { return integer(tag, 0); }
FieldValue FieldValue::one(FieldTag tag) { return integer(tag, 1); }

FieldValue FieldValue::integer(FieldTag tag, long n) { return from_rational(tag, Rational(n)); }

FieldValue FieldValue::from_rational(FieldTag tag, const Rational& r) {
  if (tag == FieldTag::Q) return FieldValue(r);
  return FieldValue(RationalFunction(r));
}

const Rational& FieldValue::rational() const {
  if (tag() != FieldTag::Q) throw Error("field value is not over Q");
  return std::get<Rational>(v_);
}

const RationalFunction& FieldValue::function() const {
  if (tag() != FieldTag::Qq) throw Error("field value is not over Q(q)");
  return std::get<RationalFunction>(v_);
}

namespace {
void require_same_tag(const FieldValue& a, const FieldValue& b) {
  if (a.tag() != b.tag())
    throw Error("cannot combine values over " + to_string(a.tag()) + " and " + to_string(b.tag()));
}
}  // namespace

FieldValue field_add(const FieldValue& a, const FieldValue& b) {
  require_same_tag(a, b);
  if (a.tag() == FieldTag::Q) return FieldValue(Rational(a.rational() + b.rational()));
  return FieldValue(a.function() + b.function());
}

FieldValue field_sub(const FieldValue& a, const FieldValue& b) {
  return field_add(a, field_neg(b));
}

FieldValue field_mul(const FieldValue& a, const FieldValue& b) {
  require_same_tag(a, b);
  if (a.tag() == FieldTag::Q) return FieldValue(Rational(a.rational() * b.rational()));
  return FieldValue(a.function() * b.function());
}

FieldValue field_neg(const FieldValue& a) {
  if (a.tag() == FieldTag::Q) return FieldValue(Rational(-a.rational()));
  return FieldValue(-a.function());
}

FieldValue field_inv(const FieldValue& a) {
  if (field_is_zero(a)) throw Error("inverse of zero");
  if (a.tag() == FieldTag::Q) return FieldValue(Rational(1 / a.rational()));
  return FieldValue(a.function().inverse());
}

bool field_is_zero(const FieldValue& a) {
  return a.tag() == FieldTag::Q ? a.rational() == 0 : a.function().is_zero();
}

bool field_is_one(const FieldValue& a) {
  return a == FieldValue::one(a.tag());
}

std::string to_string(const FieldValue& a) {
  if (a.tag() == FieldTag::Q) return rational_str(a.rational());
  return a.function().str();
}

// ---------------------------------------------------------------------------
// Coefficient expression parser (recursive descent).
// Grammar:  expr   := ['+'|'-'] term (('+'|'-') term)*
//           term   := factor (('*'|'/'|juxtaposition) factor)*
//           factor := atom ['^' ['-'] integer]
//           atom   := integer | 'q' | '(' expr ')'
// ---------------------------------------------------------------------------
namespace {

class FieldParser {
 public:
  FieldParser(const std::string& text, FieldTag tag) : text_(text), tag_(tag) {}

  FieldValue parse() {
    FieldValue v = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_atom() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == '(';
  }

  FieldValue expr() {
    bool neg = false;
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      neg = (c == '-');
    }
    FieldValue v = term();
    if (neg) v = field_neg(v);
    while (true) {
      c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        FieldValue rhs = term();
        v = (c == '+') ? field_add(v, rhs) : field_sub(v, rhs);
      } else {
        return v;
      }
    }
  }

  FieldValue term() {
    FieldValue v = factor();
    while (true) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        FieldValue rhs = factor();
        if (c == '*') {
          v = field_mul(v, rhs);
        } else {
          if (field_is_zero(rhs)) fail("division by zero");
          v = field_mul(v, field_inv(rhs));
        }
      } else if (starts_atom()) {
        v = field_mul(v, factor());  // juxtaposition
      } else {
        return v;
      }
    }
  }

  FieldValue factor() {
    FieldValue v = atom();
    if (peek() == '^') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        ++pos_;
        neg = true;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
      long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + (text_[pos_] - '0');
        if (e > 4096) fail("exponent too large");
        ++pos_;
      }
      FieldValue base = v;
      if (neg) {
        if (field_is_zero(base)) fail("division by zero");
        base = field_inv(base);
      }
      v = FieldValue::one(tag_);
      for (long i = 0; i < e; ++i) v = field_mul(v, base);
    }
    return v;
  }

  FieldValue atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      FieldValue v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'q') {
      if (tag_ != FieldTag::Qq) fail("the variable q is only available over Q(q)");
      ++pos_;
      return FieldValue(RationalFunction::variable());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      return FieldValue::from_rational(tag_, Rational(n));
    }
    fail("expected a number, q, or '('");
  }

  const std::string& text_;
  FieldTag tag_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldValue parse_field_value(const std::string& text, FieldTag tag) {
  return FieldParser(text, tag).parse();
}

}  // namespace mcat
