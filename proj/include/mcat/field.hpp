// Exact coefficient arithmetic: the rationals Q and the rational function
// field Q(q) in one variable, both in canonical form so that structural
// equality coincides with value equality.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <variant>
#include <vector>

#include "mcat/error.hpp"

namespace mcat {

using Integer = boost::multiprecision::cpp_int;
// Canonical: gcd(num, den) = 1, den > 0 (maintained by boost).
using Rational = boost::multiprecision::cpp_rational;

// Which coefficient field a presentation (and everything derived from it)
// works over. Values of different tags never mix.
enum class FieldTag { Q, Qq };

std::string to_string(FieldTag tag);  // "Q" / "Q(q)"

// ---------------------------------------------------------------------------
// Dense univariate polynomial over Q in the variable q.
// Invariant: no trailing zero coefficients (zero polynomial = empty vector).
// ---------------------------------------------------------------------------
class QPolynomial {
 public:
  QPolynomial() = default;                 // zero
  explicit QPolynomial(Rational c);        // constant
  static QPolynomial variable();           // q
  static QPolynomial monomial(Rational c, int power);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Rational leading() const;                // leading coefficient; 0 for zero
  Rational coeff(int power) const;

  QPolynomial operator+(const QPolynomial&) const;
  QPolynomial operator-(const QPolynomial&) const;
  QPolynomial operator*(const QPolynomial&) const;
  QPolynomial operator-() const;
  QPolynomial scaled(const Rational&) const;
  bool operator==(const QPolynomial&) const = default;

  // Euclidean division by a nonzero divisor: *this = q * d + r, deg r < deg d.
  struct DivMod;
  DivMod divmod(const QPolynomial& d) const;

  // Monic gcd (zero if both arguments are zero).
  static QPolynomial gcd(QPolynomial a, QPolynomial b);

  // Canonical text: terms by descending power, e.g. "q^2 - 1", "-1/2*q + 3".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;  // c_[k] = coefficient of q^k
};

struct QPolynomial::DivMod {
  QPolynomial quot, rem;
};

// ---------------------------------------------------------------------------
// Element of Q(q) as num/den with den monic and gcd(num, den) = 1.
// Zero is 0/1. Canonical form makes equality structural.
// ---------------------------------------------------------------------------
class RationalFunction {
 public:
  RationalFunction();                                   // zero
  explicit RationalFunction(Rational c);                // constant
  RationalFunction(QPolynomial num, QPolynomial den);   // normalizes; den != 0
  static RationalFunction variable();                   // q

  const QPolynomial& num() const { return num_; }
  const QPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction&) const;
  RationalFunction operator-(const RationalFunction&) const;
  RationalFunction operator*(const RationalFunction&) const;
  RationalFunction operator-() const;
  RationalFunction inverse() const;  // throws Error on zero
  bool operator==(const RationalFunction&) const = default;

  // Canonical text: "q + 1", "(q^2 - 1)/q", "1/(q - 1)".
  std::string str() const;

 private:
  void normalize();
  QPolynomial num_, den_;
};

// ---------------------------------------------------------------------------
// A scalar from one of the two supported fields. The tag is fixed at
// construction; combining values of different tags throws Error.
// ---------------------------------------------------------------------------
class FieldValue {
 public:
  FieldValue() : v_(Rational(0)) {}  // 0 over Q
  explicit FieldValue(Rational r) : v_(std::move(r)) {}
  explicit FieldValue(RationalFunction f) : v_(std::move(f)) {}

  static FieldValue zero(FieldTag tag);
  static FieldValue one(FieldTag tag);
  static FieldValue integer(FieldTag tag, long n);
  static FieldValue from_rational(FieldTag tag, const Rational& r);

  FieldTag tag() const { return std::holds_alternative<Rational>(v_) ? FieldTag::Q : FieldTag::Qq; }
  const Rational& rational() const;              // requires tag Q
  const RationalFunction& function() const;      // requires tag Qq

  bool operator==(const FieldValue&) const = default;

 private:
  std::variant<Rational, RationalFunction> v_;
};

FieldValue field_add(const FieldValue&, const FieldValue&);
FieldValue field_sub(const FieldValue&, const FieldValue&);
FieldValue field_mul(const FieldValue&, const FieldValue&);
FieldValue field_neg(const FieldValue&);
FieldValue field_inv(const FieldValue&);  // throws Error on zero
bool field_is_zero(const FieldValue&);
bool field_is_one(const FieldValue&);
std::string to_string(const FieldValue&);

// Parse a coefficient expression over the given field. Supports integers,
// fractions, the variable q (tag Qq only), + - * /, implicit multiplication
// by juxtaposition, parentheses, and ^ with (possibly negative) integer
// exponents: "3", "3/2", "q^2 - 1", "(q^2-1)/q", "q - 1/q", "q^-1".
// Column numbers in errors are 1-based offsets into `text`.
FieldValue parse_field_value(const std::string& text, FieldTag tag);

}  // namespace mcat
