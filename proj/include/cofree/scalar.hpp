#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>

namespace cofree {

using Rational = mpq_class;

/// A Laurent polynomial in q with exact rational coefficients.
///
/// Canonical form: no zero coefficient is ever stored, so structural equality
/// is mathematical equality. The only invertible elements are the monomials
/// c*q^k (c != 0); general division is not offered.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value);  // NOLINT: integer literals are scalars
  Scalar(const Rational& value);  // NOLINT

  static Scalar monomial(const Rational& coeff, int exponent);
  static Scalar q_power(int exponent) { return monomial(1, exponent); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Inverse of a monomial unit c*q^k. Throws StructuralError otherwise.
  Scalar inverse() const;
  /// Multiplication by q^k.
  Scalar shifted(int k) const;
  /// Value at a nonzero rational q.
  Rational evaluate(const Rational& q) const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Exponents ascending, e.g. "1 - 2 q^2", "q^-1", "1/2 q".
  std::string to_string() const;

 private:
  void add_term(int exponent, const Rational& coeff);
  std::map<int, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cofree
