#include "cofree/scalar.hpp"

#include <sstream>

#include "cofree/error.hpp"

namespace cofree {

Scalar::Scalar(long value) {
  if (value != 0) terms_.emplace(0, Rational(value));
}

Scalar::Scalar(const Rational& value) { add_term(0, value); }

Scalar Scalar::monomial(const Rational& coeff, int exponent) {
  Scalar s;
  s.add_term(exponent, coeff);
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rational Scalar::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Scalar::min_exponent() const {
  if (terms_.empty()) throw StructuralError("min_exponent of zero scalar");
  return terms_.begin()->first;
}

int Scalar::max_exponent() const {
  if (terms_.empty()) throw StructuralError("max_exponent of zero scalar");
  return terms_.rbegin()->first;
}

Scalar Scalar::inverse() const {
  if (!is_monomial()) throw StructuralError("scalar " + to_string() + " is not a unit of Q[q, q^-1]");
  const auto& [e, c] = *terms_.begin();
  return monomial(Rational(1) / c, -e);
}

Scalar Scalar::shifted(int k) const {
  Scalar out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

Rational Scalar::evaluate(const Rational& q) const {
  if (q == 0) throw StructuralError("Laurent polynomial evaluated at q = 0");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational power = 1;
    const Rational base = e >= 0 ? q : Rational(1) / q;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) power *= base;
    sum += c * power;
  }
  return sum;
}

void Scalar::add_term(int exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar& Scalar::operator+=(const Scalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

Scalar& Scalar::operator*=(const Scalar& other) { return *this = *this * other; }

Scalar Scalar::operator-() const {
  Scalar out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
  return out;
}

namespace {

std::string monomial_body(const Rational& magnitude, int e) {
  std::string q;
  if (e == 1) q = "q";
  else if (e != 0) q = "q^" + std::to_string(e);
  if (e == 0) return magnitude.get_str();
  if (magnitude == 1) return q;
  return magnitude.get_str() + " " + q;
}

}  // namespace

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += monomial_body(magnitude, e);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace cofree
