#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cofree/cotensor.hpp"
#include "cofree/error.hpp"
#include "cofree/qalg.hpp"

namespace cofree {

/// An algebra with an endomorphism and a weight, to be checked against the
/// Rota-Baxter identity P(x)P(y) = P(xP(y)) + P(P(x)y) + w P(xy).
template <class T>
struct RBInstance {
  std::function<T(const T&, const T&)> product;
  std::function<T(const T&)> op;
  Scalar weight = 1;
};

/// x P(y) + P(x) y + w xy.
template <class T>
T heart(const RBInstance<T>& inst, const T& x, const T& y) {
  T out = inst.product(x, inst.op(y));
  out += inst.product(inst.op(x), y);
  out += inst.weight * inst.product(x, y);
  return out;
}

/// The instance (product, s P, s w).
template <class T>
RBInstance<T> scaled(const RBInstance<T>& inst, const Scalar& s) {
  auto op = inst.op;
  return RBInstance<T>{inst.product, [op, s](const T& x) { return s * op(x); }, s * inst.weight};
}

/// Evaluates both sides of the identity on one pair.
template <class T>
CheckResult rb_check(const RBInstance<T>& inst, const T& x, const T& y) {
  const T lhs = inst.product(inst.op(x), inst.op(y));
  T rhs = inst.op(inst.product(x, inst.op(y)));
  rhs += inst.op(inst.product(inst.op(x), y));
  rhs += inst.weight * inst.op(inst.product(x, y));
  if (!(lhs == rhs)) return CheckResult::fail("(" + render(x) + ", " + render(y) + ")", render(lhs), render(rhs));
  return CheckResult::pass();
}

/// Evaluates both sides of the identity on every ordered pair of samples.
template <class T>
CheckResult rb_check(const RBInstance<T>& inst, const std::vector<T>& samples) {
  for (const auto& x : samples)
    for (const auto& y : samples)
      if (auto r = rb_check(inst, x, y); !r) return r;
  return CheckResult::pass();
}

/// Associativity of a product on every ordered triple of samples.
template <class T>
CheckResult associativity_check(const std::function<T(const T&, const T&)>& product, const std::vector<T>& samples) {
  for (const auto& x : samples)
    for (const auto& y : samples) {
      const T xy = product(x, y);
      for (const auto& z : samples) {
        const T lhs = product(xy, z);
        const T rhs = product(x, product(y, z));
        if (!(lhs == rhs))
          return CheckResult::fail("(" + render(x) + ", " + render(y) + ", " + render(z) + ")", render(lhs), render(rhs));
      }
    }
  return CheckResult::pass();
}

/// P(lambda) = lambda 1_A and P(x) = 1_A (x) x on T^+(A). Throws on a non-unital spec.
Element P_qsh(const BraidedAlgebraSpec& spec, const Element& x);

/// (T(A), quasi-shuffle, P) with weight 1. The instance refers to `spec`,
/// which must outlive it (likewise for the other *_instance builders).
RBInstance<Element> qsh_instance(const BraidedAlgebraSpec& spec);

/// (m (x) qsh)(id (x) beta (x) id) on A (x)bar T(A), stored as words whose
/// first letter is the A-leg. Throws on an empty word.
Element lozenge(const BraidedAlgebraSpec& spec, const Element& u, const Element& w);
/// Q(a (x)bar x) = 1_A (x)bar (a (x) x).
Element Q_op(const BraidedAlgebraSpec& spec, const Element& u);
/// (A (x)bar T(A), lozenge, Q) with weight 1.
RBInstance<Element> lozenge_instance(const BraidedAlgebraSpec& spec);

/// f((a|x) heart (b|y)) == (a x) qsh (b y) on every pair of samples, where
/// heart is built from lozenge and `q_op`.
CheckResult prop34_check(const BraidedAlgebraSpec& spec, const std::vector<Element>& samples,
                         const std::function<Element(const Element&)>& q_op);
CheckResult prop34_check(const BraidedAlgebraSpec& spec, const std::vector<Element>& samples);

/// P applied to the T(V) leg, group leg fixed.
SmashElement P_tilde(const HopfBimodule& m, const SmashElement& x);
/// The same operator transported to T^c_H(M) through to_smash / from_smash.
CotensorElement P_tilde(const HopfBimodule& m, const CotensorElement& x);

RBInstance<SmashElement> smash_instance(const HopfBimodule& m);
RBInstance<CotensorElement> cotensor_instance(const HopfBimodule& m);

}  // namespace cofree
