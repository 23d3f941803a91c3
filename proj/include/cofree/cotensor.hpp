#pragma once

#include <compare>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cofree/grouphopf.hpp"
#include "cofree/qalg.hpp"

namespace cofree {

/// Basis element v (x) g of the Hopf bimodule M = V (x) H.
struct MLetter {
  Letter letter = 0;
  GroupElement group;

  friend bool operator==(const MLetter&, const MLetter&) = default;
  friend auto operator<=>(const MLetter&, const MLetter&) = default;
};

/// m^1 [] ... [] m^n; a basis word of M^{[]n} when the chain condition holds.
using MWord = std::vector<MLetter>;

/// Basis of T^c_H(M): a group element (degree 0) or an M-word.
using CBasis = std::variant<GroupElement, MWord>;

template <>
struct KeyTraits<CBasis> {
  static std::size_t degree(const CBasis& b) {
    if (const auto* w = std::get_if<MWord>(&b)) return w->size();
    return 0;
  }
};

using CPair = std::pair<CBasis, CBasis>;
template <>
struct KeyTraits<CPair> {
  static std::size_t degree(const CPair& p) { return KeyTraits<CBasis>::degree(p.first) + KeyTraits<CBasis>::degree(p.second); }
};

using CTuple = std::vector<CBasis>;
template <>
struct KeyTraits<CTuple> {
  static std::size_t degree(const CTuple& t) {
    std::size_t d = 0;
    for (const auto& b : t) d += KeyTraits<CBasis>::degree(b);
    return d;
  }
};

/// Element of T^c_H(M) = H + sum_n M^{[]n}.
using CotensorElement = LinComb<CBasis>;
/// Element of T^c_H(M) (x)bar T^c_H(M).
using CPairElement = LinComb<CPair>;
/// Element of the n-fold tensor power of T^c_H(M).
using CTupleElement = LinComb<CTuple>;

std::string render_mword(const MWord& w, const Alphabet* alphabet);
std::string render_basis(const CBasis& b, const Alphabet* alphabet);
std::string render(const CotensorElement& x);
std::string render(const CPairElement& x);
std::string render(const CTupleElement& x);

/// A Yetter-Drinfeld module algebra V over K[G] together with the derived
/// Hopf bimodule M = V (x) H and the braided algebra structure on V.
class HopfBimodule {
 public:
  explicit HopfBimodule(YDSpec spec);

  const YDSpec& yd() const { return yd_; }
  const AbelianGroup& group() const { return yd_.group(); }
  const AlphabetRef& alphabet() const { return yd_.alphabet(); }
  const BraidedAlgebraSpec& algebra() const { return algebra_; }

 private:
  YDSpec yd_;
  BraidedAlgebraSpec algebra_;
};

CotensorElement group_element(const HopfBimodule& m, const GroupElement& g, const Scalar& c = 1);
/// i : H -> T^c_H(M).
CotensorElement include_group(const HopfBimodule& m, const GroupAlgebraElement& h);
CotensorElement mword_element(const HopfBimodule& m, MWord w, const Scalar& c = 1);
/// pi : T^c_H(M) -> H.
GroupAlgebraElement project_group(const CotensorElement& x);
/// p : T^c_H(M) -> M, the degree-one part.
CotensorElement project_degree_one(const CotensorElement& x);

/// Chain condition g_k = deg(v_{k+1}) g_{k+1} at every cut of every word.
CheckResult cotensor_check(const HopfBimodule& m, const CotensorElement& x);
/// The same membership decided by evaluating id (x) delta_L - delta_R (x) id
/// at every cut.
CheckResult cotensor_kernel_check(const HopfBimodule& m, const CotensorElement& x);

/// Diagonal left and right H-actions on T^c_H(M).
CotensorElement left_action(const HopfBimodule& m, const GroupElement& g, const CotensorElement& x);
CotensorElement right_action(const HopfBimodule& m, const CotensorElement& x, const GroupElement& g);

CPairElement coproduct(const HopfBimodule& m, const CotensorElement& x);
Scalar counit(const CotensorElement& x);
/// Delta^{(n-1)} as (Delta^{(n-2)} (x) id) Delta, producing n-fold tensors.
CTupleElement iterated_coproduct(const HopfBimodule& m, const CotensorElement& x, std::size_t n);

/// The product F = g + sum_n f^{(x)n} Delta^{(n-1)} induced on
/// T^c_H(M) (x)bar T^c_H(M) by the universal property.
CotensorElement star(const HopfBimodule& m, const CotensorElement& x, const CotensorElement& y);
/// (a (x) b) * (c (x) d) = (a * c) (x) (b * d).
CPairElement star(const HopfBimodule& m, const CPairElement& x, const CPairElement& y);

/// Pi = id convolved with i S pi.
CotensorElement radford_projection(const HopfBimodule& m, const CotensorElement& x);
/// P_R evaluated directly: every word is translated on the right by its final group inverse.
CotensorElement radford_projection_direct(const HopfBimodule& m, const CotensorElement& x);

/// Right-coinvariant element to T(V). Throws StructuralError otherwise.
Element phi(const HopfBimodule& m, const CotensorElement& x);
/// T(V) into the right coinvariants.
CotensorElement psi(const HopfBimodule& m, const Element& x);

/// (x#g)(y#g') = (x * (g.y)) # gg' with the quantum quasi-shuffle product on T(V).
SmashElement star_smash(const HopfBimodule& m, const SmashElement& x, const SmashElement& y);
SmashElement to_smash(const HopfBimodule& m, const CotensorElement& x);
CotensorElement from_smash(const HopfBimodule& m, const SmashElement& x);

/// (Pi (x) Pi) Delta.
CPairElement braided_coproduct_coinv(const HopfBimodule& m, const CotensorElement& x);

}  // namespace cofree
