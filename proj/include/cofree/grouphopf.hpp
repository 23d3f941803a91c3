#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cofree/braid.hpp"
#include "cofree/error.hpp"
#include "cofree/lincomb.hpp"
#include "cofree/qalg.hpp"

namespace cofree {

/// Element of Z^rank x Z/m_1 x ... x Z/m_k, stored as its exponent vector
/// (free exponents first). Torsion exponents are kept reduced.
struct GroupElement {
  std::vector<int> exps;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finitely generated abelian group Z^rank x prod Z/m_k.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// `names` labels the generators (free first); defaults to K1, K2, ...
  AbelianGroup(int rank, std::vector<int> torsion, std::vector<std::string> names = {});

  int rank() const { return rank_; }
  const std::vector<int>& torsion() const { return torsion_; }
  std::size_t generators() const { return static_cast<std::size_t>(rank_) + torsion_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find_generator(const std::string& name) const;
  /// Order of generator k, or 0 for a free generator.
  int order(std::size_t k) const;

  GroupElement identity() const;
  GroupElement generator(std::size_t k, int power = 1) const;
  /// Reduces torsion exponents; throws on a wrong-length vector.
  GroupElement make(std::vector<int> exps) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  bool is_identity(const GroupElement& a) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.rank_ == b.rank_ && a.torsion_ == b.torsion_ && a.names_ == b.names_;
  }

 private:
  int rank_ = 0;
  std::vector<int> torsion_;
  std::vector<std::string> names_;
};

/// "K{e1,...,ek}"; the trivial group renders as "K{}".
std::string render_group(const GroupElement& g);

template <>
struct KeyTraits<GroupElement> {
  static std::size_t degree(const GroupElement&) { return 0; }
};

using GroupPair = std::pair<GroupElement, GroupElement>;
template <>
struct KeyTraits<GroupPair> {
  static std::size_t degree(const GroupPair&) { return 0; }
};

/// Basis key v#g of T(V)#H.
using SmashKey = std::pair<Word, GroupElement>;
template <>
struct KeyTraits<SmashKey> {
  static std::size_t degree(const SmashKey& k) { return k.first.size(); }
};

/// Element of K[G].
using GroupAlgebraElement = LinComb<GroupElement>;
/// Element of K[G] (x)bar K[G].
using GroupPairElement = LinComb<GroupPair>;
/// Element of T(V)#H.
using SmashElement = LinComb<SmashKey>;

std::string render(const GroupAlgebraElement& h);
std::string render(const GroupPairElement& h);
/// Terms "word#K{..}" (empty word renders as "#K{..}" with nothing before '#').
std::string render(const SmashElement& x);

/// Hopf structure of K[G].
GroupPairElement hopf_coproduct(const GroupAlgebraElement& h);
Scalar hopf_counit(const GroupAlgebraElement& h);
GroupAlgebraElement hopf_antipode(const AbelianGroup& group, const GroupAlgebraElement& h);
GroupAlgebraElement hopf_multiply(const AbelianGroup& group, const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// Square matrix over Scalars; entry [r][c] is the coefficient of letter r in
/// the image of letter c.
using ActionMatrix = std::vector<std::vector<Scalar>>;

ActionMatrix identity_matrix(std::size_t dim);
ActionMatrix matrix_product(const ActionMatrix& a, const ActionMatrix& b);
/// Inverse by Gauss-Jordan elimination with monomial pivots. Throws
/// StructuralError when no monomial pivot is available.
ActionMatrix matrix_inverse(const ActionMatrix& a);

/// Yetter-Drinfeld module over K[G] for abelian G, with optional algebra structure.
///
/// Construction checks shapes only; the YD identity, commutation of the
/// action matrices and torsion orders are reported by check_yd.
class YDSpec {
 public:
  YDSpec() = default;
  YDSpec(AbelianGroup group, AlphabetRef alphabet, std::vector<GroupElement> degrees, std::vector<ActionMatrix> actions,
         std::optional<LocalTable> mult = std::nullopt, std::optional<Letter> unit = std::nullopt);

  const AbelianGroup& group() const { return group_; }
  const AlphabetRef& alphabet() const { return alphabet_; }
  std::size_t dim() const { return degrees_.size(); }
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  const GroupElement& degree(Letter l) const { return degrees_.at(static_cast<std::size_t>(l)); }
  /// Product of the letter degrees of w (identity for the empty word).
  GroupElement degree(const Word& w) const;
  const std::vector<ActionMatrix>& actions() const { return actions_; }
  const std::optional<LocalTable>& mult() const { return mult_; }
  const std::optional<Letter>& unit() const { return unit_; }

  /// g . letter, as an element over length-1 words.
  Element act(const GroupElement& g, Letter l) const;
  /// Diagonal action of g on every word of x.
  Element act(const GroupElement& g, const Element& x) const;

  friend bool operator==(const YDSpec& a, const YDSpec& b);

 private:
  AbelianGroup group_;
  AlphabetRef alphabet_;
  std::vector<GroupElement> degrees_;
  std::vector<ActionMatrix> actions_;
  std::vector<ActionMatrix> inverse_actions_;
  std::optional<LocalTable> mult_;
  std::optional<Letter> unit_;
};

/// Definition of a YD module evaluated for every generator and letter, plus
/// commutation of the action matrices and the torsion orders.
CheckResult check_yd(const YDSpec& spec);

/// sigma(v (x) w) = deg(v) . w (x) v.
BraidingTable induced_braiding(const YDSpec& spec);

/// The braided algebra (V, m, induced sigma); a spec without mult gets m = 0.
BraidedAlgebraSpec braided_spec(const YDSpec& spec);

/// m is a comodule and module morphism, the unit (if any) is invariant of
/// neutral degree, and the induced braided algebra passes check_braided_algebra.
/// Throws StructuralError when the spec has no multiplication.
CheckResult check_yd_algebra(const YDSpec& spec);

/// Appends a unit letter of neutral degree with trivial action.
YDSpec adjoin_unit(const YDSpec& spec, const std::string& unit_name = "one");

}  // namespace cofree
