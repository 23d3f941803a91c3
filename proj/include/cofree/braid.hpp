#pragma once

#include <cstddef>
#include <vector>

#include "cofree/error.hpp"
#include "cofree/lincomb.hpp"

namespace cofree {

/// A permutation of {1..n} in one-line notation, acting on tensor positions:
/// the letter at position p moves to position w(p). Composition `v.after(w)`
/// applies w first.
class Permutation {
 public:
  Permutation() = default;
  /// Throws StructuralError unless `images` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);
  /// The simple transposition s_i of S_n (1 <= i < n).
  static Permutation simple(std::size_t n, int i);

  std::size_t size() const { return images_.size(); }
  int operator()(int position) const { return images_[static_cast<std::size_t>(position - 1)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  std::size_t inversions() const;

  /// this o first.
  Permutation after(const Permutation& first) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// All permutations of {1..n} in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t n);

/// Generator indices i_1..i_l with w = s_{i_1} o ... o s_{i_l} and l = inversions(w).
/// Deterministic: peels off the smallest right descent first.
std::vector<int> reduced_word(const Permutation& w);
/// Every reduced word of w (used by the well-definedness tests).
std::vector<std::vector<int>> all_reduced_words(const Permutation& w);

/// Block rotation in S_{i+j} with images (j+1, ..., j+i, 1, ..., j).
Permutation chi(int i, int j);

/// Moves the letter at position p to position w(p).
Word permute_positions(const Permutation& w, const Word& word);

/// Braiding on V given by its values on basis pairs. Construction checks that
/// every entry is present, lives on length-2 words, and that the operator is
/// invertible over the fraction field Q(q).
class BraidingTable {
 public:
  /// Largest connected block of the V(x)V matrix eliminated during the
  /// invertibility check.
  static constexpr std::size_t kDefaultEliminationCap = 64;

  BraidingTable() = default;
  explicit BraidingTable(LocalTable table, std::size_t elimination_cap = kDefaultEliminationCap);

  static BraidingTable flip(AlphabetRef alphabet);

  std::size_t dim() const { return table_.dim(); }
  const LocalTable& table() const { return table_; }
  const AlphabetRef& alphabet() const { return table_.alphabet(); }
  const Element& operator()(Letter a, Letter b) const { return table_.at(a, b); }

  friend bool operator==(const BraidingTable& a, const BraidingTable& b) { return a.table_ == b.table_; }

 private:
  LocalTable table_;
};

/// Exact invertibility of a V(x)V operator over Q(q). Throws StructuralError
/// when a connected block exceeds `cap`.
bool is_invertible(const LocalTable& table, std::size_t cap = BraidingTable::kDefaultEliminationCap);

/// (s(x)id)(id(x)s)(s(x)id) == (id(x)s)(s(x)id)(id(x)s) on every basis word of V^{(x)3}.
CheckResult check_yang_baxter(const BraidingTable& sigma);

/// Applies s_{i_1} ... s_{i_l} (s_{i_l} first) with positions shifted by `offset`.
Element apply_braid_word(const BraidingTable& sigma, const std::vector<int>& word, const Element& x, std::size_t offset = 0);

/// T^sigma_w for one reduced word of w. Every word of x must have length |w|.
Element lift_Tw(const BraidingTable& sigma, const Permutation& w, const Element& x);

/// beta_{ij} on V^{(x)i} (x)bar V^{(x)j}, presented as words of length i+j.
/// beta_{0j} and beta_{i0} are the identity.
Element beta(const BraidingTable& sigma, int i, int j, const Element& x);

/// beta on T(V) (x)bar T(V): each pair (u, v) becomes beta_{|u|,|v|}(u v)
/// split after |v| letters.
PairElement beta(const BraidingTable& sigma, const PairElement& x);

}  // namespace cofree
