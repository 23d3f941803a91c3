#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cofree/braid.hpp"
#include "cofree/error.hpp"
#include "cofree/lincomb.hpp"

namespace cofree {

/// Element of T(A) with mixed lengths; the empty word carries the scalar part.
using GradedElement = Element;

/// Finite-dimensional braided algebra (A, m, sigma) given by structure constants.
/// Missing multiplication entries are stored explicitly as zero.
class BraidedAlgebraSpec {
 public:
  BraidedAlgebraSpec() = default;
  /// `mult` may leave entries unset (they become 0); set entries must lie on
  /// length-1 words. Axioms are not checked here: see check_braided_algebra.
  BraidedAlgebraSpec(BraidingTable braiding, LocalTable mult, std::optional<Letter> unit = std::nullopt);

  std::size_t dim() const { return braiding_.dim(); }
  const AlphabetRef& alphabet() const { return braiding_.alphabet(); }
  const BraidingTable& braiding() const { return braiding_; }
  const LocalTable& mult() const { return mult_; }
  const std::optional<Letter>& unit() const { return unit_; }

  const Element& multiply(Letter a, Letter b) const { return mult_.at(a, b); }

 private:
  BraidingTable braiding_;
  LocalTable mult_;
  std::optional<Letter> unit_;
};

/// Both braided-compatibility identities on A^{(x)3}, associativity on basis
/// triples, and the unit laws when a unit is declared.
CheckResult check_braided_algebra(const BraidedAlgebraSpec& spec);

/// Appends a unit letter named `unit_name`. Throws if the spec already has one.
BraidedAlgebraSpec adjoin_unit(const BraidedAlgebraSpec& spec, const std::string& unit_name = "one");

/// Quantum quasi-shuffle product on T(A), memoized on basis-word pairs.
///
/// Dispatches on the word lengths (1,1), (1,j), (i,1), (i,j) exactly as the
/// four recursive clauses are written. The memo makes an instance unsuitable
/// for sharing across threads; create one per thread.
class QuasiShuffle {
 public:
  explicit QuasiShuffle(const BraidedAlgebraSpec& spec) : spec_(&spec) {}

  Element operator()(const Element& x, const Element& y);
  const Element& words(const Word& a, const Word& b);

  const BraidedAlgebraSpec& spec() const { return *spec_; }

 private:
  Element compute(const Word& a, const Word& b);
  const BraidedAlgebraSpec* spec_;
  std::map<std::pair<Word, Word>, Element> memo_;
};

Element qsh(const BraidedAlgebraSpec& spec, const Element& x, const Element& y);

/// Same product evaluated through the general (i,j) clause alone, with
/// x * 1 = x and 1 * y = y as base cases. Internal oracle for the dispatch.
Element qsh_general(const BraidedAlgebraSpec& spec, const Element& x, const Element& y);

/// Deconcatenation coproduct.
PairElement deconcat(const Element& x);
/// Delta(x) - x (x) 1 - 1 (x) x.
PairElement reduced_deconcat(const Element& x);
/// reduced_deconcat iterated n-1 times as (D^(n-2) (x) id) D, giving n-fold tensors.
TupleElement iterated_reduced_deconcat(const Element& x, std::size_t n);

/// Smallest r with x in F_r of the coradical filtration, found as the first r
/// at which the iterated reduced coproduct of the positive part vanishes.
std::size_t filtration_degree(const Element& x);

/// The braided-bialgebra morphism T(B) -> T(A) extending a degree-one map f,
/// evaluated as eps + sum_n f^{(x)n} reduced_deconcat^{(n-1)}. `f[b]` is the
/// image of letter b (an element over length-1 words of A). Throws
/// StructuralError when f fails to intertwine braidings or multiplications.
Element extend_degree_one(const BraidedAlgebraSpec& spec_b, const BraidedAlgebraSpec& spec_a, const std::vector<Element>& f,
                          const Element& x);

/// All words over `dim` letters with length in [min_len, max_len], shortest first.
std::vector<Word> all_words(std::size_t dim, std::size_t min_len, std::size_t max_len);

/// Associativity of the quasi-shuffle product on all triples of nonempty
/// basis words with total length <= max_total.
CheckResult check_qsh_associativity(const BraidedAlgebraSpec& spec, std::size_t max_total);

/// Delta(x * y) == (* (x) *)(id (x) beta (x) id)(Delta x (x) Delta y) on all
/// pairs of basis words (the empty word included) with total length <= max_total.
CheckResult check_qsh_bialgebra(const BraidedAlgebraSpec& spec, std::size_t max_total);

}  // namespace cofree
