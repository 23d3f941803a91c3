#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cofree/error.hpp"
#include "cofree/scalar.hpp"

namespace cofree {

/// Opaque index into a declared basis.
using Letter = int;
/// Tensor word v_{l_1} (x) ... (x) v_{l_n}; the empty word is the unit of T(V).
using Word = std::vector<Letter>;
/// Basis element of T(V) (x)bar T(V).
using WordPair = std::pair<Word, Word>;
/// Basis element of T(V)^{(x)bar n}, used for iterated coproducts.
using WordTuple = std::vector<Word>;

/// Names of the letters of a basis declaration.
struct Alphabet {
  std::vector<std::string> names;

  std::size_t size() const { return names.size(); }
  std::optional<Letter> find(std::string_view name) const;
  std::string name(Letter l) const;
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};
using AlphabetRef = std::shared_ptr<const Alphabet>;

AlphabetRef make_alphabet(std::vector<std::string> names);

/// Degree used by the canonical term order. Specialized per key type.
template <class Key>
struct KeyTraits;

template <>
struct KeyTraits<Word> {
  static std::size_t degree(const Word& w) { return w.size(); }
};

template <>
struct KeyTraits<WordPair> {
  static std::size_t degree(const WordPair& p) { return p.first.size() + p.second.size(); }
};

template <>
struct KeyTraits<WordTuple> {
  static std::size_t degree(const WordTuple& t) {
    std::size_t d = 0;
    for (const auto& w : t) d += w.size();
    return d;
  }
};

/// Canonical term order: higher degree first, then the key's own ordering
/// (lexicographic on letter indices, then group exponents where present).
template <class Key>
struct CanonicalLess {
  bool operator()(const Key& a, const Key& b) const {
    const auto da = KeyTraits<Key>::degree(a);
    const auto db = KeyTraits<Key>::degree(b);
    if (da != db) return da > db;
    return a < b;
  }
};

/// Returns whichever alphabet is set; throws when both are set and differ.
AlphabetRef merge_alphabets(const AlphabetRef& a, const AlphabetRef& b);

/// Finite linear combination of basis keys with Scalar coefficients, kept in
/// canonical form (no zero coefficient, canonical key order).
template <class Key>
class LinComb {
 public:
  using key_type = Key;
  using Map = std::map<Key, Scalar, CanonicalLess<Key>>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  explicit LinComb(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}
  LinComb(Key key, const Scalar& coeff, AlphabetRef alphabet = {}) : alphabet_(std::move(alphabet)) {
    add(std::move(key), coeff);
  }

  const AlphabetRef& alphabet() const { return alphabet_; }
  void set_alphabet(AlphabetRef alphabet) { alphabet_ = std::move(alphabet); }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(Key&& key, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const LinComb& other, const Scalar& coeff) {
    alphabet_ = merge_alphabets(alphabet_, other.alphabet_);
    if (coeff.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, coeff.is_one() ? c : c * coeff);
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& other) {
    add_scaled(other, Scalar(1));
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    add_scaled(other, Scalar(-1));
    return *this;
  }
  LinComb& operator*=(const Scalar& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
  LinComb operator-() const { return Scalar(-1) * *this; }

  /// Equality of the underlying mapping (alphabets are not compared).
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

 private:
  AlphabetRef alphabet_;
  Map terms_;
};

/// Element of T(V): mapping from words to scalars over one alphabet.
using Element = LinComb<Word>;
/// Element of T(V) (x)bar T(V).
using PairElement = LinComb<WordPair>;
/// Element of the n-fold (x)bar power of T(V).
using TupleElement = LinComb<WordTuple>;

Word concat(const Word& a, const Word& b);
Word subword(const Word& w, std::size_t begin, std::size_t end);

Element letter_element(Letter l, const AlphabetRef& alphabet, const Scalar& coeff = 1);
Element scalar_element(const Scalar& s, const AlphabetRef& alphabet = {});

/// Pointwise sum; throws StructuralError when the alphabets differ.
Element element_add(const Element& x, const Element& y);

/// Linear tensor product of T(V) elements: concatenation of words.
Element tensor(const Element& x, const Element& y);

/// A table assigning an Element to every ordered pair of letters: a braiding
/// (values over length-2 words) or a multiplication (values over length-1 words).
class LocalTable {
 public:
  LocalTable() = default;
  LocalTable(std::size_t dim, AlphabetRef alphabet);

  std::size_t dim() const { return dim_; }
  const AlphabetRef& alphabet() const { return alphabet_; }

  void set(Letter a, Letter b, Element value);
  bool has(Letter a, Letter b) const;
  /// Throws StructuralError for an unset entry.
  const Element& at(Letter a, Letter b) const;

  friend bool operator==(const LocalTable& a, const LocalTable& b) { return a.dim_ == b.dim_ && a.entries_ == b.entries_; }

 private:
  std::size_t index(Letter a, Letter b) const;
  std::size_t dim_ = 0;
  AlphabetRef alphabet_;
  std::vector<std::optional<Element>> entries_;
};

/// Replaces the letters at 1-based positions (i, i+1) of every word by the
/// table value, extended linearly.
Element apply_local(const LocalTable& table, std::size_t i, const Element& x);
/// Single-word form accumulating c * result into `out`.
void apply_local_word(const LocalTable& table, std::size_t i, const Word& w, const Scalar& c, Element& out);

/// Renders a linear combination in canonical order. `key_text` maps a key to
/// its body; an empty body marks a pure scalar term.
template <class Key, class KeyText>
std::string render_terms(const LinComb<Key>& x, KeyText key_text);

std::string render_word(const Word& w, const Alphabet* alphabet, std::string_view separator = "@");
std::string render(const Element& x);
std::string render(const PairElement& x);
std::string render(const TupleElement& x);

namespace detail {
std::string render_term(const Scalar& c, const std::string& body, bool first);
}

template <class Key, class KeyText>
std::string render_terms(const LinComb<Key>& x, KeyText key_text) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    out += detail::render_term(c, key_text(k), first);
    first = false;
  }
  return out;
}

}  // namespace cofree
