#include <random>

#include "cofree/braid.hpp"
#include "cofree/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cofree;

namespace {

AlphabetRef letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return make_alphabet(names);
}

BraidingTable diagonal(const oracle::Characters& chi, const AlphabetRef& al) {
  LocalTable t(al->size(), al);
  for (Letter x = 0; x < static_cast<Letter>(al->size()); ++x)
    for (Letter y = 0; y < static_cast<Letter>(al->size()); ++y)
      t.set(x, y, Element(Word{y, x}, chi[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)], al));
  return BraidingTable(t);
}

oracle::Characters random_characters(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> ex(-2, 2);
  oracle::Characters chi(n, std::vector<Scalar>(n));
  for (auto& row : chi)
    for (auto& c : row) c = Scalar::q_power(ex(rng));
  return chi;
}

// Two-dimensional Hecke-type solution: not of diagonal type.
BraidingTable hecke(const AlphabetRef& al) {
  const Letter x = 0, y = 1;
  LocalTable t(2, al);
  t.set(x, x, Element(Word{x, x}, Scalar::q_power(1), al));
  t.set(y, y, Element(Word{y, y}, Scalar::q_power(1), al));
  t.set(x, y, Element(Word{y, x}, 1, al));
  Element yx(Word{x, y}, 1, al);
  yx.add(Word{y, x}, Scalar::q_power(1) - Scalar::q_power(-1));
  t.set(y, x, yx);
  return BraidingTable(t);
}

// Applies `op` to the letters at positions [begin, begin+len) of every word.
template <class Op>
Element on_slice(const Element& x, std::size_t begin, std::size_t len, Op op) {
  Element out(x.alphabet());
  for (const auto& [w, c] : x) {
    const Word prefix = subword(w, 0, begin);
    const Word suffix = subword(w, begin + len, w.size());
    for (const auto& [m, cm] : op(Element(subword(w, begin, begin + len), 1, x.alphabet())))
      out.add(concat(concat(prefix, m), suffix), c * cm);
  }
  return out;
}

std::vector<Word> all_words_of(std::size_t dim, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (std::size_t l = 0; l < dim; ++l) {
        Word n = w;
        n.push_back(static_cast<Letter>(l));
        next.push_back(n);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation({1, 1}), StructuralError);
  CHECK_THROWS_AS(Permutation({0, 1}), StructuralError);
  CHECK_THROWS_AS(Permutation({1, 3}), StructuralError);
  CHECK_NOTHROW(Permutation({2, 3, 1}));
}

TEST_CASE("permutation composition applies the right factor first") {
  const Permutation s1 = Permutation::simple(3, 1);
  const Permutation s2 = Permutation::simple(3, 2);
  const Word w{0, 1, 2};
  CHECK(permute_positions(s1.after(s2), w) == permute_positions(s1, permute_positions(s2, w)));
  CHECK(s1.after(s1).is_identity());
  for (const auto& p : all_permutations(4)) CHECK(p.after(p.inverse()).is_identity());
}

TEST_CASE("reduced_word examples") {
  CHECK(reduced_word(Permutation::identity(3)).empty());
  CHECK(reduced_word(Permutation({2, 1})) == std::vector<int>{1});
  CHECK(reduced_word(chi(2, 1)).size() == 2);
}

TEST_CASE("reduced_word multiplies back to w with inversion-count length") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      const auto word = reduced_word(w);
      CHECK(word.size() == w.inversions());
      Permutation p = Permutation::identity(n);
      for (int i : word) p = p.after(Permutation::simple(n, i));
      CHECK(p == w);
    }
}

TEST_CASE("all reduced words are reduced expressions of w") {
  const Permutation longest({4, 3, 2, 1});
  const auto words = all_reduced_words(longest);
  CHECK(words.size() == 16);
  for (const auto& word : words) {
    CHECK(word.size() == 6);
    Permutation p = Permutation::identity(4);
    for (int i : word) p = p.after(Permutation::simple(4, i));
    CHECK(p == longest);
  }
}

TEST_CASE("chi examples") {
  CHECK(chi(1, 1).images() == std::vector<int>{2, 1});
  CHECK(chi(2, 1).images() == std::vector<int>{2, 3, 1});
  CHECK(chi(0, 3).is_identity());
  CHECK(chi(3, 0).is_identity());
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      if (i + j >= 1) CHECK(chi(i, j).inversions() == static_cast<std::size_t>(i * j));
}

TEST_CASE("check_yang_baxter on flip, diagonal and Hecke braidings") {
  auto al = letters(3);
  CHECK(check_yang_baxter(BraidingTable::flip(al)));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) CHECK(check_yang_baxter(diagonal(random_characters(rng, 3), al)));
  CHECK(check_yang_baxter(hecke(letters(2))));
}

TEST_CASE("check_yang_baxter finds a corrupted entry") {
  auto al = letters(2);
  LocalTable t = BraidingTable::flip(al).table();
  t.set(0, 1, Element(Word{1, 0}, 1, al) + Element(Word{0, 1}, 1, al));
  const CheckResult r = check_yang_baxter(BraidingTable(t));
  REQUIRE_FALSE(r);
  CHECK(r.witness.find('a') != std::string::npos);
  CHECK(r.witness.find('b') != std::string::npos);
  CHECK(r.lhs != r.rhs);
}

TEST_CASE("braiding table construction rejects singular and incomplete tables") {
  auto al = letters(2);
  LocalTable t = BraidingTable::flip(al).table();
  t.set(0, 1, Element(al));
  CHECK_THROWS_AS(BraidingTable{t}, StructuralError);
  LocalTable partial(2, al);
  partial.set(0, 0, Element(Word{0, 0}, 1, al));
  CHECK_THROWS_AS(BraidingTable{partial}, StructuralError);
  LocalTable wrong_length = BraidingTable::flip(al).table();
  wrong_length.set(1, 1, Element(Word{1}, 1, al));
  CHECK_THROWS_AS(BraidingTable{wrong_length}, StructuralError);
  // Singular at every nonzero q only after combining entries.
  LocalTable dependent(2, al);
  Element same(al);
  same.add(Word{0, 1}, 1);
  same.add(Word{1, 0}, 1);
  dependent.set(0, 0, Element(Word{0, 0}, 1, al));
  dependent.set(1, 1, Element(Word{1, 1}, 1, al));
  dependent.set(0, 1, same);
  dependent.set(1, 0, same);
  CHECK_THROWS_AS(BraidingTable{dependent}, StructuralError);
}

TEST_CASE("invertibility is exact over the fraction field") {
  auto al = letters(2);
  CHECK(is_invertible(hecke(al).table()));
  LocalTable t = hecke(al).table();
  t.set(1, 0, Element(Word{1, 0}, 1, al));
  CHECK_FALSE(is_invertible(t));
}

TEST_CASE("lift_Tw examples") {
  auto al = letters(3);
  const Element abc(Word{0, 1, 2}, 1, al);
  const BraidingTable flip = BraidingTable::flip(al);
  CHECK(lift_Tw(flip, Permutation::identity(3), abc) == abc);
  CHECK(lift_Tw(flip, chi(2, 1), abc) == Element(Word{2, 0, 1}, 1, al));
  oracle::Characters chi_h(3, std::vector<Scalar>(3, Scalar(1)));
  chi_h[0][1] = Scalar::q_power(5);
  CHECK(lift_Tw(diagonal(chi_h, al), chi(1, 1), Element(Word{0, 1}, 1, al)) == Element(Word{1, 0}, Scalar::q_power(5), al));
  CHECK_THROWS_AS(lift_Tw(flip, chi(1, 1), abc), StructuralError);
}

TEST_CASE("flip lift equals the position action for n <= 5") {
  auto al = letters(5);
  const BraidingTable flip = BraidingTable::flip(al);
  for (std::size_t n = 1; n <= 5; ++n) {
    Word w;
    for (std::size_t k = 0; k < n; ++k) w.push_back(static_cast<Letter>(k));
    for (const auto& p : all_permutations(n))
      CHECK(lift_Tw(flip, p, Element(w, 1, al)) == Element(oracle::permute(p.images(), w), 1, al));
  }
}

TEST_CASE("diagonal lift matches the inversion-weighted oracle") {
  std::mt19937 rng(11);
  auto al = letters(3);
  for (int trial = 0; trial < 4; ++trial) {
    const auto chi_h = random_characters(rng, 3);
    const BraidingTable sigma = diagonal(chi_h, al);
    for (const auto& p : all_permutations(4))
      for (const auto& w : all_words_of(3, 4)) {
        if ((w[0] + w[1] + w[2] + w[3]) % 3) continue;
        CHECK(lift_Tw(sigma, p, Element(w, 1, al)) == oracle::diagonal_lift(chi_h, p.images(), w, al));
      }
  }
}

TEST_CASE("every reduced word gives the same lift in S4") {
  auto al = letters(2);
  const BraidingTable sigma = hecke(al);
  const auto words = all_words_of(2, 4);
  for (const auto& p : all_permutations(4)) {
    const auto reduced = all_reduced_words(p);
    for (const auto& w : words) {
      const Element x(w, 1, al);
      const Element first = apply_braid_word(sigma, reduced.front(), x);
      for (const auto& r : reduced) CHECK(apply_braid_word(sigma, r, x) == first);
      CHECK(lift_Tw(sigma, p, x) == first);
    }
  }
}

TEST_CASE("beta edge cases") {
  auto al = letters(3);
  const BraidingTable sigma = hecke(letters(2));
  for (const auto& w : all_words_of(2, 2)) {
    const Element x(w, 1, sigma.alphabet());
    CHECK(beta(sigma, 1, 1, x) == apply_local(sigma.table(), 1, x));
  }
  const BraidingTable flip = BraidingTable::flip(al);
  const Element abc(Word{0, 1, 2}, 1, al);
  CHECK(beta(flip, 2, 1, abc) == Element(Word{2, 0, 1}, 1, al));
  CHECK(beta(flip, 0, 3, abc) == abc);
  CHECK(beta(flip, 3, 0, abc) == abc);
}

TEST_CASE("beta block rules") {
  const BraidingTable sigma = hecke(letters(2));
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k) {
        if (i + j + k > 4 || i + j + k == 0) continue;
        const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j), uk = static_cast<std::size_t>(k);
        for (const auto& w : all_words_of(2, ui + uj + uk)) {
          const Element x(w, 1, sigma.alphabet());
          // u v | w  ->  u w v  ->  w u v
          const Element left = on_slice(on_slice(x, ui, uj + uk, [&](const Element& e) { return beta(sigma, j, k, e); }), 0, ui + uk,
                                        [&](const Element& e) { return beta(sigma, i, k, e); });
          CHECK(left == beta(sigma, i + j, k, x));
          // u | v w  ->  v u w  ->  v w u
          const Element right = on_slice(on_slice(x, 0, ui + uj, [&](const Element& e) { return beta(sigma, i, j, e); }), uj, ui + uk,
                                         [&](const Element& e) { return beta(sigma, i, k, e); });
          CHECK(right == beta(sigma, i, j + k, x));
        }
      }
}

TEST_CASE("beta on pairs splits after the right block") {
  auto al = letters(3);
  const BraidingTable flip = BraidingTable::flip(al);
  const PairElement p(WordPair{Word{0}, Word{1, 2}}, 1, al);
  CHECK(beta(flip, p) == PairElement(WordPair{Word{1, 2}, Word{0}}, 1, al));
  const PairElement unit_left(WordPair{Word{}, Word{1, 2}}, 1, al);
  CHECK(beta(flip, unit_left) == PairElement(WordPair{Word{1, 2}, Word{}}, 1, al));
}
