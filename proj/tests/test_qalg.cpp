#include <random>

#include "cofree/error.hpp"
#include "cofree/grouphopf.hpp"
#include "cofree/presets.hpp"
#include "cofree/qalg.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cofree;
using oracle::el;
using oracle::word;

namespace {

const CartanMatrix kA1{{2}};
const CartanMatrix kA2{{2, -1}, {-1, 2}};

// Three letters a, b, c with flip braiding and m(a, b) = c, other products 0.
BraidedAlgebraSpec abc_algebra(const Scalar& corrupt_ca = 1) {
  auto al = make_alphabet({"a", "b", "c"});
  LocalTable s = BraidingTable::flip(al).table();
  s.set(2, 0, Element(Word{0, 2}, corrupt_ca, al));
  LocalTable m(3, al);
  m.set(0, 1, letter_element(2, al));
  return BraidedAlgebraSpec(BraidingTable(s), m);
}

BraidedAlgebraSpec flip_zero(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  auto al = make_alphabet(names);
  return BraidedAlgebraSpec(BraidingTable::flip(al), LocalTable(n, al));
}

oracle::DiagonalQuasiShuffle diagonal_oracle(const YDSpec& yd) {
  const BraidedAlgebraSpec spec = braided_spec(yd);
  auto al = yd.alphabet();
  auto mult = [spec](Letter a, Letter b) { return spec.multiply(a, b); };
  return oracle::DiagonalQuasiShuffle(oracle::diagonal_characters(yd), mult, al);
}

}  // namespace

TEST_CASE("check_braided_algebra passes on flip with a commutative associative product") {
  CHECK(check_braided_algebra(braided_spec(build_hoffman(4))));
  CHECK(check_braided_algebra(abc_algebra()));
}

TEST_CASE("check_braided_algebra passes on the presets") {
  CHECK(check_braided_algebra(braided_spec(build_clifford(2))));
  CHECK(check_braided_algebra(braided_spec(build_clifford(3))));
  CHECK(check_braided_algebra(braided_spec(build_uqg(kA2))));
}

TEST_CASE("check_braided_algebra finds a corrupted braiding") {
  const CheckResult r = check_braided_algebra(abc_algebra(2));
  REQUIRE_FALSE(r);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("check_braided_algebra finds non-associativity") {
  auto al = make_alphabet({"a", "b"});
  LocalTable m(2, al);
  m.set(0, 0, letter_element(1, al));
  m.set(1, 0, letter_element(0, al));
  CHECK_FALSE(check_braided_algebra(BraidedAlgebraSpec(BraidingTable::flip(al), m)));
}

TEST_CASE("missing products are stored as zero") {
  const BraidedAlgebraSpec spec = abc_algebra();
  CHECK(spec.multiply(1, 0).is_zero());
  CHECK(spec.multiply(0, 1) == letter_element(2, spec.alphabet()));
  auto al = make_alphabet({"a"});
  LocalTable bad(1, al);
  bad.set(0, 0, Element(Word{0, 0}, 1, al));
  CHECK_THROWS_AS(BraidedAlgebraSpec(BraidingTable::flip(al), bad), StructuralError);
}

TEST_CASE("adjoin_unit") {
  const BraidedAlgebraSpec one = adjoin_unit(flip_zero(1));
  CHECK(one.dim() == 2);
  REQUIRE(one.unit());
  CHECK(one.alphabet()->name(*one.unit()) == "one");
  CHECK(check_braided_algebra(one));
  CHECK_THROWS_AS(adjoin_unit(one), StructuralError);

  const BraidedAlgebraSpec cl = adjoin_unit(braided_spec(build_clifford(2)));
  CHECK(check_braided_algebra(cl));
  auto al = cl.alphabet();
  CHECK(apply_local(cl.braiding().table(), 1, el(al, "one@v1")) == el(al, "v1@one"));
  CHECK(apply_local(cl.braiding().table(), 1, el(al, "v1@one")) == el(al, "one@v1"));
  CHECK(cl.multiply(*cl.unit(), 0) == el(al, "v1"));
  CHECK(cl.multiply(3, *cl.unit()) == Element(Word{3}, 1, al));
}

TEST_CASE("quasi-shuffle examples") {
  const BraidedAlgebraSpec hoff = braided_spec(build_hoffman(2));
  auto h = hoff.alphabet();
  CHECK(render(qsh(hoff, el(h, "x1"), el(h, "x1"))) == "2 x1@x1 + x2");

  const BraidedAlgebraSpec cl = braided_spec(build_clifford(2));
  auto c = cl.alphabet();
  CHECK(qsh(cl, el(c, "v1"), el(c, "v2")) == el(c, "v1@v2") - el(c, "v2@v1") + el(c, "xi12"));

  const BraidedAlgebraSpec a1 = braided_spec(build_uqg(kA1));
  auto u = a1.alphabet();
  CHECK(qsh(a1, el(u, "E1"), el(u, "F1")) == el(u, "E1@F1") + el(u, "F1@E1", Scalar::q_power(-2)) + el(u, "xi1"));
}

TEST_CASE("scalars act by scalar multiplication") {
  const BraidedAlgebraSpec cl = braided_spec(build_clifford(2));
  auto c = cl.alphabet();
  const Element x = el(c, "v1@v2") + el(c, "xi11", Scalar::q_power(2));
  CHECK(qsh(cl, scalar_element(Scalar::q_power(3), c), x) == Scalar::q_power(3) * x);
  CHECK(qsh(cl, x, scalar_element(-2, c)) == Scalar(-2) * x);
  CHECK(qsh(cl, scalar_element(2, c), scalar_element(3, c)) == scalar_element(6, c));
}

TEST_CASE("quasi-shuffle matches the first-letter recursion oracle") {
  for (const YDSpec& yd : {build_clifford(2), build_uqg(kA2), build_hoffman(3)}) {
    const BraidedAlgebraSpec spec = braided_spec(yd);
    auto oracle_product = diagonal_oracle(yd);
    QuasiShuffle product(spec);
    for (const auto& x : all_words(spec.dim(), 1, 3))
      for (const auto& y : all_words(spec.dim(), 1, 3)) {
        if (x.size() + y.size() > 4) continue;
        CHECK(product.words(x, y) == oracle_product(x, y));
      }
  }
}

TEST_CASE("dispatched clauses agree with the general clause") {
  for (const YDSpec& yd : {build_clifford(2), build_uqg(kA1)}) {
    const BraidedAlgebraSpec spec = braided_spec(yd);
    auto al = spec.alphabet();
    for (const auto& x : all_words(spec.dim(), 1, 2))
      for (const auto& y : all_words(spec.dim(), 1, 3))
        CHECK(qsh(spec, Element(x, 1, al), Element(y, 1, al)) == qsh_general(spec, Element(x, 1, al), Element(y, 1, al)));
  }
}

TEST_CASE("zero multiplication with flip gives the shuffle product") {
  const BraidedAlgebraSpec spec = flip_zero(2);
  auto al = spec.alphabet();
  for (const auto& x : all_words(2, 0, 3))
    for (const auto& y : all_words(2, 0, 3)) CHECK(qsh(spec, Element(x, 1, al), Element(y, 1, al)) == oracle::shuffle(x, y, al));
}

TEST_CASE("output lengths lie between 1 and i + j") {
  const BraidedAlgebraSpec spec = braided_spec(build_hoffman(3));
  auto al = spec.alphabet();
  for (const auto& x : all_words(3, 1, 3))
    for (const auto& y : all_words(3, 1, 2))
      for (const auto& [w, c] : qsh(spec, Element(x, 1, al), Element(y, 1, al))) {
        CHECK(w.size() >= 1);
        CHECK(w.size() <= x.size() + y.size());
      }
}

TEST_CASE("empty word is a two-sided unit") {
  const BraidedAlgebraSpec spec = braided_spec(build_uqg(kA2));
  auto al = spec.alphabet();
  const Element one = scalar_element(1, al);
  for (const auto& w : all_words(spec.dim(), 0, 3)) {
    const Element x(w, 1, al);
    CHECK(qsh(spec, one, x) == x);
    CHECK(qsh(spec, x, one) == x);
  }
}

TEST_CASE("quasi-shuffle associativity on presets") {
  CHECK(check_qsh_associativity(braided_spec(build_clifford(2)), 4));
  CHECK(check_qsh_associativity(braided_spec(build_uqg(kA1)), 4));
  CHECK(check_qsh_associativity(braided_spec(build_hoffman(4)), 4));
}

TEST_CASE("associativity check reports a non-associative letter product") {
  auto al = make_alphabet({"a", "b"});
  LocalTable m(2, al);
  m.set(0, 0, letter_element(1, al));
  m.set(1, 0, letter_element(0, al));
  const CheckResult r = check_qsh_associativity(BraidedAlgebraSpec(BraidingTable::flip(al), m), 3);
  CHECK_FALSE(r);
}

TEST_CASE("braided bialgebra compatibility on presets") {
  CHECK(check_qsh_bialgebra(braided_spec(build_clifford(2)), 3));
  CHECK(check_qsh_bialgebra(braided_spec(build_uqg(kA1)), 3));
  CHECK(check_qsh_bialgebra(braided_spec(build_hoffman(3)), 3));
}

TEST_CASE("deconcatenation is multiplicative for any invertible table") {
  // Neither Yang-Baxter nor compatibility with m is needed; associativity is what breaks.
  auto al = make_alphabet({"a", "b"});
  LocalTable s = BraidingTable::flip(al).table();
  s.set(0, 0, Element(Word{0, 0}, Scalar::q_power(1), al));
  s.set(0, 1, Element(Word{1, 0}, 1, al) + Element(Word{0, 1}, 1, al));
  LocalTable m(2, al);
  m.set(0, 0, letter_element(1, al));
  const BraidedAlgebraSpec spec(BraidingTable(s), m);
  CHECK_FALSE(check_yang_baxter(spec.braiding()));
  CHECK_FALSE(check_braided_algebra(spec));
  CHECK(check_qsh_bialgebra(spec, 3));
  CHECK_FALSE(check_qsh_associativity(spec, 3));
}

TEST_CASE("group degree is conserved") {
  const YDSpec yd = build_uqg(kA2);
  const BraidedAlgebraSpec spec = braided_spec(yd);
  auto al = spec.alphabet();
  const AbelianGroup& g = yd.group();
  for (const auto& x : all_words(spec.dim(), 1, 2))
    for (const auto& y : all_words(spec.dim(), 1, 2)) {
      const GroupElement expected = g.multiply(yd.degree(x), yd.degree(y));
      for (const auto& [w, c] : qsh(spec, Element(x, 1, al), Element(y, 1, al))) CHECK(yd.degree(w) == expected);
    }
}

TEST_CASE("deconcatenation") {
  auto al = make_alphabet({"a", "b", "c"});
  PairElement da(al);
  da.add(WordPair{Word{0}, Word{}}, 1);
  da.add(WordPair{Word{}, Word{0}}, 1);
  CHECK(deconcat(el(al, "a")) == da);
  CHECK(reduced_deconcat(el(al, "a")).is_zero());
  CHECK(reduced_deconcat(el(al, "a@b")) == PairElement(WordPair{Word{0}, Word{1}}, 1, al));
  CHECK(iterated_reduced_deconcat(el(al, "a@b@c"), 3) == TupleElement(WordTuple{Word{0}, Word{1}, Word{2}}, 1, al));
  CHECK(iterated_reduced_deconcat(el(al, "a@b"), 3).is_zero());
  const PairElement d = deconcat(el(al, "a@b@c"));
  CHECK(d.size() == 4);
}

TEST_CASE("filtration degree") {
  auto al = make_alphabet({"a", "b", "c"});
  CHECK(filtration_degree(scalar_element(5, al)) == 0);
  CHECK(filtration_degree(el(al, "b")) == 1);
  CHECK(filtration_degree(el(al, "a@b") + el(al, "c")) == 2);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(0, 2), len(0, 5), count(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    Element x(al);
    std::size_t longest = 0;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
      Word w(static_cast<std::size_t>(len(rng)));
      for (auto& l : w) l = letter(rng);
      x.add(w, k + 1);
    }
    for (const auto& [w, c] : x) longest = std::max(longest, w.size());
    CHECK(filtration_degree(x) == longest);
  }
}

TEST_CASE("extension of the identity is the identity") {
  const BraidedAlgebraSpec spec = braided_spec(build_clifford(2));
  auto al = spec.alphabet();
  std::vector<Element> f;
  for (std::size_t l = 0; l < spec.dim(); ++l) f.push_back(letter_element(static_cast<Letter>(l), al));
  for (const auto& w : all_words(spec.dim(), 0, 4)) CHECK(extend_degree_one(spec, spec, f, Element(w, 1, al)) == Element(w, 1, al));
}

TEST_CASE("extension of zero is the counit") {
  const BraidedAlgebraSpec spec = braided_spec(build_hoffman(2));
  auto al = spec.alphabet();
  const std::vector<Element> f(spec.dim(), Element(al));
  const Element x = el(al, "x1@x2") + scalar_element(Scalar::q_power(1), al);
  CHECK(extend_degree_one(spec, spec, f, x) == scalar_element(Scalar::q_power(1), al));
}

TEST_CASE("extension along a letter map") {
  const BraidedAlgebraSpec b = flip_zero(1);
  const BraidedAlgebraSpec a = flip_zero(2);
  const std::vector<Element> f{el(a.alphabet(), "a")};
  CHECK(extend_degree_one(b, a, f, el(b.alphabet(), "a@a")) == el(a.alphabet(), "a@a"));
  const std::vector<Element> g{el(a.alphabet(), "b")};
  CHECK(extend_degree_one(b, a, g, el(b.alphabet(), "a@a@a")) == el(a.alphabet(), "b@b@b"));
}

TEST_CASE("extension checks its preconditions") {
  const BraidedAlgebraSpec b = flip_zero(1);
  const BraidedAlgebraSpec hoff = braided_spec(build_hoffman(2));
  // m_B = 0 but x1 x1 = x2.
  const std::vector<Element> f{el(hoff.alphabet(), "x1")};
  CHECK_THROWS_AS(extend_degree_one(b, hoff, f, el(b.alphabet(), "a")), StructuralError);
  // Braidings not intertwined: flip versus the Clifford sign.
  const BraidedAlgebraSpec cl = braided_spec(build_clifford(1));
  const std::vector<Element> h{el(cl.alphabet(), "v1")};
  CHECK_THROWS_AS(extend_degree_one(b, cl, h, el(b.alphabet(), "a")), StructuralError);
}

TEST_CASE("extension of a Hoffman rescaling is an algebra morphism") {
  const BraidedAlgebraSpec spec = braided_spec(build_hoffman(3));
  auto al = spec.alphabet();
  std::vector<Element> f;
  for (int a = 1; a <= 3; ++a) f.push_back(letter_element(a - 1, al, Scalar(1L << a)));
  auto fbar = [&](const Element& x) { return extend_degree_one(spec, spec, f, x); };
  for (const auto& x : all_words(3, 1, 2))
    for (const auto& y : all_words(3, 1, 2)) {
      const Element ex(x, 1, al), ey(y, 1, al);
      CHECK(fbar(qsh(spec, ex, ey)) == qsh(spec, fbar(ex), fbar(ey)));
    }
  for (const auto& w : all_words(3, 1, 3)) {
    long weight = 1;
    for (Letter l : w) weight <<= (l + 1);
    CHECK(fbar(Element(w, 1, al)) == Element(w, weight, al));
  }
}

TEST_CASE("all_words enumerates shortest first") {
  const auto words = all_words(2, 0, 2);
  CHECK(words.size() == 7);
  CHECK(words.front().empty());
  CHECK(words.back().size() == 2);
}
