#include <random>

#include "cofree/error.hpp"
#include "cofree/presets.hpp"
#include "cofree/qalg.hpp"
#include "cofree/rotabaxter.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cofree;
using oracle::el;

namespace {

const CartanMatrix kA1{{2}};

std::vector<Element> word_samples(const BraidedAlgebraSpec& spec, std::size_t min_len, std::size_t max_len) {
  std::vector<Element> out;
  for (const auto& w : all_words(spec.dim(), min_len, max_len)) out.emplace_back(w, 1, spec.alphabet());
  return out;
}

std::vector<SmashElement> smash_samples(const HopfBimodule& m, std::size_t max_len) {
  std::vector<SmashElement> out;
  const auto& g = m.group();
  std::vector<GroupElement> groups{g.identity()};
  for (std::size_t k = 0; k < g.generators(); ++k) groups.push_back(g.generator(k));
  for (const auto& w : all_words(m.yd().dim(), 0, max_len))
    for (const auto& h : groups) out.emplace_back(SmashKey{w, h}, 1, m.alphabet());
  return out;
}

}  // namespace

TEST_CASE("P on the quasi-shuffle algebra") {
  const BraidedAlgebraSpec spec = adjoin_unit(braided_spec(build_clifford(2)));
  auto al = spec.alphabet();
  CHECK(P_qsh(spec, scalar_element(Scalar::q_power(2), al)) == el(al, "one", Scalar::q_power(2)));
  CHECK(P_qsh(spec, el(al, "v1@v2")) == el(al, "one@v1@v2"));
  CHECK(P_qsh(spec, P_qsh(spec, el(al, "v1"))) == el(al, "one@one@v1"));
  CHECK_THROWS_AS(P_qsh(braided_spec(build_clifford(2)), el(al, "v1")), StructuralError);
  CHECK_THROWS_AS(qsh_instance(braided_spec(build_clifford(2))), StructuralError);
}

TEST_CASE("Rota-Baxter identity on scalars") {
  const BraidedAlgebraSpec spec = adjoin_unit(braided_spec(build_clifford(2)));
  auto al = spec.alphabet();
  const auto inst = qsh_instance(spec);
  const std::vector<Element> scalars{scalar_element(1, al), scalar_element(Scalar::q_power(-1), al),
                                     scalar_element(Scalar(Rational(2, 3)), al)};
  CHECK(rb_check(inst, scalars));
}

TEST_CASE("Rota-Baxter identity for the quasi-shuffle product") {
  const BraidedAlgebraSpec spec = adjoin_unit(braided_spec(build_clifford(2)));
  const auto inst = qsh_instance(spec);
  CHECK(rb_check(inst, word_samples(spec, 0, 2)));
  // Degree-3 words against a fixed set of short partners.
  std::mt19937 rng(17);
  const auto long_words = word_samples(spec, 3, 3);
  const auto short_words = word_samples(spec, 0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, long_words.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const Element& x = long_words[pick(rng)];
    for (const auto& y : short_words) {
      CHECK(rb_check(inst, x, y));
      CHECK(rb_check(inst, y, x));
    }
  }
  const BraidedAlgebraSpec hoff = adjoin_unit(braided_spec(build_hoffman(2)));
  CHECK(rb_check(qsh_instance(hoff), word_samples(hoff, 0, 2)));
}

TEST_CASE("Rota-Baxter check rejects a wrong weight") {
  const BraidedAlgebraSpec spec = adjoin_unit(braided_spec(build_clifford(1)));
  auto inst = qsh_instance(spec);
  inst.weight = 2;
  const CheckResult r = rb_check(inst, word_samples(spec, 0, 1));
  REQUIRE_FALSE(r);
  CHECK(r.lhs != r.rhs);
}

TEST_CASE("scaled operators have scaled weight") {
  const BraidedAlgebraSpec spec = adjoin_unit(braided_spec(build_uqg(kA1)));
  const auto inst = qsh_instance(spec);
  const auto samples = word_samples(spec, 0, 1);
  for (const Scalar& s : {Scalar(-1), Scalar::q_power(1)}) {
    const auto scaled_inst = scaled(inst, s);
    CHECK(scaled_inst.weight == s);
    CHECK(rb_check(scaled_inst, samples));
  }
  auto wrong = scaled(inst, Scalar::q_power(1));
  wrong.weight = 1;
  CHECK_FALSE(rb_check(wrong, samples));
}

TEST_CASE("heart") {
  const BraidedAlgebraSpec spec = adjoin_unit(braided_spec(build_clifford(1)));
  auto al = spec.alphabet();
  const auto inst = qsh_instance(spec);
  const Scalar lambda = Scalar::q_power(1), nu = 3;
  // lambda nu (1_A + 1_A + 1).
  CHECK(heart(inst, scalar_element(lambda, al), scalar_element(nu, al)) ==
        el(al, "one", Scalar(2) * lambda * nu) + scalar_element(lambda * nu, al));
  RBInstance<Element> zero = inst;
  zero.op = [al](const Element&) { return Element(al); };
  zero.weight = Scalar::q_power(-1);
  const Element x = el(al, "v1"), y = el(al, "xi11");
  CHECK(heart(zero, x, y) == Scalar::q_power(-1) * qsh(spec, x, y));
}

TEST_CASE("heart product is associative") {
  const BraidedAlgebraSpec spec = adjoin_unit(braided_spec(build_clifford(1)));
  const auto inst = qsh_instance(spec);
  const std::function<Element(const Element&, const Element&)> product = [&inst](const Element& x, const Element& y) {
    return heart(inst, x, y);
  };
  CHECK(associativity_check(product, word_samples(spec, 1, 2)));
}

TEST_CASE("lozenge and Q") {
  const BraidedAlgebraSpec spec = adjoin_unit(braided_spec(build_clifford(2)));
  auto al = spec.alphabet();
  CHECK(lozenge(spec, el(al, "v1"), el(al, "v2")) == el(al, "xi12"));
  CHECK(lozenge(spec, el(al, "v2"), el(al, "v1")).is_zero());
  CHECK(lozenge(spec, el(al, "one"), el(al, "v2@v1")) == el(al, "v2@v1"));
  CHECK(Q_op(spec, el(al, "v1@xi11")) == el(al, "one@v1@xi11"));
  CHECK_THROWS_AS(lozenge(spec, scalar_element(1, al), el(al, "v1")), StructuralError);
}

TEST_CASE("lozenge is associative") {
  const BraidedAlgebraSpec spec = adjoin_unit(braided_spec(build_clifford(2)));
  const std::function<Element(const Element&, const Element&)> product = [&spec](const Element& x, const Element& y) {
    return lozenge(spec, x, y);
  };
  CHECK(associativity_check(product, word_samples(spec, 1, 2)));
}

TEST_CASE("lozenge with Q is a Rota-Baxter algebra") {
  const BraidedAlgebraSpec spec = adjoin_unit(braided_spec(build_clifford(1)));
  CHECK(rb_check(lozenge_instance(spec), word_samples(spec, 1, 2)));
}

TEST_CASE("heart of lozenge and Q is the quasi-shuffle product") {
  const BraidedAlgebraSpec cl = adjoin_unit(braided_spec(build_clifford(2)));
  CHECK(prop34_check(cl, word_samples(cl, 1, 1)));
  CHECK(prop34_check(cl, word_samples(cl, 1, 2)));
  const BraidedAlgebraSpec u = adjoin_unit(braided_spec(build_uqg(kA1)));
  CHECK(prop34_check(u, word_samples(u, 1, 2)));
}

TEST_CASE("heart of lozenge detects a corrupted Q") {
  const BraidedAlgebraSpec spec = adjoin_unit(braided_spec(build_clifford(2)));
  const Letter v1 = *spec.alphabet()->find("v1");
  auto bad_q = [v1](const Element& u) {
    Element out(u.alphabet());
    for (const auto& [w, c] : u) out.add(concat(Word{v1}, w), c);
    return out;
  };
  CHECK_FALSE(prop34_check(spec, word_samples(spec, 1, 1), bad_q));
}

TEST_CASE("P tilde on the smash product") {
  const HopfBimodule m(adjoin_unit(build_clifford(2)));
  auto al = m.alphabet();
  const GroupElement eps = m.group().generator(0);
  const Word v1v2 = oracle::word(al, "v1@v2");
  CHECK(P_tilde(m, SmashElement(SmashKey{v1v2, eps}, 1, al)) == SmashElement(SmashKey{oracle::word(al, "one@v1@v2"), eps}, 1, al));
  CHECK(P_tilde(m, SmashElement(SmashKey{Word{}, eps}, Scalar::q_power(1), al)) ==
        SmashElement(SmashKey{oracle::word(al, "one"), eps}, Scalar::q_power(1), al));
  const HopfBimodule plain(build_clifford(2));
  CHECK_THROWS_AS(P_tilde(plain, SmashElement(SmashKey{v1v2, eps}, 1, al)), StructuralError);
  CHECK_THROWS_AS(smash_instance(plain), StructuralError);
}

TEST_CASE("Rota-Baxter identity on the bosonization") {
  const HopfBimodule m(adjoin_unit(build_clifford(1)));
  const auto samples = smash_samples(m, 2);
  CHECK(rb_check(smash_instance(m), samples));
  CHECK(rb_check(scaled(smash_instance(m), Scalar(-1)), samples));
}

TEST_CASE("Rota-Baxter identity on the cotensor coalgebra") {
  const HopfBimodule m(adjoin_unit(build_clifford(1)));
  std::vector<CotensorElement> samples;
  for (const auto& s : smash_samples(m, 1)) samples.push_back(from_smash(m, s));
  CHECK(rb_check(cotensor_instance(m), samples));
  for (const auto& x : samples) CHECK(to_smash(m, P_tilde(m, x)) == P_tilde(m, to_smash(m, x)));
}
