#include "cofree/presets.hpp"

namespace cofree {

std::string clifford_xi_name(int n, int i, int j) {
  if (n >= 10) return "xi" + std::to_string(i) + "_" + std::to_string(j);
  return "xi" + std::to_string(i) + std::to_string(j);
}

YDSpec build_clifford(int n) {
  if (n < 1) throw StructuralError("Clifford preset needs n >= 1");
  AbelianGroup group(0, {2}, {"eps"});
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::vector<Letter>> xi(static_cast<std::size_t>(n + 1), std::vector<Letter>(static_cast<std::size_t>(n + 1), -1));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      xi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<Letter>(names.size());
      names.push_back(clifford_xi_name(n, i, j));
    }
  auto al = make_alphabet(names);
  const std::size_t dim = names.size();

  std::vector<GroupElement> degrees(dim, group.identity());
  ActionMatrix eps = identity_matrix(dim);
  for (int i = 0; i < n; ++i) {
    degrees[static_cast<std::size_t>(i)] = group.generator(0);
    eps[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = -1;
  }
  LocalTable mult(dim, al);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      mult.set(i - 1, j - 1, letter_element(xi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], al));
  return YDSpec(group, al, std::move(degrees), {std::move(eps)}, std::move(mult));
}

YDSpec build_uqg(const CartanMatrix& cartan) {
  const std::size_t n = cartan.size();
  if (n == 0) throw StructuralError("Cartan matrix is empty");
  for (const auto& row : cartan)
    if (row.size() != n) throw StructuralError("Cartan matrix must be square");
  AbelianGroup group(static_cast<int>(n), {});
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("E" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("F" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("xi" + std::to_string(i));
  auto al = make_alphabet(names);
  const std::size_t dim = 3 * n;
  auto E = [](std::size_t i) { return i; };
  auto F = [n](std::size_t i) { return n + i; };
  auto X = [n](std::size_t i) { return 2 * n + i; };

  std::vector<GroupElement> degrees(dim);
  for (std::size_t i = 0; i < n; ++i) {
    degrees[E(i)] = group.generator(i);
    degrees[F(i)] = group.generator(i);
    degrees[X(i)] = group.generator(i, 2);
  }
  std::vector<ActionMatrix> actions;
  for (std::size_t i = 0; i < n; ++i) {
    ActionMatrix k = identity_matrix(dim);
    for (std::size_t j = 0; j < n; ++j) {
      k[E(j)][E(j)] = Scalar::q_power(cartan[i][j]);
      k[F(j)][F(j)] = Scalar::q_power(-cartan[i][j]);
    }
    actions.push_back(std::move(k));
  }
  LocalTable mult(dim, al);
  for (std::size_t i = 0; i < n; ++i)
    mult.set(static_cast<Letter>(E(i)), static_cast<Letter>(F(i)), letter_element(static_cast<Letter>(X(i)), al));
  return YDSpec(group, al, std::move(degrees), std::move(actions), std::move(mult));
}

YDSpec build_hoffman(int n) {
  if (n < 1) throw StructuralError("Hoffman preset needs n >= 1");
  AbelianGroup group(0, {});
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  auto al = make_alphabet(names);
  LocalTable mult(static_cast<std::size_t>(n), al);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; a + b <= n; ++b) mult.set(a - 1, b - 1, letter_element(a + b - 1, al));
  return YDSpec(group, al, std::vector<GroupElement>(static_cast<std::size_t>(n), group.identity()), {}, std::move(mult));
}

namespace {

Letter letter_named(const HopfBimodule& m, const std::string& name) {
  auto l = m.alphabet()->find(name);
  if (!l) throw StructuralError("spec has no letter '" + name + "'");
  return *l;
}

SmashElement smash_letter(const HopfBimodule& m, Letter l, const GroupElement& g) {
  return SmashElement(SmashKey{Word{l}, g}, 1, m.alphabet());
}

SmashElement smash_group(const HopfBimodule& m, const GroupElement& g) {
  return SmashElement(SmashKey{Word{}, g}, 1, m.alphabet());
}

CotensorElement lifted(const HopfBimodule& m, Letter l) { return psi(m, letter_element(l, m.alphabet())); }

}  // namespace

CheckResult check_clifford_relations(const HopfBimodule& m, int n) {
  const auto& group = m.group();
  const GroupElement one = group.identity();
  const GroupElement eps = group.generator(0);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const Letter vi = letter_named(m, "v" + std::to_string(i));
      const Letter vj = letter_named(m, "v" + std::to_string(j));
      const Letter xi = letter_named(m, clifford_xi_name(n, i, j));
      const std::string pair = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";

      const CotensorElement lhs = star(m, lifted(m, vi), lifted(m, vj)) + star(m, lifted(m, vj), lifted(m, vi));
      const CotensorElement rhs = lifted(m, xi);
      if (!(lhs == rhs)) return CheckResult::fail("cotensor relation " + pair, render(lhs), render(rhs));

      const SmashElement slhs = star_smash(m, smash_letter(m, vi, one), smash_letter(m, vj, one)) +
                                star_smash(m, smash_letter(m, vj, one), smash_letter(m, vi, one));
      const SmashElement srhs = smash_letter(m, xi, one);
      if (!(slhs == srhs)) return CheckResult::fail("smash relation " + pair, render(slhs), render(srhs));
    }
  for (int i = 1; i <= n; ++i) {
    const Letter vi = letter_named(m, "v" + std::to_string(i));
    const SmashElement lhs = star_smash(m, smash_group(m, eps), smash_letter(m, vi, one));
    const SmashElement rhs = -smash_letter(m, vi, eps);
    if (!(lhs == rhs)) return CheckResult::fail("eps v" + std::to_string(i) + " eps^-1", render(lhs), render(rhs));
  }
  return CheckResult::pass();
}

CheckResult check_uqg_relations(const HopfBimodule& m, const CartanMatrix& cartan) {
  const auto& group = m.group();
  const GroupElement one = group.identity();
  const std::size_t n = cartan.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Letter e = letter_named(m, "E" + std::to_string(i + 1));
      const Letter f = letter_named(m, "F" + std::to_string(j + 1));
      const Scalar c = Scalar::q_power(-cartan[i][j]);
      const std::string pair = "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";

      const CotensorElement lhs = star(m, lifted(m, e), lifted(m, f)) - c * star(m, lifted(m, f), lifted(m, e));
      CotensorElement rhs(m.alphabet());
      if (i == j) rhs = lifted(m, letter_named(m, "xi" + std::to_string(i + 1)));
      if (!(lhs == rhs)) return CheckResult::fail("cotensor relation " + pair, render(lhs), render(rhs));

      const SmashElement slhs = star_smash(m, smash_letter(m, e, one), smash_letter(m, f, one)) -
                                c * star_smash(m, smash_letter(m, f, one), smash_letter(m, e, one));
      SmashElement srhs(m.alphabet());
      if (i == j) srhs = smash_letter(m, letter_named(m, "xi" + std::to_string(i + 1)), one);
      if (!(slhs == srhs)) return CheckResult::fail("smash relation " + pair, render(slhs), render(srhs));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Letter e = letter_named(m, "E" + std::to_string(j + 1));
      const GroupElement k = group.generator(i);
      const SmashElement lhs =
          star_smash(m, star_smash(m, smash_group(m, k), smash_letter(m, e, one)), smash_group(m, group.inverse(k)));
      const SmashElement rhs = Scalar::q_power(cartan[i][j]) * smash_letter(m, e, one);
      if (!(lhs == rhs))
        return CheckResult::fail("K" + std::to_string(i + 1) + " E" + std::to_string(j + 1) + " K^-1", render(lhs), render(rhs));
    }
  return CheckResult::pass();
}

CheckResult check_uqg_mult_table(const HopfBimodule& m, const CartanMatrix& cartan, int bound) {
  const auto& group = m.group();
  const std::size_t n = cartan.size();
  std::vector<GroupElement> ks;
  std::vector<int> exps(n, -bound);
  for (;;) {
    ks.push_back(group.make(exps));
    std::size_t k = 0;
    while (k < n && exps[k] == bound) exps[k++] = -bound;
    if (k == n) break;
    ++exps[k];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Letter e = letter_named(m, "E" + std::to_string(i + 1));
      const Letter f = letter_named(m, "F" + std::to_string(j + 1));
      const Letter xi = letter_named(m, "xi" + std::to_string(i + 1));
      for (const auto& k : ks)
        for (const auto& k2 : ks) {
          const CotensorElement product = project_degree_one(
              star(m, mword_element(m, MWord{MLetter{e, k}}), mword_element(m, MWord{MLetter{f, k2}})));
          CotensorElement expected(m.alphabet());
          if (i == j) {
            int exponent = 0;
            for (std::size_t a = 0; a < n; ++a) exponent -= k.exps[a] * cartan[a][j];
            expected = mword_element(m, MWord{MLetter{xi, group.multiply(k, k2)}}, Scalar::q_power(exponent));
          }
          if (!(product == expected))
            return CheckResult::fail("(E" + std::to_string(i + 1) + "." + render_group(k) + ")(F" + std::to_string(j + 1) + "." +
                                         render_group(k2) + ")",
                                     render(product), render(expected));
        }
    }
  return CheckResult::pass();
}

}  // namespace cofree
