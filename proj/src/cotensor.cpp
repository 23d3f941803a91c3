#include "cofree/cotensor.hpp"

#include <map>

namespace cofree {

std::string render_mword(const MWord& w, const Alphabet* alphabet) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += "[]";
    out += (alphabet ? alphabet->name(w[k].letter) : std::to_string(w[k].letter)) + "." + render_group(w[k].group);
  }
  return out;
}

std::string render_basis(const CBasis& b, const Alphabet* alphabet) {
  if (const auto* w = std::get_if<MWord>(&b)) return render_mword(*w, alphabet);
  return render_group(std::get<GroupElement>(b));
}

std::string render(const CotensorElement& x) {
  const Alphabet* al = x.alphabet().get();
  return render_terms(x, [al](const CBasis& b) { return render_basis(b, al); });
}

std::string render(const CPairElement& x) {
  const Alphabet* al = x.alphabet().get();
  return render_terms(x, [al](const CPair& p) { return render_basis(p.first, al) + " | " + render_basis(p.second, al); });
}

std::string render(const CTupleElement& x) {
  const Alphabet* al = x.alphabet().get();
  return render_terms(x, [al](const CTuple& t) {
    std::string out;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k) out += " | ";
      out += render_basis(t[k], al);
    }
    return out;
  });
}

HopfBimodule::HopfBimodule(YDSpec spec) : yd_(std::move(spec)), algebra_(braided_spec(yd_)) {}

CotensorElement group_element(const HopfBimodule& m, const GroupElement& g, const Scalar& c) {
  return CotensorElement(CBasis{m.group().make(g.exps)}, c, m.alphabet());
}

CotensorElement include_group(const HopfBimodule& m, const GroupAlgebraElement& h) {
  CotensorElement out(m.alphabet());
  for (const auto& [g, c] : h) out.add(CBasis{g}, c);
  return out;
}

CotensorElement mword_element(const HopfBimodule& m, MWord w, const Scalar& c) {
  if (w.empty()) return group_element(m, m.group().identity(), c);
  return CotensorElement(CBasis{std::move(w)}, c, m.alphabet());
}

GroupAlgebraElement project_group(const CotensorElement& x) {
  GroupAlgebraElement out;
  for (const auto& [b, c] : x)
    if (const auto* g = std::get_if<GroupElement>(&b)) out.add(*g, c);
  return out;
}

CotensorElement project_degree_one(const CotensorElement& x) {
  CotensorElement out(x.alphabet());
  for (const auto& [b, c] : x)
    if (KeyTraits<CBasis>::degree(b) == 1) out.add(b, c);
  return out;
}

CheckResult cotensor_check(const HopfBimodule& m, const CotensorElement& x) {
  const auto& group = m.group();
  for (const auto& [b, c] : x) {
    const auto* w = std::get_if<MWord>(&b);
    if (!w) continue;
    for (std::size_t k = 0; k + 1 < w->size(); ++k) {
      const GroupElement expected = group.multiply(m.yd().degree((*w)[k + 1].letter), (*w)[k + 1].group);
      if (!((*w)[k].group == expected))
        return CheckResult::fail(render_mword(*w, m.alphabet().get()) + " at cut " + std::to_string(k + 1),
                                 render_group((*w)[k].group), render_group(expected));
    }
  }
  return CheckResult::pass();
}

CheckResult cotensor_kernel_check(const HopfBimodule& m, const CotensorElement& x) {
  const auto& group = m.group();
  std::size_t longest = 0;
  for (const auto& [b, c] : x) longest = std::max(longest, KeyTraits<CBasis>::degree(b));
  for (std::size_t cut = 1; cut < longest; ++cut) {
    // (left part, H leg, right part) -> coefficient of (id (x) delta_L - delta_R (x) id)(x)
    std::map<std::tuple<MWord, GroupElement, MWord>, Scalar> image;
    auto add = [&image](std::tuple<MWord, GroupElement, MWord> key, const Scalar& c) {
      auto& slot = image[std::move(key)];
      slot += c;
    };
    for (const auto& [b, c] : x) {
      const auto* w = std::get_if<MWord>(&b);
      if (!w || w->size() <= cut) continue;
      MWord left(w->begin(), w->begin() + static_cast<std::ptrdiff_t>(cut));
      MWord right(w->begin() + static_cast<std::ptrdiff_t>(cut), w->end());
      // delta_L on the first letter of the right factor: (v, g) -> deg(v) g (x) (v, g)
      add({left, group.multiply(m.yd().degree(right.front().letter), right.front().group), right}, c);
      // delta_R on the last letter of the left factor: (v, g) -> (v, g) (x) g
      add({left, left.back().group, right}, -c);
    }
    for (const auto& [key, c] : image)
      if (!c.is_zero()) {
        MWord whole = std::get<0>(key);
        whole.insert(whole.end(), std::get<2>(key).begin(), std::get<2>(key).end());
        return CheckResult::fail(render_mword(whole, m.alphabet().get()) + " at cut " + std::to_string(cut),
                                 c.to_string() + " " + render_group(std::get<1>(key)), "0");
      }
  }
  return CheckResult::pass();
}

namespace {

// g . (v, h) = (g.v, gh) as a list of M-letters with coefficients.
std::vector<std::pair<MLetter, Scalar>> act_mletter(const HopfBimodule& m, const GroupElement& g, const MLetter& l) {
  std::vector<std::pair<MLetter, Scalar>> out;
  const GroupElement gh = m.group().multiply(g, l.group);
  for (const auto& [w, c] : m.yd().act(g, l.letter)) out.push_back({MLetter{w[0], gh}, c});
  return out;
}

// Expands a product of sums of M-letters into M-words.
void expand_words(const std::vector<std::vector<std::pair<MLetter, Scalar>>>& factors, std::size_t k, MWord& prefix,
                  const Scalar& coeff, CotensorElement& out) {
  if (k == factors.size()) {
    out.add(CBasis{prefix}, coeff);
    return;
  }
  for (const auto& [l, c] : factors[k]) {
    prefix.push_back(l);
    expand_words(factors, k + 1, prefix, coeff * c, out);
    prefix.pop_back();
  }
}

}  // namespace

CotensorElement left_action(const HopfBimodule& m, const GroupElement& g, const CotensorElement& x) {
  CotensorElement out(m.alphabet());
  for (const auto& [b, c] : x) {
    if (const auto* h = std::get_if<GroupElement>(&b)) {
      out.add(CBasis{m.group().multiply(g, *h)}, c);
      continue;
    }
    const auto& w = std::get<MWord>(b);
    std::vector<std::vector<std::pair<MLetter, Scalar>>> factors;
    for (const auto& l : w) factors.push_back(act_mletter(m, g, l));
    MWord prefix;
    expand_words(factors, 0, prefix, c, out);
  }
  return out;
}

CotensorElement right_action(const HopfBimodule& m, const CotensorElement& x, const GroupElement& g) {
  CotensorElement out(m.alphabet());
  for (const auto& [b, c] : x) {
    if (const auto* h = std::get_if<GroupElement>(&b)) {
      out.add(CBasis{m.group().multiply(*h, g)}, c);
      continue;
    }
    MWord w = std::get<MWord>(b);
    for (auto& l : w) l.group = m.group().multiply(l.group, g);
    out.add(CBasis{std::move(w)}, c);
  }
  return out;
}

CPairElement coproduct(const HopfBimodule& m, const CotensorElement& x) {
  CPairElement out(m.alphabet());
  for (const auto& [b, c] : x) {
    if (const auto* g = std::get_if<GroupElement>(&b)) {
      out.add(CPair{*g, *g}, c);
      continue;
    }
    const auto& w = std::get<MWord>(b);
    // delta_L on the first letter
    out.add(CPair{m.group().multiply(m.yd().degree(w.front().letter), w.front().group), w}, c);
    for (std::size_t k = 1; k < w.size(); ++k)
      out.add(CPair{MWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)),
                    MWord(w.begin() + static_cast<std::ptrdiff_t>(k), w.end())},
              c);
    // delta_R on the last letter
    out.add(CPair{w, w.back().group}, c);
  }
  return out;
}

Scalar counit(const CotensorElement& x) { return hopf_counit(project_group(x)); }

CTupleElement iterated_coproduct(const HopfBimodule& m, const CotensorElement& x, std::size_t n) {
  if (n == 0) throw StructuralError("iterated coproduct needs at least one tensor factor");
  CTupleElement out(m.alphabet());
  if (n == 1) {
    for (const auto& [b, c] : x) out.add(CTuple{b}, c);
    return out;
  }
  for (const auto& [p, c] : coproduct(m, x)) {
    for (const auto& [t, ct] : iterated_coproduct(m, CotensorElement(p.first, 1, m.alphabet()), n - 1)) {
      CTuple nt = t;
      nt.push_back(p.second);
      out.add(std::move(nt), c * ct);
    }
  }
  return out;
}

namespace {

using MLetterSum = std::vector<std::pair<MLetter, Scalar>>;

// f = .L (pi (x) p) + .R (p (x) pi) + mu (p (x) p) on a basis pair.
MLetterSum f_map(const HopfBimodule& m, const CBasis& a, const CBasis& b) {
  const auto* ga = std::get_if<GroupElement>(&a);
  const auto* gb = std::get_if<GroupElement>(&b);
  const auto* wa = std::get_if<MWord>(&a);
  const auto* wb = std::get_if<MWord>(&b);
  if (ga && wb && wb->size() == 1) return act_mletter(m, *ga, wb->front());
  if (wa && gb && wa->size() == 1) return {{MLetter{wa->front().letter, m.group().multiply(wa->front().group, *gb)}, 1}};
  if (wa && wb && wa->size() == 1 && wb->size() == 1) {
    const MLetter& l = wa->front();
    const MLetter& r = wb->front();
    // (v, h)(v', h') = v (h.v') (x) h h'
    MLetterSum out;
    const GroupElement hh = m.group().multiply(l.group, r.group);
    const Element moved = m.yd().act(l.group, r.letter);
    for (const auto& [w, c] : moved)
      for (const auto& [u, d] : m.algebra().multiply(l.letter, w[0])) out.push_back({MLetter{u[0], hh}, c * d});
    return out;
  }
  return {};
}

}  // namespace

CotensorElement star(const HopfBimodule& m, const CotensorElement& x, const CotensorElement& y) {
  CotensorElement out(m.alphabet());
  const auto& group = m.group();
  // g = mu_H (pi (x) pi)
  for (const auto& [bx, cx] : x)
    for (const auto& [by, cy] : y) {
      const auto* gx = std::get_if<GroupElement>(&bx);
      const auto* gy = std::get_if<GroupElement>(&by);
      if (gx && gy) out.add(CBasis{group.multiply(*gx, *gy)}, cx * cy);
    }

  std::map<std::pair<CBasis, CBasis>, MLetterSum> f_cache;
  auto f = [&](const CBasis& a, const CBasis& b) -> const MLetterSum& {
    auto key = std::make_pair(a, b);
    auto it = f_cache.find(key);
    if (it == f_cache.end()) it = f_cache.emplace(std::move(key), f_map(m, a, b)).first;
    return it->second;
  };

  for (const auto& [bx, cx] : x)
    for (const auto& [by, cy] : y) {
      const std::size_t total = KeyTraits<CBasis>::degree(bx) + KeyTraits<CBasis>::degree(by);
      for (std::size_t n = 1; n <= total; ++n) {
        const CTupleElement dx = iterated_coproduct(m, CotensorElement(bx, 1, m.alphabet()), n);
        const CTupleElement dy = iterated_coproduct(m, CotensorElement(by, 1, m.alphabet()), n);
        for (const auto& [tx, ctx] : dx)
          for (const auto& [ty, cty] : dy) {
            std::vector<MLetterSum> factors;
            factors.reserve(n);
            bool zero = false;
            for (std::size_t k = 0; k < n && !zero; ++k) {
              const auto& v = f(tx[k], ty[k]);
              if (v.empty()) zero = true;
              factors.push_back(v);
            }
            if (zero) continue;
            MWord prefix;
            expand_words(factors, 0, prefix, cx * cy * ctx * cty, out);
          }
      }
    }
  return out;
}

CPairElement star(const HopfBimodule& m, const CPairElement& x, const CPairElement& y) {
  CPairElement out(m.alphabet());
  for (const auto& [px, cx] : x)
    for (const auto& [py, cy] : y) {
      const CotensorElement left = star(m, CotensorElement(px.first, 1, m.alphabet()), CotensorElement(py.first, 1, m.alphabet()));
      if (left.is_zero()) continue;
      const CotensorElement right =
          star(m, CotensorElement(px.second, 1, m.alphabet()), CotensorElement(py.second, 1, m.alphabet()));
      for (const auto& [a, ca] : left)
        for (const auto& [b, cb] : right) out.add(CPair{a, b}, cx * cy * ca * cb);
    }
  return out;
}

CotensorElement radford_projection(const HopfBimodule& m, const CotensorElement& x) {
  CotensorElement out(m.alphabet());
  for (const auto& [p, c] : coproduct(m, x)) {
    const GroupAlgebraElement h = project_group(CotensorElement(p.second, c, m.alphabet()));
    if (h.is_zero()) continue;
    out += star(m, CotensorElement(p.first, 1, m.alphabet()), include_group(m, hopf_antipode(m.group(), h)));
  }
  return out;
}

CotensorElement radford_projection_direct(const HopfBimodule& m, const CotensorElement& x) {
  CotensorElement out(m.alphabet());
  for (const auto& [b, c] : x) {
    if (std::get_if<GroupElement>(&b)) {
      out.add(CBasis{m.group().identity()}, c);  // g S(g) = 1
      continue;
    }
    const auto& w = std::get<MWord>(b);
    out += right_action(m, CotensorElement(b, c, m.alphabet()), m.group().inverse(w.back().group));
  }
  return out;
}

Element phi(const HopfBimodule& m, const CotensorElement& x) {
  const auto& group = m.group();
  Element out(m.alphabet());
  for (const auto& [b, c] : x) {
    if (const auto* g = std::get_if<GroupElement>(&b)) {
      if (!group.is_identity(*g))
        throw StructuralError("phi: degree-0 part " + render_group(*g) + " is not right-coinvariant");
      out.add(Word{}, c);
      continue;
    }
    const auto& w = std::get<MWord>(b);
    if (!group.is_identity(w.back().group))
      throw StructuralError("phi: " + render_mword(w, m.alphabet().get()) + " is not right-coinvariant");
    Word v;
    for (const auto& l : w) v.push_back(l.letter);
    out.add(std::move(v), c);
  }
  return out;
}

CotensorElement psi(const HopfBimodule& m, const Element& x) {
  const auto& group = m.group();
  CotensorElement out(m.alphabet());
  for (const auto& [w, c] : x) {
    MWord mw(w.size());
    GroupElement g = group.identity();
    for (std::size_t k = w.size(); k-- > 0;) {
      mw[k] = MLetter{w[k], g};
      g = group.multiply(m.yd().degree(w[k]), g);
    }
    out += mword_element(m, std::move(mw), c);
  }
  return out;
}

SmashElement star_smash(const HopfBimodule& m, const SmashElement& x, const SmashElement& y) {
  QuasiShuffle prod(m.algebra());
  SmashElement out(m.alphabet());
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) {
      const Element moved = m.yd().act(kx.second, Element(ky.first, 1, m.alphabet()));
      const Element body = prod(Element(kx.first, 1, m.alphabet()), moved);
      const GroupElement g = m.group().multiply(kx.second, ky.second);
      for (const auto& [w, c] : body) out.add(SmashKey{w, g}, cx * cy * c);
    }
  return out;
}

SmashElement to_smash(const HopfBimodule& m, const CotensorElement& x) {
  SmashElement out(m.alphabet());
  for (const auto& [p, c] : coproduct(m, x)) {
    const GroupAlgebraElement h = project_group(CotensorElement(p.second, 1, m.alphabet()));
    if (h.is_zero()) continue;
    const Element body = phi(m, radford_projection(m, CotensorElement(p.first, 1, m.alphabet())));
    for (const auto& [w, cw] : body)
      for (const auto& [g, cg] : h) out.add(SmashKey{w, g}, c * cw * cg);
  }
  return out;
}

CotensorElement from_smash(const HopfBimodule& m, const SmashElement& x) {
  CotensorElement out(m.alphabet());
  for (const auto& [k, c] : x)
    out += star(m, psi(m, Element(k.first, c, m.alphabet())), group_element(m, k.second));
  return out;
}

CPairElement braided_coproduct_coinv(const HopfBimodule& m, const CotensorElement& x) {
  CPairElement out(m.alphabet());
  for (const auto& [p, c] : coproduct(m, x)) {
    const CotensorElement a = radford_projection(m, CotensorElement(p.first, 1, m.alphabet()));
    if (a.is_zero()) continue;
    const CotensorElement b = radford_projection(m, CotensorElement(p.second, 1, m.alphabet()));
    for (const auto& [ba, ca] : a)
      for (const auto& [bb, cb] : b) out.add(CPair{ba, bb}, c * ca * cb);
  }
  return out;
}

}  // namespace cofree
