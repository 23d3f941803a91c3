#include "cofree/qalg.hpp"

namespace cofree {

BraidedAlgebraSpec::BraidedAlgebraSpec(BraidingTable braiding, LocalTable mult, std::optional<Letter> unit)
    : braiding_(std::move(braiding)), mult_(std::move(mult)), unit_(unit) {
  const auto n = static_cast<Letter>(braiding_.dim());
  if (mult_.dim() != braiding_.dim()) throw StructuralError("multiplication and braiding dimensions differ");
  LocalTable filled(braiding_.dim(), braiding_.alphabet());
  for (Letter a = 0; a < n; ++a)
    for (Letter b = 0; b < n; ++b) {
      Element v = mult_.has(a, b) ? mult_.at(a, b) : Element(braiding_.alphabet());
      for (const auto& [w, c] : v)
        if (w.size() != 1) throw StructuralError("multiplication values must be linear combinations of letters");
      filled.set(a, b, std::move(v));
    }
  mult_ = std::move(filled);
  if (unit_ && (*unit_ < 0 || *unit_ >= n)) throw StructuralError("unit letter out of range");
}

namespace {

// Linear extension of m: applies the multiplication at positions (1, 2).
Element multiply_front(const BraidedAlgebraSpec& spec, const Element& x) { return apply_local(spec.mult(), 1, x); }

Element prepend(Letter l, const Element& x) {
  Element out(x.alphabet());
  for (const auto& [w, c] : x) {
    Word nw;
    nw.reserve(w.size() + 1);
    nw.push_back(l);
    nw.insert(nw.end(), w.begin(), w.end());
    out.add(std::move(nw), c);
  }
  return out;
}

// beta_{i,1} applied to the letters at 1-based positions offset+1 .. offset+i+1.
Element braid_past(const BraidedAlgebraSpec& spec, std::size_t offset, int i, const Element& x) {
  if (i == 0) return x;
  return apply_braid_word(spec.braiding(), reduced_word(chi(i, 1)), x, offset);
}

}  // namespace

CheckResult check_braided_algebra(const BraidedAlgebraSpec& spec) {
  const auto n = static_cast<Letter>(spec.dim());
  const auto& al = spec.alphabet();
  const BraidingTable& s = spec.braiding();
  auto word_text = [&al](const Word& w) { return render_word(w, al.get()); };

  for (Letter a = 0; a < n; ++a)
    for (Letter b = 0; b < n; ++b)
      for (Letter c = 0; c < n; ++c) {
        const Element x(Word{a, b, c}, 1, al);
        // (id (x) m) s_1 s_2 = s (m (x) id)
        {
          const Element moved = apply_braid_word(s, {1, 2}, x);
          const Element lhs = apply_local(spec.mult(), 2, moved);
          const Element rhs = apply_local(s.table(), 1, apply_local(spec.mult(), 1, x));
          if (!(lhs == rhs)) return CheckResult::fail("(id(x)m)s1s2 on " + word_text(x.begin()->first), render(lhs), render(rhs));
        }
        // (m (x) id) s_2 s_1 = s (id (x) m)
        {
          const Element moved = apply_braid_word(s, {2, 1}, x);
          const Element lhs = apply_local(spec.mult(), 1, moved);
          const Element rhs = apply_local(s.table(), 1, apply_local(spec.mult(), 2, x));
          if (!(lhs == rhs)) return CheckResult::fail("(m(x)id)s2s1 on " + word_text(x.begin()->first), render(lhs), render(rhs));
        }
        // associativity
        {
          const Element lhs = apply_local(spec.mult(), 1, apply_local(spec.mult(), 1, x));
          const Element rhs = apply_local(spec.mult(), 1, apply_local(spec.mult(), 2, x));
          if (!(lhs == rhs)) return CheckResult::fail("associativity on " + word_text(x.begin()->first), render(lhs), render(rhs));
        }
      }

  if (spec.unit()) {
    const Letter u = *spec.unit();
    for (Letter a = 0; a < n; ++a) {
      const Element la = letter_element(a, al);
      if (!(spec.multiply(u, a) == la) || !(spec.multiply(a, u) == la))
        return CheckResult::fail("unit law on " + al->name(a), render(spec.multiply(u, a)), render(spec.multiply(a, u)));
      if (!(s(a, u) == Element(Word{u, a}, 1, al)))
        return CheckResult::fail("sigma(a(x)1) = 1(x)a on " + al->name(a), render(s(a, u)), render(Element(Word{u, a}, 1, al)));
      if (!(s(u, a) == Element(Word{a, u}, 1, al)))
        return CheckResult::fail("sigma(1(x)a) = a(x)1 on " + al->name(a), render(s(u, a)), render(Element(Word{a, u}, 1, al)));
    }
  }
  return CheckResult::pass();
}

BraidedAlgebraSpec adjoin_unit(const BraidedAlgebraSpec& spec, const std::string& unit_name) {
  if (spec.unit()) throw StructuralError("braided algebra already has a unit");
  const auto n = static_cast<Letter>(spec.dim());
  std::vector<std::string> names = spec.alphabet()->names;
  if (spec.alphabet()->find(unit_name)) throw StructuralError("unit name '" + unit_name + "' already used");
  names.push_back(unit_name);
  auto al = make_alphabet(std::move(names));
  const Letter u = n;
  auto rebase = [&al](const Element& e) {
    Element out(al);
    for (const auto& [w, c] : e) out.add(w, c);
    return out;
  };
  LocalTable braid(static_cast<std::size_t>(n + 1), al);
  LocalTable mult(static_cast<std::size_t>(n + 1), al);
  for (Letter a = 0; a <= n; ++a)
    for (Letter b = 0; b <= n; ++b) {
      if (a < n && b < n) {
        braid.set(a, b, rebase(spec.braiding()(a, b)));
        mult.set(a, b, rebase(spec.multiply(a, b)));
      } else {
        braid.set(a, b, Element(Word{b, a}, 1, al));
        mult.set(a, b, Element(Word{a == u ? b : a}, 1, al));
      }
    }
  return BraidedAlgebraSpec(BraidingTable(std::move(braid)), std::move(mult), u);
}

// ---------------------------------------------------------------------------
// Quasi-shuffle product

const Element& QuasiShuffle::words(const Word& a, const Word& b) {
  auto key = std::make_pair(a, b);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Element value = compute(a, b);
  return memo_.emplace(std::move(key), std::move(value)).first->second;
}

Element QuasiShuffle::compute(const Word& a, const Word& b) {
  const auto& spec = *spec_;
  const auto& al = spec.alphabet();
  if (a.empty()) return Element(b, 1, al);
  if (b.empty()) return Element(a, 1, al);
  const auto i = a.size();
  const auto j = b.size();
  const Element ab(concat(a, b), 1, al);
  Element out(al);

  if (i == 1 && j == 1) {
    // a_1 * b_1 = a_1 (x) b_1 + sigma(a_1 (x) b_1) + m(a_1 (x) b_1)
    out += ab;
    out += spec.braiding()(a[0], b[0]);
    out += spec.multiply(a[0], b[0]);
    return out;
  }

  if (i == 1) {
    // (id^{j+1} + (id (x) *_{(1,j-1)})(beta_{11} (x) id^{j-1}) + m (x) id^{j-1})(a_1 (x) b)
    const Word tail = subword(b, 1, j);
    out += ab;
    for (const auto& [w, c] : spec.braiding()(a[0], b[0])) out.add_scaled(prepend(w[0], words(Word{w[1]}, tail)), c);
    for (const auto& [w, c] : spec.multiply(a[0], b[0])) out.add(concat(w, tail), c);
    return out;
  }

  if (j == 1) {
    // (id (x) *_{(i-1,1)} + beta_{i1} + (m (x) id^{i-1})(id (x) beta_{i-1,1}))(a (x) b_1)
    out += prepend(a[0], words(subword(a, 1, i), b));
    out += braid_past(spec, 0, static_cast<int>(i), ab);
    out += multiply_front(spec, braid_past(spec, 1, static_cast<int>(i - 1), ab));
    return out;
  }

  // General clause.
  out += prepend(a[0], words(subword(a, 1, i), b));
  for (const auto& [w, c] : braid_past(spec, 0, static_cast<int>(i), ab))
    out.add_scaled(prepend(w[0], words(subword(w, 1, i + 1), subword(w, i + 1, w.size()))), c);
  for (const auto& [w, c] : multiply_front(spec, braid_past(spec, 1, static_cast<int>(i - 1), ab)))
    out.add_scaled(prepend(w[0], words(subword(w, 1, i), subword(w, i, w.size()))), c);
  return out;
}

Element QuasiShuffle::operator()(const Element& x, const Element& y) {
  Element out(merge_alphabets(merge_alphabets(x.alphabet(), y.alphabet()), spec_->alphabet()));
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) out.add_scaled(words(wx, wy), cx * cy);
  return out;
}

Element qsh(const BraidedAlgebraSpec& spec, const Element& x, const Element& y) { return QuasiShuffle(spec)(x, y); }

namespace {

class GeneralClause {
 public:
  explicit GeneralClause(const BraidedAlgebraSpec& spec) : spec_(spec) {}

  const Element& words(const Word& a, const Word& b) {
    auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Element value = compute(a, b);
    return memo_.emplace(std::move(key), std::move(value)).first->second;
  }

 private:
  Element compute(const Word& a, const Word& b) {
    const auto& al = spec_.alphabet();
    if (a.empty()) return Element(b, 1, al);
    if (b.empty()) return Element(a, 1, al);
    const auto i = a.size();
    const Element ab(concat(a, b), 1, al);
    Element out(al);
    out += prepend(a[0], words(subword(a, 1, i), b));
    for (const auto& [w, c] : braid_past(spec_, 0, static_cast<int>(i), ab))
      out.add_scaled(prepend(w[0], words(subword(w, 1, i + 1), subword(w, i + 1, w.size()))), c);
    for (const auto& [w, c] : multiply_front(spec_, braid_past(spec_, 1, static_cast<int>(i - 1), ab)))
      out.add_scaled(prepend(w[0], words(subword(w, 1, i), subword(w, i, w.size()))), c);
    return out;
  }

  const BraidedAlgebraSpec& spec_;
  std::map<std::pair<Word, Word>, Element> memo_;
};

}  // namespace

Element qsh_general(const BraidedAlgebraSpec& spec, const Element& x, const Element& y) {
  GeneralClause clause(spec);
  Element out(merge_alphabets(x.alphabet(), y.alphabet()));
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) out.add_scaled(clause.words(wx, wy), cx * cy);
  return out;
}

// ---------------------------------------------------------------------------
// Deconcatenation and the coradical filtration

PairElement deconcat(const Element& x) {
  PairElement out(x.alphabet());
  for (const auto& [w, c] : x)
    for (std::size_t k = 0; k <= w.size(); ++k) out.add(WordPair{subword(w, 0, k), subword(w, k, w.size())}, c);
  return out;
}

PairElement reduced_deconcat(const Element& x) {
  PairElement out = deconcat(x);
  for (const auto& [w, c] : x) {
    out.add(WordPair{w, Word{}}, -c);
    out.add(WordPair{Word{}, w}, -c);
  }
  return out;
}

TupleElement iterated_reduced_deconcat(const Element& x, std::size_t n) {
  if (n == 0) throw StructuralError("iterated coproduct needs at least one tensor factor");
  TupleElement out(x.alphabet());
  if (n == 1) {
    for (const auto& [w, c] : x) out.add(WordTuple{w}, c);
    return out;
  }
  for (const auto& [p, c] : reduced_deconcat(x)) {
    const TupleElement left = iterated_reduced_deconcat(Element(p.first, 1, x.alphabet()), n - 1);
    for (const auto& [t, ct] : left) {
      WordTuple nt = t;
      nt.push_back(p.second);
      out.add(std::move(nt), c * ct);
    }
  }
  return out;
}

std::size_t filtration_degree(const Element& x) {
  Element positive(x.alphabet());
  for (const auto& [w, c] : x)
    if (!w.empty()) positive.add(w, c);
  if (positive.is_zero()) return 0;
  std::size_t r = 1;
  while (!iterated_reduced_deconcat(positive, r + 1).is_zero()) ++r;
  return r;
}

Element extend_degree_one(const BraidedAlgebraSpec& spec_b, const BraidedAlgebraSpec& spec_a, const std::vector<Element>& f,
                          const Element& x) {
  const auto nb = static_cast<Letter>(spec_b.dim());
  if (f.size() != spec_b.dim()) throw StructuralError("letter map must assign an image to every letter of B");
  const auto& al_a = spec_a.alphabet();
  const auto& al_b = spec_b.alphabet();
  for (const auto& img : f)
    for (const auto& [w, c] : img)
      if (w.size() != 1) throw StructuralError("letter map values must be linear combinations of letters of A");

  // f on T(B): the letter map on length-1 words, zero on every other degree.
  auto apply_f = [&](const Element& e) {
    Element out(al_a);
    for (const auto& [w, c] : e)
      if (w.size() == 1) out.add_scaled(f[static_cast<std::size_t>(w[0])], c);
    return out;
  };

  if (!apply_f(Element(Word{}, 1, al_b)).is_zero()) throw StructuralError("f(1_B) != 0");
  QuasiShuffle prod_b(spec_b);
  for (Letter b1 = 0; b1 < nb; ++b1)
    for (Letter b2 = 0; b2 < nb; ++b2) {
      const std::string pair = al_b->name(b1) + " (x) " + al_b->name(b2);
      // (f (x) f) tau = sigma (f (x) f)
      Element lhs(al_a);
      for (const auto& [w, c] : spec_b.braiding()(b1, b2))
        lhs.add_scaled(tensor(f[static_cast<std::size_t>(w[0])], f[static_cast<std::size_t>(w[1])]), c);
      Element rhs(al_a);
      for (const auto& [w, c] : tensor(f[static_cast<std::size_t>(b1)], f[static_cast<std::size_t>(b2)]))
        rhs.add_scaled(spec_a.braiding()(w[0], w[1]), c);
      if (!(lhs == rhs))
        throw StructuralError("f does not intertwine braidings on " + pair + ": " + render(lhs) + " vs " + render(rhs));
      // m_A (f (x) f) = f m_B on ker(eps) (x) ker(eps)
      const Element fm = apply_f(prod_b.words(Word{b1}, Word{b2}));
      const Element mf = apply_local(spec_a.mult(), 1, tensor(f[static_cast<std::size_t>(b1)], f[static_cast<std::size_t>(b2)]));
      if (!(fm == mf))
        throw StructuralError("f does not intertwine multiplications on " + pair + ": " + render(fm) + " vs " + render(mf));
    }

  Element out(al_a);
  for (const auto& [w, c] : x) {
    if (w.empty()) out.add(Word{}, c);  // eps_B
  }
  const std::size_t top = filtration_degree(x);
  for (std::size_t n = 1; n <= top; ++n) {
    for (const auto& [t, c] : iterated_reduced_deconcat(x, n)) {
      Element term(Word{}, c, al_a);
      for (const auto& piece : t) {
        term = tensor(term, apply_f(Element(piece, 1, al_b)));
        if (term.is_zero()) break;
      }
      out += term;
    }
  }
  return out;
}

std::vector<Word> all_words(std::size_t dim, std::size_t min_len, std::size_t max_len) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (len >= min_len) out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Word> next;
    for (const auto& w : layer)
      for (std::size_t l = 0; l < dim; ++l) {
        Word nw = w;
        nw.push_back(static_cast<Letter>(l));
        next.push_back(std::move(nw));
      }
    layer = std::move(next);
  }
  return out;
}

CheckResult check_qsh_associativity(const BraidedAlgebraSpec& spec, std::size_t max_total) {
  if (max_total < 3) return CheckResult::pass();
  const auto& al = spec.alphabet();
  QuasiShuffle prod(spec);
  const auto words = all_words(spec.dim(), 1, max_total - 2);
  for (const auto& x : words)
    for (const auto& y : words) {
      if (x.size() + y.size() + 1 > max_total) continue;
      const Element xy = prod.words(x, y);
      for (const auto& z : words) {
        if (x.size() + y.size() + z.size() > max_total) continue;
        const Element lhs = prod(xy, Element(z, 1, al));
        const Element rhs = prod(Element(x, 1, al), prod.words(y, z));
        if (!(lhs == rhs))
          return CheckResult::fail("(" + render_word(x, al.get()) + ", " + render_word(y, al.get()) + ", " +
                                       render_word(z, al.get()) + ")",
                                   render(lhs), render(rhs));
      }
    }
  return CheckResult::pass();
}

CheckResult check_qsh_bialgebra(const BraidedAlgebraSpec& spec, std::size_t max_total) {
  const auto& al = spec.alphabet();
  QuasiShuffle prod(spec);
  const auto words = all_words(spec.dim(), 0, max_total);
  for (const auto& x : words)
    for (const auto& y : words) {
      if (x.size() + y.size() > max_total) continue;
      const PairElement lhs = deconcat(prod.words(x, y));
      PairElement rhs(al);
      const PairElement dx = deconcat(Element(x, 1, al));
      const PairElement dy = deconcat(Element(y, 1, al));
      for (const auto& [px, cx] : dx)
        for (const auto& [py, cy] : dy) {
          const PairElement mid = beta(spec.braiding(), PairElement(WordPair{px.second, py.first}, 1, al));
          for (const auto& [pm, cm] : mid) {
            const Element left = prod.words(px.first, pm.first);
            const Element right = prod.words(pm.second, py.second);
            for (const auto& [wl, cl] : left)
              for (const auto& [wr, cr] : right) rhs.add(WordPair{wl, wr}, cx * cy * cm * cl * cr);
          }
        }
      if (!(lhs == rhs))
        return CheckResult::fail("(" + render_word(x, al.get()) + ", " + render_word(y, al.get()) + ")", render(lhs), render(rhs));
    }
  return CheckResult::pass();
}

}  // namespace cofree
