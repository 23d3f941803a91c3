#include "cofree/lincomb.hpp"

namespace cofree {

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

std::string Alphabet::name(Letter l) const {
  if (l < 0 || static_cast<std::size_t>(l) >= names.size()) return "L" + std::to_string(l);
  return names[static_cast<std::size_t>(l)];
}

AlphabetRef make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(Alphabet{std::move(names)});
}

AlphabetRef merge_alphabets(const AlphabetRef& a, const AlphabetRef& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (*a == *b) return a;
  throw StructuralError("alphabet mismatch between operands");
}

Word concat(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word subword(const Word& w, std::size_t begin, std::size_t end) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(begin), w.begin() + static_cast<std::ptrdiff_t>(end));
}

Element letter_element(Letter l, const AlphabetRef& alphabet, const Scalar& coeff) {
  return Element(Word{l}, coeff, alphabet);
}

Element scalar_element(const Scalar& s, const AlphabetRef& alphabet) { return Element(Word{}, s, alphabet); }

Element element_add(const Element& x, const Element& y) { return x + y; }

Element tensor(const Element& x, const Element& y) {
  Element out(merge_alphabets(x.alphabet(), y.alphabet()));
  for (const auto& [wx, cx] : x)
    for (const auto& [wy, cy] : y) out.add(concat(wx, wy), cx * cy);
  return out;
}

LocalTable::LocalTable(std::size_t dim, AlphabetRef alphabet)
    : dim_(dim), alphabet_(std::move(alphabet)), entries_(dim * dim) {}

std::size_t LocalTable::index(Letter a, Letter b) const {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= dim_ || static_cast<std::size_t>(b) >= dim_)
    throw StructuralError("letter pair (" + std::to_string(a) + ", " + std::to_string(b) + ") outside table of dimension " +
                          std::to_string(dim_));
  return static_cast<std::size_t>(a) * dim_ + static_cast<std::size_t>(b);
}

void LocalTable::set(Letter a, Letter b, Element value) {
  if (!value.alphabet()) value.set_alphabet(alphabet_);
  entries_[index(a, b)] = std::move(value);
}

bool LocalTable::has(Letter a, Letter b) const { return entries_[index(a, b)].has_value(); }

const Element& LocalTable::at(Letter a, Letter b) const {
  const auto& e = entries_[index(a, b)];
  if (!e) {
    const Alphabet* al = alphabet_.get();
    throw StructuralError("missing table entry for (" + (al ? al->name(a) : std::to_string(a)) + ", " +
                          (al ? al->name(b) : std::to_string(b)) + ")");
  }
  return *e;
}

void apply_local_word(const LocalTable& table, std::size_t i, const Word& w, const Scalar& c, Element& out) {
  if (i < 1 || i + 1 > w.size())
    throw StructuralError("position " + std::to_string(i) + " out of range for word of length " + std::to_string(w.size()));
  const Element& value = table.at(w[i - 1], w[i]);
  for (const auto& [mid, cm] : value) {
    Word nw;
    nw.reserve(w.size() - 2 + mid.size());
    nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i - 1));
    nw.insert(nw.end(), mid.begin(), mid.end());
    nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 1), w.end());
    out.add(std::move(nw), c * cm);
  }
}

Element apply_local(const LocalTable& table, std::size_t i, const Element& x) {
  Element out(x.alphabet());
  for (const auto& [w, c] : x) apply_local_word(table, i, w, c, out);
  return out;
}

std::string render_word(const Word& w, const Alphabet* alphabet, std::string_view separator) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += separator;
    out += alphabet ? alphabet->name(w[k]) : "L" + std::to_string(w[k]);
  }
  return out;
}

namespace detail {

std::string render_term(const Scalar& c, const std::string& body, bool first) {
  bool negative = false;
  std::string coeff_text;
  if (c.is_monomial()) {
    const auto& [e, v] = *c.terms().begin();
    negative = v < 0;
    const Scalar magnitude = negative ? -c : c;
    if (!(body.size() && magnitude.is_one())) coeff_text = magnitude.to_string();
  } else {
    coeff_text = "(" + c.to_string() + ")";
  }
  std::string text;
  if (body.empty()) text = coeff_text;
  else if (coeff_text.empty()) text = body;
  else text = coeff_text + " " + body;
  if (first) return (negative ? "-" : "") + text;
  return (negative ? " - " : " + ") + text;
}

}  // namespace detail

std::string render(const Element& x) {
  const Alphabet* al = x.alphabet().get();
  return render_terms(x, [al](const Word& w) { return render_word(w, al); });
}

std::string render(const PairElement& x) {
  const Alphabet* al = x.alphabet().get();
  return render_terms(x, [al](const WordPair& p) {
    auto side = [al](const Word& w) { return w.empty() ? std::string("1") : render_word(w, al); };
    return side(p.first) + " | " + side(p.second);
  });
}

std::string render(const TupleElement& x) {
  const Alphabet* al = x.alphabet().get();
  return render_terms(x, [al](const WordTuple& t) {
    std::string out;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k) out += " | ";
      out += t[k].empty() ? std::string("1") : render_word(t[k], al);
    }
    return out;
  });
}

}  // namespace cofree
