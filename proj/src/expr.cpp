#include "cofree/expr.hpp"

#include <cctype>

namespace cofree {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, int line, int column_offset) : text_(text), line_(line), offset_(column_offset) {}

  ExpressionSyntax element() {
    ExpressionSyntax out;
    skip_ws();
    int sign = 1;
    if (eat_minus()) sign = -1;
    else eat('+');
    for (;;) {
      TermSyntax t = term();
      if (sign < 0) t.coeff = -t.coeff;
      out.terms.push_back(std::move(t));
      skip_ws();
      if (eat('+')) sign = 1;
      else if (eat_minus()) sign = -1;
      else break;
    }
    return out;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column()); }

 private:
  int column() const { return offset_ + static_cast<int>(pos_) + 1; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_minus() {
    skip_ws();
    if (eat('-')) return true;
    if (text_.substr(pos_, kUnicodeMinus.size()) == kUnicodeMinus) {
      pos_ += kUnicodeMinus.size();
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_ws();
    if (!ident_start(peek())) fail("expected a name");
    const std::size_t start = pos_;
    while (ident_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Looks at the next identifier without consuming it.
  std::string peek_identifier() {
    skip_ws();
    std::size_t p = pos_;
    if (p >= text_.size() || !ident_start(text_[p])) return {};
    while (p < text_.size() && ident_char(text_[p])) ++p;
    return std::string(text_.substr(pos_, p - pos_));
  }

  bool at_group_literal() {
    skip_ws();
    return peek() == 'K' && peek(1) == '{';
  }

  long integer() {
    skip_ws();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000L) fail("integer too large");
      ++pos_;
    }
    return negative ? -v : v;
  }

  bool at_scalar() {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
    return peek_identifier() == "q";
  }

  Scalar scalar_factor() {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      Rational r(std::string(text_.substr(start, pos_ - start)));
      if (r.get_den() == 0) fail("zero denominator");
      r.canonicalize();
      return Scalar(r);
    }
    if (c == '(') {
      ++pos_;
      const int open = column();
      ExpressionSyntax inner = element();
      if (!eat(')')) fail("expected ')'");
      Scalar sum;
      for (const auto& t : inner.terms) {
        if (!t.word.empty() || t.group_only || t.smash_group)
          throw ParseError("only scalars may appear inside parentheses", line_, open);
        sum += t.coeff;
      }
      return sum;
    }
    identifier();  // q
    if (eat('^')) return Scalar::q_power(static_cast<int>(integer()));
    return Scalar::q_power(1);
  }

  GroupSyntax group() {
    skip_ws();
    GroupSyntax g;
    g.column = column();
    if (at_group_literal()) {
      pos_ += 2;
      std::vector<int> exps;
      skip_ws();
      if (peek() != '}') {
        exps.push_back(static_cast<int>(integer()));
        while (eat(',')) exps.push_back(static_cast<int>(integer()));
      }
      if (!eat('}')) fail("expected '}'");
      g.exps = std::move(exps);
      return g;
    }
    for (;;) {
      std::string name = identifier();
      int power = 1;
      if (eat('^')) power = static_cast<int>(integer());
      g.factors.emplace_back(std::move(name), power);
      skip_ws();
      if (peek() == '*' && ident_start(peek_after_star())) {
        ++pos_;
        continue;
      }
      break;
    }
    return g;
  }

  char peek_after_star() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() ? text_[p] : '\0';
  }

  LetterSyntax mletter() {
    skip_ws();
    LetterSyntax l;
    l.column = column();
    l.name = identifier();
    if (l.name == "q") fail("'q' is reserved for the scalar parameter");
    if (eat('.')) l.group = group();
    return l;
  }

  TermSyntax term() {
    skip_ws();
    TermSyntax t;
    t.column = column();
    t.coeff = 1;
    bool have_scalar = false;
    while (at_scalar()) {
      t.coeff = t.coeff * scalar_factor();
      have_scalar = true;
    }
    bool starred = false;
    if (have_scalar && eat('*')) starred = true;
    skip_ws();
    bool have_body = false;
    if (at_group_literal()) {
      t.group_only = group();
      have_body = true;
    } else if (ident_start(peek())) {
      t.word.push_back(mletter());
      while (eat('@')) t.word.push_back(mletter());
      have_body = true;
    }
    if (eat('#')) {
      t.smash_group = group();
      have_body = true;
    }
    if (starred && !have_body) fail("expected a word after '*'");
    if (!have_scalar && !have_body) fail(at_end() ? "unexpected end of expression" : "expected a term");
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int offset_;
};

std::string group_text(const GroupSyntax& g) {
  if (g.exps) return render_group(GroupElement{*g.exps});
  std::string out;
  for (const auto& [n, p] : g.factors) out += (out.empty() ? "" : "*") + n + (p == 1 ? "" : "^" + std::to_string(p));
  return out;
}

Letter resolve_letter(const LetterSyntax& l, const AlphabetRef& alphabet, int line) {
  auto found = alphabet->find(l.name);
  if (!found) throw ParseError("unknown letter '" + l.name + "'", line, l.column);
  return *found;
}

}  // namespace

ExpressionSyntax parse_expression(std::string_view text, int line) {
  Parser p(text, line, 0);
  ExpressionSyntax e = p.element();
  p.expect_end();
  return e;
}

Scalar parse_scalar(std::string_view text, int line, int column_offset) {
  Parser p(text, line, column_offset);
  ExpressionSyntax e = p.element();
  p.expect_end();
  Scalar s;
  for (const auto& t : e.terms) {
    if (!t.word.empty() || t.group_only || t.smash_group) throw ParseError("expected a scalar", line, column_offset + t.column);
    s += t.coeff;
  }
  return s;
}

GroupElement resolve_group(const GroupSyntax& g, const AbelianGroup& group, int line) {
  if (g.exps) {
    if (g.exps->size() != group.generators())
      throw ParseError("group literal " + group_text(g) + " needs " + std::to_string(group.generators()) + " exponents", line,
                       g.column);
    return group.make(*g.exps);
  }
  GroupElement out = group.identity();
  for (const auto& [name, power] : g.factors) {
    auto k = group.find_generator(name);
    if (!k) throw ParseError("unknown group generator '" + name + "'", line, g.column);
    out = group.multiply(out, group.generator(*k, power));
  }
  return out;
}

Element to_element(const ExpressionSyntax& e, const AlphabetRef& alphabet, int line) {
  Element out(alphabet);
  for (const auto& t : e.terms) {
    if (t.group_only || t.smash_group) throw ParseError("group elements are not allowed here", line, t.column);
    Word w;
    for (const auto& l : t.word) {
      if (l.group) throw ParseError("letter '" + l.name + "' carries a group annotation", line, l.column);
      w.push_back(resolve_letter(l, alphabet, line));
    }
    out.add(std::move(w), t.coeff);
  }
  return out;
}

CotensorElement to_cotensor(const ExpressionSyntax& e, const HopfBimodule& m, int line) {
  CotensorElement out(m.alphabet());
  for (const auto& t : e.terms) {
    if (t.smash_group) throw ParseError("'#' is only meaningful for smash-product input", line, t.column);
    if (t.group_only) {
      out += group_element(m, resolve_group(*t.group_only, m.group(), line), t.coeff);
      continue;
    }
    if (t.word.empty()) {
      out += group_element(m, m.group().identity(), t.coeff);
      continue;
    }
    // A lone unannotated name that is a group generator and not a letter.
    if (t.word.size() == 1 && !t.word[0].group && !m.alphabet()->find(t.word[0].name) &&
        m.group().find_generator(t.word[0].name)) {
      GroupSyntax g;
      g.factors.emplace_back(t.word[0].name, 1);
      g.column = t.word[0].column;
      out += group_element(m, resolve_group(g, m.group(), line), t.coeff);
      continue;
    }
    const bool annotated = t.word[0].group.has_value();
    for (const auto& l : t.word)
      if (l.group.has_value() != annotated)
        throw ParseError("either every letter of a word carries a group or none does", line, l.column);
    if (!annotated) {
      Word w;
      for (const auto& l : t.word) w.push_back(resolve_letter(l, m.alphabet(), line));
      out += psi(m, Element(std::move(w), t.coeff, m.alphabet()));
      continue;
    }
    MWord w;
    for (const auto& l : t.word) w.push_back(MLetter{resolve_letter(l, m.alphabet(), line), resolve_group(*l.group, m.group(), line)});
    out += mword_element(m, std::move(w), t.coeff);
  }
  return out;
}

SmashElement to_smash_element(const ExpressionSyntax& e, const HopfBimodule& m, int line) {
  SmashElement out(m.alphabet());
  for (const auto& t : e.terms) {
    if (t.group_only) throw ParseError("write smash group legs after '#'", line, t.column);
    Word w;
    for (const auto& l : t.word) {
      if (l.group) throw ParseError("letter '" + l.name + "' carries a group annotation; use '#'", line, l.column);
      w.push_back(resolve_letter(l, m.alphabet(), line));
    }
    const GroupElement g = t.smash_group ? resolve_group(*t.smash_group, m.group(), line) : m.group().identity();
    out.add(SmashKey{std::move(w), g}, t.coeff);
  }
  return out;
}

}  // namespace cofree
