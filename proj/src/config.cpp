#include "cofree/config.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace cofree {

BraidingTable ConfigDocument::braiding_table() const {
  if (braiding) return BraidingTable(*braiding);
  return induced_braiding(spec);
}

BraidedAlgebraSpec ConfigDocument::algebra() const {
  LocalTable mult = spec.mult() ? *spec.mult() : LocalTable(spec.dim(), spec.alphabet());
  return BraidedAlgebraSpec(braiding_table(), std::move(mult), spec.unit());
}

namespace {

struct Line {
  std::string text;
  int number = 0;
  int column = 1;  // column of text[0] in the source line
};

struct Section {
  int header_line = 0;
  std::vector<Line> lines;
};

std::string_view trim(std::string_view s, int* lead = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (lead) *lead = static_cast<int>(b);
  return s.substr(b, e - b);
}

Line sub_line(const Line& l, std::size_t begin, std::size_t end = std::string::npos) {
  std::string_view raw = std::string_view(l.text).substr(begin, end == std::string::npos ? std::string::npos : end - begin);
  int lead = 0;
  std::string_view t = trim(raw, &lead);
  return Line{std::string(t), l.number, l.column + static_cast<int>(begin) + lead};
}

// Splits "key = value" at the first '='.
std::pair<Line, Line> split_assign(const Line& l) {
  const auto eq = l.text.find('=');
  if (eq == std::string::npos) throw ParseError("expected 'key = value'", l.number, l.column);
  return {sub_line(l, 0, eq), sub_line(l, eq + 1)};
}

std::vector<Line> split_list(const Line& l) {
  std::vector<Line> out;
  if (l.text.empty()) return out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= l.text.size(); ++i) {
    if (i < l.text.size() && l.text[i] == '(') ++depth;
    if (i < l.text.size() && l.text[i] == ')') --depth;
    if (i == l.text.size() || (l.text[i] == ',' && depth == 0)) {
      Line item = sub_line(l, start, i);
      if (item.text.empty()) throw ParseError("empty list item", l.number, item.column);
      out.push_back(std::move(item));
      start = i + 1;
    }
  }
  return out;
}

int parse_int(const Line& l) {
  if (l.text.empty()) throw ParseError("expected an integer", l.number, l.column);
  std::size_t i = 0;
  if (l.text[0] == '-' || l.text[0] == '+') i = 1;
  if (i == l.text.size()) throw ParseError("expected an integer", l.number, l.column);
  for (std::size_t k = i; k < l.text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(l.text[k])))
      throw ParseError("malformed integer '" + l.text + "'", l.number, l.column + static_cast<int>(k));
  if (l.text.size() - i > 9) throw ParseError("integer too large", l.number, l.column);
  return std::stoi(l.text);
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

void check_name(const Line& l, const char* what) {
  if (!valid_name(l.text)) throw ParseError("invalid " + std::string(what) + " name '" + l.text + "'", l.number, l.column);
  if (l.text == "q") throw ParseError("'q' is reserved for the scalar parameter", l.number, l.column);
}

// "a b -> ELEMENT"
struct TableLine {
  Line left;
  Line right;
  Line value;
};

TableLine split_table_line(const Line& l) {
  const auto arrow = l.text.find("->");
  if (arrow == std::string::npos) throw ParseError("expected 'a b -> element'", l.number, l.column);
  Line lhs = sub_line(l, 0, arrow);
  Line value = sub_line(l, arrow + 2);
  const auto space = lhs.text.find_first_of(" \t");
  if (space == std::string::npos) throw ParseError("expected two letters before '->'", l.number, lhs.column);
  Line a = sub_line(lhs, 0, space);
  Line b = sub_line(lhs, space);
  if (b.text.find_first_of(" \t") != std::string::npos)
    throw ParseError("expected two letters before '->'", l.number, b.column);
  return {a, b, value};
}

Letter find_letter(const AlphabetRef& al, const Line& l) {
  auto found = al->find(l.text);
  if (!found) throw ParseError("unknown letter '" + l.text + "'", l.number, l.column);
  return *found;
}

Element table_value(const Line& value, const AlphabetRef& al) {
  if (value.text.empty()) throw ParseError("missing element after '->'", value.number, value.column);
  try {
    return to_element(parse_expression(value.text, value.number), al, value.number);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), value.number, value.column + e.column() - 1);
  }
}

}  // namespace

ConfigDocument parse_config(std::string_view text) {
  std::map<std::string, Section> sections;
  Section* current = nullptr;
  int number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    int lead = 0;
    std::string_view t = trim(raw, &lead);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t[0] == '[') {
      if (t.back() != ']') throw ParseError("malformed section header", number, lead + 1);
      std::string name(trim(t.substr(1, t.size() - 2)));
      static const char* known[] = {"group", "basis", "action", "mult", "braiding"};
      bool ok = false;
      for (const char* k : known) ok = ok || name == k;
      if (!ok) throw ParseError("unknown section [" + name + "]", number, lead + 1);
      if (sections.count(name)) throw ParseError("duplicate section [" + name + "]", number, lead + 1);
      current = &sections[name];
      current->header_line = number;
      continue;
    }
    if (!current) throw ParseError("content before the first section", number, lead + 1);
    current->lines.push_back(Line{std::string(t), number, lead + 1});
  }

  // [group]
  auto gs = sections.find("group");
  if (gs == sections.end()) throw ParseError("missing [group] section", 1, 1);
  int free = 0;
  std::vector<int> torsion;
  std::vector<std::string> gen_names;
  std::optional<Line> names_line;
  for (const auto& l : gs->second.lines) {
    auto [key, value] = split_assign(l);
    if (key.text == "free") {
      free = parse_int(value);
      if (free < 0) throw ParseError("free rank must be non-negative", value.number, value.column);
    } else if (key.text == "torsion") {
      for (const auto& item : split_list(value)) {
        const int m = parse_int(item);
        if (m < 2) throw ParseError("torsion orders must be at least 2", item.number, item.column);
        torsion.push_back(m);
      }
    } else if (key.text == "names") {
      names_line = value;
      for (const auto& item : split_list(value)) {
        check_name(item, "generator");
        gen_names.push_back(item.text);
      }
    } else {
      throw ParseError("unknown key '" + key.text + "' in [group]", key.number, key.column);
    }
  }
  AbelianGroup group;
  try {
    group = AbelianGroup(free, torsion, gen_names);
  } catch (const StructuralError& e) {
    const Line& at = names_line ? *names_line : Line{"", gs->second.header_line, 1};
    throw ParseError(e.what(), at.number, at.column);
  }

  // [basis]
  auto bs = sections.find("basis");
  if (bs == sections.end()) throw ParseError("missing [basis] section", gs->second.header_line, 1);
  ConfigDocument doc;
  std::vector<std::string> letters;
  std::vector<GroupElement> degrees;
  for (const auto& l : bs->second.lines) {
    auto [key, value] = split_assign(l);
    check_name(key, "letter");
    if (key.text == "K" || group.find_generator(key.text))
      throw ParseError("letter name '" + key.text + "' clashes with a group name", key.number, key.column);
    for (const auto& n : letters)
      if (n == key.text) throw ParseError("duplicate letter '" + key.text + "'", key.number, key.column);
    std::vector<int> exps;
    for (const auto& item : split_list(value)) exps.push_back(parse_int(item));
    if (exps.size() != group.generators())
      throw ParseError("degree of '" + key.text + "' needs " + std::to_string(group.generators()) + " exponents", value.number,
                       value.column);
    GroupElement g = group.make(exps);
    if (g.exps != exps) doc.notes.push_back("line " + std::to_string(l.number) + ": torsion exponents of '" + key.text +
                                            "' reduced to " + render_group(g));
    letters.push_back(key.text);
    degrees.push_back(std::move(g));
  }
  if (letters.empty()) throw ParseError("[basis] declares no letters", bs->second.header_line, 1);
  auto al = make_alphabet(letters);
  const std::size_t dim = letters.size();

  // [action]
  std::vector<ActionMatrix> actions(group.generators(), identity_matrix(dim));
  if (auto as = sections.find("action"); as != sections.end()) {
    for (const auto& l : as->second.lines) {
      const auto sp = l.text.find_first_of(" \t");
      if (sp == std::string::npos) throw ParseError("expected 'GEN diag ...' or 'GEN row LETTER = ...'", l.number, l.column);
      Line gen = sub_line(l, 0, sp);
      Line rest = sub_line(l, sp);
      auto k = group.find_generator(gen.text);
      if (!k) throw ParseError("unknown group generator '" + gen.text + "'", gen.number, gen.column);
      ActionMatrix& a = actions[*k];
      const auto sp2 = rest.text.find_first_of(" \t");
      const std::string kind = rest.text.substr(0, sp2);
      Line args = sp2 == std::string::npos ? Line{"", rest.number, rest.column + static_cast<int>(rest.text.size())}
                                           : sub_line(rest, sp2);
      auto scalars = [&](const Line& list) {
        std::vector<Scalar> out;
        for (const auto& item : split_list(list)) out.push_back(parse_scalar(item.text, item.number, item.column - 1));
        if (out.size() != dim)
          throw ParseError("expected " + std::to_string(dim) + " entries, got " + std::to_string(out.size()), list.number,
                           list.column);
        return out;
      };
      if (kind == "diag") {
        const auto d = scalars(args);
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t c = 0; c < dim; ++c) a[r][c] = r == c ? d[r] : Scalar();
      } else if (kind == "row") {
        auto [row_name, values] = split_assign(args);
        const Letter r = find_letter(al, row_name);
        a[static_cast<std::size_t>(r)] = scalars(values);
      } else {
        throw ParseError("expected 'diag' or 'row'", rest.number, rest.column);
      }
    }
  }

  // [mult]
  std::optional<LocalTable> mult;
  std::optional<Letter> unit;
  int mult_header = 0;
  if (auto ms = sections.find("mult"); ms != sections.end()) {
    mult_header = ms->second.header_line;
    mult = LocalTable(dim, al);
    for (const auto& l : ms->second.lines) {
      if (l.text.find("->") == std::string::npos) {
        auto [key, value] = split_assign(l);
        if (key.text != "unit") throw ParseError("unknown key '" + key.text + "' in [mult]", key.number, key.column);
        unit = find_letter(al, value);
        continue;
      }
      const TableLine t = split_table_line(l);
      const Letter a = find_letter(al, t.left);
      const Letter b = find_letter(al, t.right);
      if (mult->has(a, b)) throw ParseError("duplicate entry for (" + t.left.text + ", " + t.right.text + ")", l.number, l.column);
      Element v = table_value(t.value, al);
      for (const auto& [w, c] : v)
        if (w.size() != 1) throw ParseError("products must be linear combinations of letters", t.value.number, t.value.column);
      mult->set(a, b, std::move(v));
    }
  }

  try {
    doc.spec = YDSpec(group, al, std::move(degrees), std::move(actions), std::move(mult), unit);
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), mult_header ? mult_header : bs->second.header_line, 1);
  }

  // [braiding]
  if (auto ss = sections.find("braiding"); ss != sections.end()) {
    LocalTable table(dim, al);
    for (const auto& l : ss->second.lines) {
      const TableLine t = split_table_line(l);
      const Letter a = find_letter(al, t.left);
      const Letter b = find_letter(al, t.right);
      if (table.has(a, b)) throw ParseError("duplicate entry for (" + t.left.text + ", " + t.right.text + ")", l.number, l.column);
      Element v = table_value(t.value, al);
      for (const auto& [w, c] : v)
        if (w.size() != 2) throw ParseError("braiding values must live on two-letter words", t.value.number, t.value.column);
      table.set(a, b, std::move(v));
    }
    try {
      BraidingTable check(table);
    } catch (const StructuralError& e) {
      throw ParseError(e.what(), ss->second.header_line, 1);
    }
    doc.braiding = std::move(table);
  }
  return doc;
}

namespace {

// " = a, b, c", or " =" for an empty list.
std::string assign_ints(const std::vector<int>& v) {
  std::string out = " =";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : " ") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::string emit_config(const YDSpec& spec, const std::optional<LocalTable>& braiding) {
  const auto& group = spec.group();
  const auto& al = spec.alphabet();
  const std::size_t dim = spec.dim();
  std::ostringstream out;
  out << "[group]\n";
  out << "free = " << group.rank() << "\n";
  out << "torsion" << assign_ints(group.torsion()) << "\n";
  out << "names =";
  for (std::size_t k = 0; k < group.names().size(); ++k) out << (k ? ", " : " ") << group.names()[k];
  out << "\n\n[basis]\n";
  for (std::size_t l = 0; l < dim; ++l) out << al->names[l] << assign_ints(spec.degrees()[l].exps) << "\n";

  if (group.generators() > 0) {
    out << "\n[action]\n";
    for (std::size_t k = 0; k < group.generators(); ++k) {
      const ActionMatrix& a = spec.actions()[k];
      bool diagonal = true;
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          if (r != c && !a[r][c].is_zero()) diagonal = false;
      auto entries = [](const std::vector<Scalar>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
        return s;
      };
      if (diagonal) {
        std::vector<Scalar> d;
        for (std::size_t r = 0; r < dim; ++r) d.push_back(a[r][r]);
        out << group.names()[k] << " diag " << entries(d) << "\n";
      } else {
        for (std::size_t r = 0; r < dim; ++r) out << group.names()[k] << " row " << al->names[r] << " = " << entries(a[r]) << "\n";
      }
    }
  }

  if (spec.mult()) {
    out << "\n[mult]\n";
    for (Letter a = 0; a < static_cast<Letter>(dim); ++a)
      for (Letter b = 0; b < static_cast<Letter>(dim); ++b) {
        const Element& v = spec.mult()->at(a, b);
        if (!v.is_zero()) out << al->name(a) << " " << al->name(b) << " -> " << render(v) << "\n";
      }
    if (spec.unit()) out << "unit = " << al->name(*spec.unit()) << "\n";
  }

  if (braiding) {
    out << "\n[braiding]\n";
    for (Letter a = 0; a < static_cast<Letter>(dim); ++a)
      for (Letter b = 0; b < static_cast<Letter>(dim); ++b)
        out << al->name(a) << " " << al->name(b) << " -> " << render(braiding->at(a, b)) << "\n";
  }
  return out.str();
}

std::string emit_config(const ConfigDocument& doc) { return emit_config(doc.spec, doc.braiding); }

CartanMatrix parse_cartan(std::string_view text) {
  CartanMatrix m;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    int lead = 0;
    std::string_view t = trim(raw, &lead);
    if (t.empty() || t[0] == '#') continue;
    std::vector<int> row;
    std::size_t i = 0;
    while (i < t.size()) {
      while (i < t.size() && (std::isspace(static_cast<unsigned char>(t[i])) || t[i] == ',')) ++i;
      if (i == t.size()) break;
      std::size_t j = i;
      while (j < t.size() && !std::isspace(static_cast<unsigned char>(t[j])) && t[j] != ',') ++j;
      row.push_back(parse_int(Line{std::string(t.substr(i, j - i)), number, lead + static_cast<int>(i) + 1}));
      i = j;
    }
    m.push_back(std::move(row));
  }
  if (m.empty()) throw ParseError("empty Cartan matrix", 1, 1);
  for (std::size_t r = 0; r < m.size(); ++r)
    if (m[r].size() != m.size()) throw ParseError("Cartan matrix must be square", static_cast<int>(r + 1), 1);
  return m;
}

}  // namespace cofree
