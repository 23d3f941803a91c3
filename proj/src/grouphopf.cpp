#include "cofree/grouphopf.hpp"

#include <algorithm>

namespace cofree {

namespace {

int reduce_mod(int e, int m) {
  const int r = e % m;
  return r < 0 ? r + m : r;
}

}  // namespace

AbelianGroup::AbelianGroup(int rank, std::vector<int> torsion, std::vector<std::string> names)
    : rank_(rank), torsion_(std::move(torsion)), names_(std::move(names)) {
  if (rank_ < 0) throw StructuralError("group rank must be non-negative");
  for (int m : torsion_)
    if (m < 2) throw StructuralError("torsion orders must be at least 2");
  if (names_.empty())
    for (std::size_t k = 0; k < generators(); ++k) names_.push_back("K" + std::to_string(k + 1));
  if (names_.size() != generators()) throw StructuralError("one name per group generator expected");
  for (std::size_t a = 0; a < names_.size(); ++a)
    for (std::size_t b = a + 1; b < names_.size(); ++b)
      if (names_[a] == names_[b]) throw StructuralError("duplicate group generator name '" + names_[a] + "'");
}

std::optional<std::size_t> AbelianGroup::find_generator(const std::string& name) const {
  for (std::size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return k;
  return std::nullopt;
}

int AbelianGroup::order(std::size_t k) const {
  if (k < static_cast<std::size_t>(rank_)) return 0;
  return torsion_.at(k - static_cast<std::size_t>(rank_));
}

GroupElement AbelianGroup::identity() const { return GroupElement{std::vector<int>(generators(), 0)}; }

GroupElement AbelianGroup::generator(std::size_t k, int power) const {
  if (k >= generators()) throw StructuralError("group generator index out of range");
  GroupElement g = identity();
  g.exps[k] = power;
  return make(std::move(g.exps));
}

GroupElement AbelianGroup::make(std::vector<int> exps) const {
  if (exps.size() != generators())
    throw StructuralError("group element needs " + std::to_string(generators()) + " exponents, got " +
                          std::to_string(exps.size()));
  for (std::size_t k = static_cast<std::size_t>(rank_); k < exps.size(); ++k) exps[k] = reduce_mod(exps[k], order(k));
  return GroupElement{std::move(exps)};
}

GroupElement AbelianGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  if (a.exps.size() != generators() || b.exps.size() != generators())
    throw StructuralError("group element does not belong to this group");
  std::vector<int> e(generators());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = a.exps[k] + b.exps[k];
  return make(std::move(e));
}

GroupElement AbelianGroup::inverse(const GroupElement& a) const {
  std::vector<int> e = a.exps;
  for (int& x : e) x = -x;
  return make(std::move(e));
}

bool AbelianGroup::is_identity(const GroupElement& a) const {
  return std::all_of(a.exps.begin(), a.exps.end(), [](int e) { return e == 0; });
}

std::string render_group(const GroupElement& g) {
  std::string out = "K{";
  for (std::size_t k = 0; k < g.exps.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(g.exps[k]);
  }
  return out + "}";
}

std::string render(const GroupAlgebraElement& h) {
  return render_terms(h, [](const GroupElement& g) { return render_group(g); });
}

std::string render(const GroupPairElement& h) {
  return render_terms(h, [](const GroupPair& p) { return render_group(p.first) + " | " + render_group(p.second); });
}

std::string render(const SmashElement& x) {
  const Alphabet* al = x.alphabet().get();
  return render_terms(x, [al](const SmashKey& k) { return render_word(k.first, al) + "#" + render_group(k.second); });
}

GroupPairElement hopf_coproduct(const GroupAlgebraElement& h) {
  GroupPairElement out;
  for (const auto& [g, c] : h) out.add(GroupPair{g, g}, c);
  return out;
}

Scalar hopf_counit(const GroupAlgebraElement& h) {
  Scalar s;
  for (const auto& [g, c] : h) s += c;
  return s;
}

GroupAlgebraElement hopf_antipode(const AbelianGroup& group, const GroupAlgebraElement& h) {
  GroupAlgebraElement out;
  for (const auto& [g, c] : h) out.add(group.inverse(g), c);
  return out;
}

GroupAlgebraElement hopf_multiply(const AbelianGroup& group, const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement out;
  for (const auto& [g, c] : a)
    for (const auto& [h, d] : b) out.add(group.multiply(g, h), c * d);
  return out;
}

ActionMatrix identity_matrix(std::size_t dim) {
  ActionMatrix m(dim, std::vector<Scalar>(dim));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

ActionMatrix matrix_product(const ActionMatrix& a, const ActionMatrix& b) {
  const std::size_t n = a.size();
  ActionMatrix out(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

ActionMatrix matrix_inverse(const ActionMatrix& a) {
  const std::size_t n = a.size();
  ActionMatrix m = a;
  ActionMatrix inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (!m[r][col].is_zero() && m[r][col].is_monomial()) {
        pivot = r;
        break;
      }
    if (pivot == n) throw StructuralError("action matrix has no monomial pivot; its inverse is not a Laurent matrix here");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Scalar p = m[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= p;
      inv[col][j] *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Scalar f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

YDSpec::YDSpec(AbelianGroup group, AlphabetRef alphabet, std::vector<GroupElement> degrees, std::vector<ActionMatrix> actions,
               std::optional<LocalTable> mult, std::optional<Letter> unit)
    : group_(std::move(group)),
      alphabet_(std::move(alphabet)),
      degrees_(std::move(degrees)),
      actions_(std::move(actions)),
      mult_(std::move(mult)),
      unit_(unit) {
  const std::size_t n = degrees_.size();
  if (!alphabet_ || alphabet_->size() != n) throw StructuralError("one degree per basis letter expected");
  for (auto& d : degrees_) d = group_.make(d.exps);
  if (actions_.size() != group_.generators()) throw StructuralError("one action matrix per group generator expected");
  for (const auto& a : actions_) {
    if (a.size() != n) throw StructuralError("action matrix has the wrong number of rows");
    for (const auto& row : a)
      if (row.size() != n) throw StructuralError("action matrix has the wrong number of columns");
  }
  for (std::size_t k = 0; k < actions_.size(); ++k)
    inverse_actions_.push_back(group_.order(k) == 0 ? matrix_inverse(actions_[k]) : ActionMatrix{});
  if (mult_) {
    if (mult_->dim() != n) throw StructuralError("multiplication table has the wrong dimension");
    LocalTable filled(n, alphabet_);
    for (Letter a = 0; a < static_cast<Letter>(n); ++a)
      for (Letter b = 0; b < static_cast<Letter>(n); ++b) {
        Element v = mult_->has(a, b) ? mult_->at(a, b) : Element(alphabet_);
        v.set_alphabet(alphabet_);
        for (const auto& [w, c] : v)
          if (w.size() != 1) throw StructuralError("multiplication values must be linear combinations of letters");
        filled.set(a, b, std::move(v));
      }
    mult_ = std::move(filled);
  }
  if (unit_ && (*unit_ < 0 || static_cast<std::size_t>(*unit_) >= n)) throw StructuralError("unit letter out of range");
}

GroupElement YDSpec::degree(const Word& w) const {
  GroupElement g = group_.identity();
  for (Letter l : w) g = group_.multiply(g, degree(l));
  return g;
}

Element YDSpec::act(const GroupElement& g, Letter l) const {
  if (g.exps.size() != group_.generators()) throw StructuralError("group element does not belong to this group");
  std::vector<Scalar> v(dim());
  v.at(static_cast<std::size_t>(l)) = 1;
  for (std::size_t k = 0; k < g.exps.size(); ++k) {
    const int e = g.exps[k];
    const ActionMatrix& m = e >= 0 ? actions_[k] : inverse_actions_[k];
    for (int step = 0; step < (e >= 0 ? e : -e); ++step) {
      std::vector<Scalar> next(dim());
      for (std::size_t c = 0; c < dim(); ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < dim(); ++r)
          if (!m[r][c].is_zero()) next[r] += m[r][c] * v[c];
      }
      v = std::move(next);
    }
  }
  Element out(alphabet_);
  for (std::size_t r = 0; r < dim(); ++r) out.add(Word{static_cast<Letter>(r)}, v[r]);
  return out;
}

Element YDSpec::act(const GroupElement& g, const Element& x) const {
  Element out(alphabet_);
  std::map<Letter, Element> images;
  for (const auto& [w, c] : x) {
    Element term(Word{}, c, alphabet_);
    for (Letter l : w) {
      auto it = images.find(l);
      if (it == images.end()) it = images.emplace(l, act(g, l)).first;
      term = tensor(term, it->second);
    }
    out += term;
  }
  return out;
}

bool operator==(const YDSpec& a, const YDSpec& b) {
  auto same_alphabet = [](const AlphabetRef& x, const AlphabetRef& y) { return x == y || (x && y && *x == *y); };
  return a.group_ == b.group_ && same_alphabet(a.alphabet_, b.alphabet_) && a.degrees_ == b.degrees_ &&
         a.actions_ == b.actions_ && a.mult_ == b.mult_ && a.unit_ == b.unit_;
}

namespace {

SmashElement coaction_side(const YDSpec& spec, const GroupElement& h, const Element& x) {
  // sum over terms c w of x: c deg(w) h (x) w, stored as (w, deg(w) h).
  SmashElement out(spec.alphabet());
  for (const auto& [w, c] : x) out.add(SmashKey{w, spec.group().multiply(spec.degree(w), h)}, c);
  return out;
}

}  // namespace

CheckResult check_yd(const YDSpec& spec) {
  const auto& group = spec.group();
  const auto& al = spec.alphabet();
  const auto n = static_cast<Letter>(spec.dim());
  const auto& acts = spec.actions();

  for (std::size_t a = 0; a < acts.size(); ++a)
    for (std::size_t b = a + 1; b < acts.size(); ++b)
      if (!(matrix_product(acts[a], acts[b]) == matrix_product(acts[b], acts[a])))
        return CheckResult::fail("action matrices of " + group.names()[a] + " and " + group.names()[b] + " do not commute");
  for (std::size_t k = 0; k < acts.size(); ++k) {
    const int m = group.order(k);
    if (m == 0) continue;
    ActionMatrix p = identity_matrix(spec.dim());
    for (int i = 0; i < m; ++i) p = matrix_product(p, acts[k]);
    if (!(p == identity_matrix(spec.dim())))
      return CheckResult::fail("action of " + group.names()[k] + " has order not dividing " + std::to_string(m));
  }

  for (std::size_t k = 0; k < group.generators(); ++k) {
    const GroupElement h = group.generator(k);
    for (Letter v = 0; v < n; ++v) {
      // h_(1) v_(-1) (x) h_(2).v_(0) = h deg(v) (x) h.v
      SmashElement lhs(al);
      for (const auto& [w, c] : spec.act(h, v)) lhs.add(SmashKey{w, group.multiply(h, spec.degree(v))}, c);
      // (h_(1).v)_(-1) h_(2) (x) (h_(1).v)_(0)
      const SmashElement rhs = coaction_side(spec, h, spec.act(h, v));
      if (!(lhs == rhs)) return CheckResult::fail(group.names()[k] + " on " + al->name(v), render(lhs), render(rhs));
    }
  }
  return CheckResult::pass();
}

BraidingTable induced_braiding(const YDSpec& spec) {
  const auto n = static_cast<Letter>(spec.dim());
  LocalTable table(spec.dim(), spec.alphabet());
  for (Letter v = 0; v < n; ++v)
    for (Letter w = 0; w < n; ++w) {
      Element value(spec.alphabet());
      for (const auto& [u, c] : spec.act(spec.degree(v), w)) value.add(Word{u[0], v}, c);
      table.set(v, w, std::move(value));
    }
  return BraidingTable(std::move(table));
}

BraidedAlgebraSpec braided_spec(const YDSpec& spec) {
  LocalTable mult = spec.mult() ? *spec.mult() : LocalTable(spec.dim(), spec.alphabet());
  return BraidedAlgebraSpec(induced_braiding(spec), std::move(mult), spec.unit());
}

CheckResult check_yd_algebra(const YDSpec& spec) {
  if (!spec.mult()) throw StructuralError("spec declares no multiplication");
  const auto& group = spec.group();
  const auto& al = spec.alphabet();
  const auto n = static_cast<Letter>(spec.dim());
  const LocalTable& m = *spec.mult();

  for (Letter a = 0; a < n; ++a)
    for (Letter b = 0; b < n; ++b) {
      const GroupElement expected = group.multiply(spec.degree(a), spec.degree(b));
      for (const auto& [w, c] : m.at(a, b))
        if (!(spec.degree(w[0]) == expected))
          return CheckResult::fail("m(" + al->name(a) + ", " + al->name(b) + ") is not degree-preserving",
                                   render_group(spec.degree(w[0])), render_group(expected));
    }
  for (std::size_t k = 0; k < group.generators(); ++k) {
    const GroupElement g = group.generator(k);
    for (Letter a = 0; a < n; ++a)
      for (Letter b = 0; b < n; ++b) {
        const Element lhs = spec.act(g, m.at(a, b));
        const Element rhs = apply_local(m, 1, tensor(spec.act(g, a), spec.act(g, b)));
        if (!(lhs == rhs))
          return CheckResult::fail(group.names()[k] + " . m(" + al->name(a) + ", " + al->name(b) + ")", render(lhs),
                                   render(rhs));
      }
  }
  if (spec.unit()) {
    const Letter u = *spec.unit();
    if (!group.is_identity(spec.degree(u)))
      return CheckResult::fail("unit " + al->name(u) + " has non-neutral degree", render_group(spec.degree(u)),
                               render_group(group.identity()));
    for (std::size_t k = 0; k < group.generators(); ++k) {
      const Element image = spec.act(group.generator(k), u);
      if (!(image == letter_element(u, al)))
        return CheckResult::fail(group.names()[k] + " moves the unit", render(image), al->name(u));
    }
  }
  return check_braided_algebra(braided_spec(spec));
}

YDSpec adjoin_unit(const YDSpec& spec, const std::string& unit_name) {
  if (spec.unit()) throw StructuralError("spec already has a unit");
  if (spec.alphabet()->find(unit_name)) throw StructuralError("unit name '" + unit_name + "' already used");
  const std::size_t n = spec.dim();
  std::vector<std::string> names = spec.alphabet()->names;
  names.push_back(unit_name);
  auto al = make_alphabet(std::move(names));
  const auto u = static_cast<Letter>(n);

  std::vector<GroupElement> degrees = spec.degrees();
  degrees.push_back(spec.group().identity());
  std::vector<ActionMatrix> actions;
  for (const auto& a : spec.actions()) {
    ActionMatrix b(n + 1, std::vector<Scalar>(n + 1));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) b[r][c] = a[r][c];
    b[n][n] = 1;
    actions.push_back(std::move(b));
  }
  LocalTable mult(n + 1, al);
  for (Letter a = 0; a <= u; ++a)
    for (Letter b = 0; b <= u; ++b) {
      if (a < u && b < u) {
        Element v(al);
        if (spec.mult())
          for (const auto& [w, c] : spec.mult()->at(a, b)) v.add(w, c);
        mult.set(a, b, std::move(v));
      } else {
        mult.set(a, b, letter_element(a == u ? b : a, al));
      }
    }
  return YDSpec(spec.group(), al, std::move(degrees), std::move(actions), std::move(mult), u);
}

}  // namespace cofree
