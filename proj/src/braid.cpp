#include "cofree/braid.hpp"

#include <algorithm>
#include <numeric>

namespace cofree {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[static_cast<std::size_t>(v - 1)])
      throw StructuralError("images do not form a permutation");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::simple(std::size_t n, int i) {
  if (i < 1 || static_cast<std::size_t>(i) >= n) throw StructuralError("simple transposition index out of range");
  auto p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<int>(k + 1)) return false;
  return true;
}

std::size_t Permutation::inversions() const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = a + 1; b < images_.size(); ++b)
      if (images_[a] > images_[b]) ++count;
  return count;
}

Permutation Permutation::after(const Permutation& first) const {
  if (first.size() != size()) throw StructuralError("composing permutations of different sizes");
  std::vector<int> im(size());
  for (std::size_t p = 0; p < size(); ++p) im[p] = images_[static_cast<std::size_t>(first.images_[p] - 1)];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(size());
  for (std::size_t p = 0; p < size(); ++p) im[static_cast<std::size_t>(images_[p] - 1)] = static_cast<int>(p + 1);
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

namespace {

// w o s_i in one-line notation swaps the images at positions i and i+1.
std::vector<int> times_simple(std::vector<int> images, int i) {
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
  return images;
}

void collect_reduced_words(const std::vector<int>& images, std::vector<int>& suffix, std::vector<std::vector<int>>& out) {
  bool any_descent = false;
  for (std::size_t i = 1; i < images.size(); ++i) {
    if (images[i - 1] > images[i]) {
      any_descent = true;
      suffix.push_back(static_cast<int>(i));
      collect_reduced_words(times_simple(images, static_cast<int>(i)), suffix, out);
      suffix.pop_back();
    }
  }
  if (!any_descent) out.emplace_back(suffix.rbegin(), suffix.rend());
}

}  // namespace

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> images = w.images();
  std::vector<int> peeled;
  for (;;) {
    std::size_t i = 1;
    while (i < images.size() && images[i - 1] < images[i]) ++i;
    if (i >= images.size()) break;
    peeled.push_back(static_cast<int>(i));
    images = times_simple(std::move(images), static_cast<int>(i));
  }
  return {peeled.rbegin(), peeled.rend()};
}

std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  collect_reduced_words(w.images(), suffix, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Permutation chi(int i, int j) {
  if (i < 0 || j < 0 || i + j < 1) throw StructuralError("chi requires i, j >= 0 and i + j >= 1");
  std::vector<int> im;
  im.reserve(static_cast<std::size_t>(i + j));
  for (int k = 1; k <= i; ++k) im.push_back(j + k);
  for (int k = 1; k <= j; ++k) im.push_back(k);
  return Permutation(std::move(im));
}

Word permute_positions(const Permutation& w, const Word& word) {
  if (w.size() != word.size()) throw StructuralError("permutation size does not match word length");
  Word out(word.size());
  for (std::size_t p = 0; p < word.size(); ++p) out[static_cast<std::size_t>(w.images()[p] - 1)] = word[p];
  return out;
}

BraidingTable::BraidingTable(LocalTable table, std::size_t elimination_cap) : table_(std::move(table)) {
  const auto n = static_cast<Letter>(table_.dim());
  for (Letter a = 0; a < n; ++a)
    for (Letter b = 0; b < n; ++b) {
      for (const auto& [w, c] : table_.at(a, b))
        if (w.size() != 2) throw StructuralError("braiding value on a letter pair must lie in V(x)V");
    }
  if (!is_invertible(table_, elimination_cap)) throw StructuralError("braiding is not invertible");
}

BraidingTable BraidingTable::flip(AlphabetRef alphabet) {
  const auto n = alphabet->size();
  LocalTable t(n, alphabet);
  for (Letter a = 0; a < static_cast<Letter>(n); ++a)
    for (Letter b = 0; b < static_cast<Letter>(n); ++b) t.set(a, b, Element(Word{b, a}, 1, alphabet));
  return BraidingTable(std::move(t));
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Rank of a dense rational matrix by Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_invertible(const LocalTable& table, std::size_t cap) {
  // Columns are input pairs, rows are output pairs. The matrix is block
  // diagonal over the connected components of its bipartite support graph.
  const std::size_t dim = table.dim();
  const std::size_t n = dim * dim;
  auto pair_index = [dim](const Word& w) { return static_cast<std::size_t>(w[0]) * dim + static_cast<std::size_t>(w[1]); };
  UnionFind uf(2 * n);
  for (std::size_t col = 0; col < n; ++col) {
    const Element& v = table.at(static_cast<Letter>(col / dim), static_cast<Letter>(col % dim));
    for (const auto& [w, c] : v) uf.unite(col, n + pair_index(w));
  }
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
  for (std::size_t col = 0; col < n; ++col) blocks[uf.find(col)].first.push_back(col);
  for (std::size_t row = 0; row < n; ++row) blocks[uf.find(n + row)].second.push_back(row);

  for (const auto& [root, block] : blocks) {
    const auto& [cols, rows] = block;
    if (cols.size() != rows.size()) return false;
    if (cols.size() > cap)
      throw StructuralError("braiding block of size " + std::to_string(cols.size()) + " exceeds elimination cap " +
                            std::to_string(cap));
    std::map<std::size_t, std::size_t> row_pos;
    for (std::size_t k = 0; k < rows.size(); ++k) row_pos[rows[k]] = k;
    // det(q) * q^s is a polynomial of degree <= sum over columns of the
    // exponent spread, so it vanishes identically iff it vanishes at that many
    // plus one distinct points.
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> column_entries(cols.size());
    long degree_bound = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const Element& v = table.at(static_cast<Letter>(cols[k] / dim), static_cast<Letter>(cols[k] % dim));
      int lo = 0, hi = 0;
      bool first = true;
      for (const auto& [w, c] : v) {
        column_entries[k].emplace_back(row_pos.at(pair_index(w)), c);
        lo = first ? c.min_exponent() : std::min(lo, c.min_exponent());
        hi = first ? c.max_exponent() : std::max(hi, c.max_exponent());
        first = false;
      }
      degree_bound += hi - lo;
    }
    bool nonsingular = false;
    for (long point = 0; point <= degree_bound && !nonsingular; ++point) {
      const Rational q0(point + 2);
      std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
      for (std::size_t k = 0; k < cols.size(); ++k)
        for (const auto& [r, c] : column_entries[k]) m[r][k] = c.evaluate(q0);
      nonsingular = rational_rank(std::move(m)) == cols.size();
    }
    if (!nonsingular) return false;
  }
  return true;
}

CheckResult check_yang_baxter(const BraidingTable& sigma) {
  const auto n = static_cast<Letter>(sigma.dim());
  const auto& al = sigma.alphabet();
  for (Letter a = 0; a < n; ++a)
    for (Letter b = 0; b < n; ++b)
      for (Letter c = 0; c < n; ++c) {
        const Element x(Word{a, b, c}, 1, al);
        const Element lhs = apply_braid_word(sigma, {1, 2, 1}, x);
        const Element rhs = apply_braid_word(sigma, {2, 1, 2}, x);
        if (!(lhs == rhs)) return CheckResult::fail(render(x), render(lhs), render(rhs));
      }
  return CheckResult::pass();
}

Element apply_braid_word(const BraidingTable& sigma, const std::vector<int>& word, const Element& x, std::size_t offset) {
  Element cur = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = apply_local(sigma.table(), static_cast<std::size_t>(*it) + offset, cur);
  return cur;
}

Element lift_Tw(const BraidingTable& sigma, const Permutation& w, const Element& x) {
  for (const auto& [word, c] : x)
    if (word.size() != w.size()) throw StructuralError("lift_Tw: word length differs from permutation size");
  return apply_braid_word(sigma, reduced_word(w), x);
}

Element beta(const BraidingTable& sigma, int i, int j, const Element& x) {
  for (const auto& [word, c] : x)
    if (word.size() != static_cast<std::size_t>(i + j)) throw StructuralError("beta: word length differs from i + j");
  if (i == 0 || j == 0) return x;
  return lift_Tw(sigma, chi(i, j), x);
}

PairElement beta(const BraidingTable& sigma, const PairElement& x) {
  PairElement out(x.alphabet());
  for (const auto& [p, c] : x) {
    const auto i = static_cast<int>(p.first.size());
    const auto j = static_cast<int>(p.second.size());
    if (i == 0 || j == 0) {
      out.add(WordPair{p.second, p.first}, c);
      continue;
    }
    const Element moved = beta(sigma, i, j, Element(concat(p.first, p.second), c, x.alphabet()));
    for (const auto& [w, cw] : moved)
      out.add(WordPair{subword(w, 0, static_cast<std::size_t>(j)), subword(w, static_cast<std::size_t>(j), w.size())}, cw);
  }
  return out;
}

}  // namespace cofree
