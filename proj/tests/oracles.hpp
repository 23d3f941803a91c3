// Independent reference computations used by the test suites. Nothing here
// calls into the recursive machinery it is compared against.
#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cofree/cotensor.hpp"
#include "cofree/grouphopf.hpp"
#include "cofree/lincomb.hpp"

namespace oracle {

using cofree::AlphabetRef;
using cofree::Element;
using cofree::Letter;
using cofree::Scalar;
using cofree::Word;

/// Word from letter names joined by '@' ("" is the empty word).
inline Word word(const AlphabetRef& al, const std::string& text) {
  Word out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('@', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(*al->find(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

inline Element el(const AlphabetRef& al, const std::string& text, const Scalar& c = 1) { return Element(word(al, text), c, al); }

/// Letter at position p moves to position images[p-1].
inline Word permute(const std::vector<int>& images, const Word& w) {
  Word out(w.size());
  for (std::size_t p = 0; p < w.size(); ++p) out[static_cast<std::size_t>(images[p] - 1)] = w[p];
  return out;
}

/// Braiding of diagonal type: sigma(a b) = chi[a][b] b a.
using Characters = std::vector<std::vector<Scalar>>;

/// For a diagonal braiding the lift of w acts on a word by the position
/// permutation, weighted by chi[x][y] for every pair x (left) and y (right)
/// whose relative order w reverses.
inline Element diagonal_lift(const Characters& chi, const std::vector<int>& images, const Word& w, const AlphabetRef& al) {
  Scalar c = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (images[i] > images[j]) c = c * chi[static_cast<std::size_t>(w[i])][static_cast<std::size_t>(w[j])];
  return Element(permute(images, w), c, al);
}

/// Shuffle product by enumerating every interleaving (choice of positions for x).
inline Element shuffle(const Word& x, const Word& y, const AlphabetRef& al) {
  Element out(al);
  const std::size_t n = x.size() + y.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != x.size()) continue;
    Word w;
    std::size_t ix = 0, iy = 0;
    for (std::size_t p = 0; p < n; ++p) w.push_back((mask >> p) & 1 ? x[ix++] : y[iy++]);
    out.add(w, 1);
  }
  return out;
}

/// Quasi-shuffle for a diagonal braiding chi and letter product `mult` (a, b)
/// -> element over letters, by the first-letter recursion
///   au * bv = a (u * bv) + c(au, b) b (au * v) + c(u, b) m(a, b) (u * v)
/// where c(u, b) = prod over letters x of u of chi[x][b].
class DiagonalQuasiShuffle {
 public:
  DiagonalQuasiShuffle(Characters chi, std::function<Element(Letter, Letter)> mult, AlphabetRef al)
      : chi_(std::move(chi)), mult_(std::move(mult)), al_(std::move(al)) {}

  Element operator()(const Word& x, const Word& y) {
    auto key = std::make_pair(x, y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Element out(al_);
    if (x.empty()) out.add(y, 1);
    else if (y.empty()) out.add(x, 1);
    else {
      const Letter a = x[0];
      const Letter b = y[0];
      const Word u(x.begin() + 1, x.end());
      const Word v(y.begin() + 1, y.end());
      for (const auto& [w, c] : (*this)(u, y)) out.add(prepend(a, w), c);
      for (const auto& [w, c] : (*this)(x, v)) out.add(prepend(b, w), c * weight(x, b));
      const Element ab = mult_(a, b);
      if (!ab.is_zero()) {
        const Element rest = (*this)(u, v);
        for (const auto& [l, cl] : ab)
          for (const auto& [w, c] : rest) out.add(prepend(l[0], w), c * cl * weight(u, b));
      }
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  static Word prepend(Letter l, const Word& w) {
    Word out{l};
    out.insert(out.end(), w.begin(), w.end());
    return out;
  }
  Scalar weight(const Word& u, Letter b) const {
    Scalar c = 1;
    for (Letter x : u) c = c * chi_[static_cast<std::size_t>(x)][static_cast<std::size_t>(b)];
    return c;
  }

  Characters chi_;
  std::function<Element(Letter, Letter)> mult_;
  AlphabetRef al_;
  std::map<std::pair<Word, Word>, Element> memo_;
};

/// Characters of a YD spec whose actions are diagonal, computed from the
/// degree and action tables alone: chi[a][b] is the eigenvalue of deg(a) on b.
inline Characters diagonal_characters(const cofree::YDSpec& spec) {
  const std::size_t n = spec.dim();
  Characters chi(n, std::vector<Scalar>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Scalar c = 1;
      const auto& e = spec.degrees()[a].exps;
      for (std::size_t k = 0; k < e.size(); ++k) {
        const Scalar& d = spec.actions()[k][b][b];
        const int power = e[k];
        for (int i = 0; i < (power < 0 ? -power : power); ++i) c = c * (power < 0 ? d.inverse() : d);
      }
      chi[a][b] = c;
    }
  return chi;
}

/// Random diagonal YD module over Z^r: degrees and action exponents in [-2, 2],
/// letters named a1.. . Diagonal actions are degree-preserving and commute by
/// construction.
inline cofree::YDSpec random_diagonal_yd(std::mt19937& rng, std::size_t dim, int rank) {
  std::uniform_int_distribution<int> ex(-2, 2);
  cofree::AbelianGroup group(rank, {});
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("a" + std::to_string(i + 1));
  auto al = cofree::make_alphabet(names);
  std::vector<cofree::GroupElement> degrees;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<int> e(static_cast<std::size_t>(rank));
    for (auto& x : e) x = ex(rng);
    degrees.push_back(group.make(e));
  }
  std::vector<cofree::ActionMatrix> actions;
  for (int k = 0; k < rank; ++k) {
    cofree::ActionMatrix m = cofree::identity_matrix(dim);
    for (std::size_t b = 0; b < dim; ++b) m[b][b] = Scalar::q_power(ex(rng));
    actions.push_back(std::move(m));
  }
  return cofree::YDSpec(group, al, std::move(degrees), std::move(actions));
}

}  // namespace oracle
