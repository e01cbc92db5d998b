#ifndef SELFSIM_WREATH_HPP
#define SELFSIM_WREATH_HPP

// Recursive action of wreath-recursion words on the tree.
//
// Convention: a generator g with root permutation p and sections s_1..s_d
// maps the vertex i·t to p(i)·s_i(t). Words act on the left, rightmost
// symbol first, so sections obey (gh)|v = g|h(v) · h|v.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "permutation.hpp"
#include "presentation.hpp"
#include "tree.hpp"

namespace selfsim {

namespace detail {

void act_symbol(const WreathPresentation &pres, Symbol s, std::span<Letter> letters);

/// Applies w (rightmost first), or w^-1 when `inverse` is set, to letters in place.
inline void act_word(const WreathPresentation &pres, const Word &w, bool inverse, std::span<Letter> letters) {
  const auto &syms = w.symbols();
  if (!inverse) {
    for (auto it = syms.rbegin(); it != syms.rend(); ++it)
      act_symbol(pres, *it, letters);
  } else {
    for (const auto &s : syms)
      act_symbol(pres, s.inverted(), letters);
  }
}

inline void act_symbol(const WreathPresentation &pres, Symbol s, std::span<Letter> letters) {
  if (letters.empty())
    return;
  const auto &rule = pres.rule(s.generator);
  const std::size_t i = letters[0] - 1u;
  std::size_t section_at;
  std::size_t image;
  if (!s.inverse) {
    section_at = i;
    image = rule.root_perm[i];
  } else {
    section_at = std::find(rule.root_perm.begin(), rule.root_perm.end(), i) - rule.root_perm.begin();
    image = section_at;
  }
  letters[0] = static_cast<Letter>(image + 1);
  act_word(pres, rule.sections[section_at], s.inverse, letters.subspan(1));
}

} // namespace detail

/// w(v).
inline Vertex act(const WreathPresentation &pres, const Word &w, const Vertex &v) {
  std::vector<Letter> letters = v.letters();
  detail::act_word(pres, w, false, letters);
  return Vertex(v.degree(), std::move(letters));
}

/// Section of w at a single letter x (1-based), unreduced.
inline Word section_at_letter(const WreathPresentation &pres, const Word &w, Letter x) {
  std::vector<Word> pieces; // rightmost symbol's contribution first
  pieces.reserve(w.length());
  std::size_t point = x - 1u;
  const auto &syms = w.symbols();
  for (auto it = syms.rbegin(); it != syms.rend(); ++it) {
    const auto &rule = pres.rule(it->generator);
    if (!it->inverse) {
      pieces.push_back(rule.sections[point]);
      point = rule.root_perm[point];
    } else {
      const std::size_t pre = std::find(rule.root_perm.begin(), rule.root_perm.end(), point) - rule.root_perm.begin();
      pieces.push_back(rule.sections[pre].inverse());
      point = pre;
    }
  }
  std::vector<Symbol> out;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
    out.insert(out.end(), it->symbols().begin(), it->symbols().end());
  return Word(std::move(out));
}

/// w|v, reduced after every letter.
inline Word section(const WreathPresentation &pres, const Word &w, const Vertex &v) {
  Word current = pres.reduce(w);
  for (Letter x : v.letters())
    current = pres.reduce(section_at_letter(pres, current, x));
  return current;
}

/// Root permutation of a word, on {0,...,d-1}.
inline Perm root_permutation(const WreathPresentation &pres, const Word &w) {
  Perm p = identity_perm(static_cast<std::size_t>(pres.degree()));
  const auto &syms = w.symbols();
  for (auto it = syms.rbegin(); it != syms.rend(); ++it) {
    const auto &rp = pres.rule(it->generator).root_perm;
    p = compose(it->inverse ? inverse(rp) : rp, p);
  }
  return p;
}

/// Level permutations of every generator (and inverse) on levels 0..max_level,
/// built bottom-up from the sections. Immutable after construction.
class LevelActions {
public:
  LevelActions(const WreathPresentation &pres, int max_level, SizeCap cap = {}) : pres_(&pres) {
    level_size(pres.degree(), max_level, cap);
    const std::size_t gens = pres.generator_count();
    levels_.resize(static_cast<std::size_t>(max_level) + 1);
    levels_[0].forward.assign(gens, Perm{0});
    levels_[0].backward.assign(gens, Perm{0});
    const std::size_t d = static_cast<std::size_t>(pres.degree());
    std::size_t block = 1;
    for (int k = 1; k <= max_level; ++k) {
      auto &lvl = levels_[static_cast<std::size_t>(k)];
      lvl.forward.resize(gens);
      lvl.backward.resize(gens);
      for (std::uint32_t g = 0; g < gens; ++g) {
        const auto &rule = pres.rule(g);
        Perm p(block * d);
        for (std::size_t i = 0; i < d; ++i) {
          const Perm sec = word_perm(k - 1, rule.sections[i]);
          const std::size_t base = rule.root_perm[i] * block;
          for (std::size_t t = 0; t < block; ++t)
            p[i * block + t] = static_cast<std::uint32_t>(base + sec[t]);
        }
        lvl.backward[g] = inverse(p);
        lvl.forward[g] = std::move(p);
      }
      block *= d;
    }
  }

  const WreathPresentation &presentation() const noexcept { return *pres_; }
  int max_level() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  std::size_t points(int level) const { return levels_.at(static_cast<std::size_t>(level)).forward.front().size(); }

  const Perm &symbol_perm(int level, Symbol s) const {
    const auto &lvl = levels_.at(static_cast<std::size_t>(level));
    return s.inverse ? lvl.backward[s.generator] : lvl.forward[s.generator];
  }

  /// Image of one point under w.
  std::uint32_t apply(int level, const Word &w, std::uint32_t x) const {
    const auto &syms = w.symbols();
    for (auto it = syms.rbegin(); it != syms.rend(); ++it)
      x = symbol_perm(level, *it)[x];
    return x;
  }

  Perm word_perm(int level, const Word &w) const {
    const auto &syms = w.symbols();
    Perm p = identity_perm(points(level));
    for (auto it = syms.rbegin(); it != syms.rend(); ++it) {
      const Perm &s = symbol_perm(level, *it);
      for (auto &y : p)
        y = s[y];
    }
    return p;
  }

private:
  struct Level {
    std::vector<Perm> forward;
    std::vector<Perm> backward;
  };
  const WreathPresentation *pres_;
  std::vector<Level> levels_;
};

/// pi[index(v)] = index(w(v)) on level n.
inline Perm level_permutation(const WreathPresentation &pres, const Word &w, int n, SizeCap cap = {}) {
  return LevelActions(pres, n, cap).word_perm(n, w);
}

inline bool is_trivial_at_level(const WreathPresentation &pres, const Word &w, int n, SizeCap cap = {}) {
  return is_identity(level_permutation(pres, w, n, cap));
}

/// Order of the image of w in the level-n quotient.
inline BigInt order_at_level(const WreathPresentation &pres, const Word &w, int n, SizeCap cap = {}) {
  return perm_order(level_permutation(pres, w, n, cap));
}

struct PortraitNode {
  Vertex vertex;
  Perm root_perm;     // on {0,...,d-1}
  Word section;       // reduced section of the word at this vertex
  bool is_leaf = false;
  std::vector<PortraitNode> children;
};

/// Root permutations of the sections of w down to the given depth.
inline PortraitNode portrait(const WreathPresentation &pres, const Word &w, int depth) {
  if (depth < 0)
    throw UsageError("portrait depth must be nonnegative");
  auto build = [&](auto &&self, const Vertex &v, const Word &sec, int remaining) -> PortraitNode {
    PortraitNode node{v, root_permutation(pres, sec), sec, remaining == 0, {}};
    if (remaining > 0)
      for (int x = 1; x <= pres.degree(); ++x)
        node.children.push_back(self(self, v.child(static_cast<Letter>(x)),
                                     pres.reduce(section_at_letter(pres, sec, static_cast<Letter>(x))),
                                     remaining - 1));
    return node;
  };
  return build(build, Vertex(pres.degree()), pres.reduce(w), depth);
}

} // namespace selfsim

#endif // SELFSIM_WREATH_HPP
