#ifndef SELFSIM_LEVEL_QUOTIENT_HPP
#define SELFSIM_LEVEL_QUOTIENT_HPP

// The action of G on level n, the stabilizer P_n of the level-n prefix of a
// ray, and the orbits (suborbits) of P_n on the level.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "tree.hpp"
#include "wreath.hpp"

namespace selfsim {

/// BFS spanning tree of the orbit of the base vertex: reps[x](base) = x.
struct Transversal {
  int level = 0;
  Vertex base;
  std::uint32_t base_index = 0;
  std::vector<Word> reps;
  std::vector<std::uint32_t> order;  // BFS discovery order, base first
  std::vector<std::uint32_t> parent; // reps[x] = via[x] · reps[parent[x]]
  std::vector<Symbol> via;
};

struct SuborbitPartition {
  int level = 0;
  Vertex base;
  std::uint32_t base_index = 0;
  /// Block 0 is {base}; the others follow by (size, smallest index).
  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::uint32_t> block_of;

  std::size_t rank() const noexcept { return blocks.size(); }

  std::vector<std::vector<std::string>> block_strings() const {
    std::vector<std::vector<std::string>> out;
    for (const auto &b : blocks) {
      auto &row = out.emplace_back();
      for (auto x : b)
        row.push_back(Vertex::from_index(base.degree(), level, x).to_string());
    }
    return out;
  }

  friend bool operator==(const SuborbitPartition &a, const SuborbitPartition &b) {
    return a.level == b.level && a.base_index == b.base_index && a.blocks == b.blocks;
  }
};

namespace detail {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::uint32_t> parent_;
};

/// Orbits of the group generated by `perms`, canonically ordered.
inline SuborbitPartition orbit_partition(const std::vector<Perm> &perms, std::size_t points, int level,
                                         const Vertex &base) {
  DisjointSets sets(points);
  for (const auto &p : perms)
    for (std::uint32_t x = 0; x < points; ++x)
      sets.unite(x, p[x]);
  std::vector<std::vector<std::uint32_t>> by_root(points);
  for (std::uint32_t x = 0; x < points; ++x)
    by_root[sets.find(x)].push_back(x);

  SuborbitPartition part;
  part.level = level;
  part.base = base;
  part.base_index = static_cast<std::uint32_t>(base.index());
  for (auto &b : by_root)
    if (!b.empty())
      part.blocks.push_back(std::move(b));
  const auto base_root = sets.find(part.base_index);
  std::sort(part.blocks.begin(), part.blocks.end(), [&](const auto &x, const auto &y) {
    const bool xb = sets.find(x.front()) == base_root;
    const bool yb = sets.find(y.front()) == base_root;
    if (xb != yb)
      return xb;
    if (x.size() != y.size())
      return x.size() < y.size();
    return x.front() < y.front();
  });
  part.block_of.assign(points, 0);
  for (std::uint32_t b = 0; b < part.blocks.size(); ++b)
    for (auto x : part.blocks[b])
      part.block_of[x] = b;
  return part;
}

} // namespace detail

/// Breadth-first orbit of the ray prefix under the generators. Throws
/// NotTransitiveError when the orbit misses part of the level.
inline Transversal orbit_transversal(const LevelActions &actions, int n, const Ray &ray) {
  const auto &pres = actions.presentation();
  const std::size_t points = actions.points(n);
  Transversal tr;
  tr.level = n;
  tr.base = ray_prefix(ray, n);
  tr.base_index = static_cast<std::uint32_t>(tr.base.index());
  tr.reps.assign(points, Word{});
  tr.parent.assign(points, UINT32_MAX);
  tr.via.assign(points, Symbol{});
  std::vector<bool> seen(points, false);
  seen[tr.base_index] = true;
  tr.parent[tr.base_index] = tr.base_index;
  tr.order.push_back(tr.base_index);
  for (std::size_t head = 0; head < tr.order.size(); ++head) {
    const auto x = tr.order[head];
    for (std::uint32_t g = 0; g < pres.generator_count(); ++g) {
      const Symbol s{g, false};
      const auto y = actions.symbol_perm(n, s)[x];
      if (seen[y])
        continue;
      seen[y] = true;
      tr.parent[y] = x;
      tr.via[y] = s;
      tr.reps[y] = Word({s}) * tr.reps[x];
      tr.order.push_back(y);
    }
  }
  if (tr.order.size() != points)
    throw NotTransitiveError(tr.order.size(), points);
  return tr;
}

inline Transversal orbit_transversal(const WreathPresentation &pres, int n, const Ray &ray, SizeCap cap = {}) {
  return orbit_transversal(LevelActions(pres, n, cap), n, ray);
}

/// reps[x]^-1 (y), by walking the BFS tree back to the base.
inline std::uint32_t apply_rep_inverse(const LevelActions &actions, const Transversal &tr, std::uint32_t x,
                                       std::uint32_t y) {
  while (x != tr.base_index) {
    y = actions.symbol_perm(tr.level, tr.via[x].inverted())[y];
    x = tr.parent[x];
  }
  return y;
}

struct SchreierGenerator {
  Word word;
  Perm perm;
};

/// Schreier generators u_{s(x)}^-1 · s · u_x of the stabilizer of the base,
/// reduced, nonempty, one per distinct level-n permutation.
inline std::vector<SchreierGenerator> schreier_generators(const LevelActions &actions, const Transversal &tr) {
  const auto &pres = actions.presentation();
  std::vector<SchreierGenerator> out;
  std::unordered_set<Perm, PermHash> seen;
  for (auto x : tr.order) {
    for (std::uint32_t g = 0; g < pres.generator_count(); ++g) {
      const Symbol s{g, false};
      const auto y = actions.symbol_perm(tr.level, s)[x];
      Word w = pres.reduce(tr.reps[y].inverse() * Word({s}) * tr.reps[x]);
      if (w.empty())
        continue;
      Perm p = actions.word_perm(tr.level, w);
      if (!seen.insert(p).second)
        continue;
      out.push_back({std::move(w), std::move(p)});
    }
  }
  return out;
}

inline std::vector<Word> schreier_generators(const WreathPresentation &pres, int n, const Ray &ray,
                                             SizeCap cap = {}) {
  const LevelActions actions(pres, n, cap);
  std::vector<Word> out;
  for (auto &sg : schreier_generators(actions, orbit_transversal(actions, n, ray)))
    out.push_back(std::move(sg.word));
  return out;
}

inline SuborbitPartition stabilizer_suborbits(const LevelActions &actions, const Transversal &tr) {
  std::vector<Perm> perms;
  for (auto &sg : schreier_generators(actions, tr))
    perms.push_back(std::move(sg.perm));
  return detail::orbit_partition(perms, actions.points(tr.level), tr.level, tr.base);
}

inline SuborbitPartition stabilizer_suborbits(const WreathPresentation &pres, int n, const Ray &ray,
                                              SizeCap cap = {}) {
  const LevelActions actions(pres, n, cap);
  return stabilizer_suborbits(actions, orbit_transversal(actions, n, ray));
}

namespace detail {

/// All elements of the level-n image of G, by closure; ResourceError past `cap`.
inline std::vector<Perm> enumerate_level_group(const WreathPresentation &pres, int n, std::size_t cap) {
  const LevelActions actions(pres, n);
  std::vector<Perm> elements{identity_perm(actions.points(n))};
  std::unordered_set<Perm, PermHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::uint32_t g = 0; g < pres.generator_count(); ++g) {
      Perm next = compose(actions.symbol_perm(n, {g, false}), elements[head]);
      if (seen.contains(next))
        continue;
      if (elements.size() >= cap)
        throw ResourceError("group closure at level " + std::to_string(n) + " exceeded the cap of " +
                            std::to_string(cap) + " elements (" + std::to_string(elements.size()) +
                            " found so far)");
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

} // namespace detail

/// |G_n| by exhaustive closure of the generator permutations.
inline std::size_t bfs_group_order(const WreathPresentation &pres, int n, std::size_t cap) {
  return detail::enumerate_level_group(pres, n, cap).size();
}

/// Suborbits of the stabilizer found by enumerating G_n and keeping the
/// elements that fix the base vertex.
inline SuborbitPartition oracle_suborbits(const WreathPresentation &pres, int n, const Ray &ray, std::size_t cap) {
  const Vertex base = ray_prefix(ray, n);
  const auto b = static_cast<std::uint32_t>(base.index());
  auto elements = detail::enumerate_level_group(pres, n, cap);
  std::vector<Perm> stabilizer;
  for (auto &p : elements)
    if (p[b] == b)
      stabilizer.push_back(std::move(p));
  return detail::orbit_partition(stabilizer, level_size(pres.degree(), n), n, base);
}

} // namespace selfsim

#endif // SELFSIM_LEVEL_QUOTIENT_HPP
