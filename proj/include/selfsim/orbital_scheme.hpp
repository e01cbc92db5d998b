#ifndef SELFSIM_ORBITAL_SCHEME_HPP
#define SELFSIM_ORBITAL_SCHEME_HPP

// Orbital association scheme of the transitive action of G_n on level n.
// Classes are the orbits of G_n on ordered pairs; they correspond to the
// suborbits of the point stabilizer P_n and to the double cosets P_n g P_n,
// so the intersection numbers are the structure constants of the Hecke
// algebra H(G, P_n) in its double-coset basis.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "level_quotient.hpp"
#include "tree.hpp"
#include "wreath.hpp"

namespace selfsim {

struct OrbitalScheme {
  std::size_t points = 1;
  std::size_t rank = 1;
  std::vector<long long> valencies;
  std::vector<std::size_t> pairing;
  std::vector<long long> intersection; // rank^3, see p()

  long long p(std::size_t i, std::size_t j, std::size_t k) const { return intersection[(i * rank + j) * rank + k]; }
  long long &p(std::size_t i, std::size_t j, std::size_t k) { return intersection[(i * rank + j) * rank + k]; }

  friend bool operator==(const OrbitalScheme &, const OrbitalScheme &) = default;
};

struct SchemeOptions {
  SizeCap cap{};
  /// Pair labels are tabulated when the level has at most this many points.
  std::size_t materialize_limit = 4096;
  unsigned workers = 1;
  /// Pick the largest member of each class as its representative instead of
  /// the smallest.
  bool last_representative = false;
};

/// Pair labels of the level-n action: label(x,y) is the suborbit of
/// reps[x]^-1 (y). Owns the level actions, transversal and suborbits.
class PairLabeler {
public:
  PairLabeler(const WreathPresentation &pres, int n, const Ray &ray, const SchemeOptions &opts = {})
      : actions_(pres, n, opts.cap), transversal_(orbit_transversal(actions_, n, ray)),
        suborbits_(stabilizer_suborbits(actions_, transversal_)), points_(actions_.points(n)) {
    if (points_ <= opts.materialize_limit)
      materialize(opts.workers);
  }

  const LevelActions &actions() const noexcept { return actions_; }
  const Transversal &transversal() const noexcept { return transversal_; }
  const SuborbitPartition &suborbits() const noexcept { return suborbits_; }
  std::size_t points() const noexcept { return points_; }
  std::size_t rank() const noexcept { return suborbits_.rank(); }
  std::uint32_t base() const noexcept { return transversal_.base_index; }
  bool materialized() const noexcept { return !table_.empty(); }

  std::uint32_t label(std::uint32_t x, std::uint32_t y) const {
    if (!table_.empty())
      return table_[static_cast<std::size_t>(x) * points_ + y];
    return suborbits_.block_of[apply_rep_inverse(actions_, transversal_, x, y)];
  }

private:
  void materialize(unsigned workers) {
    table_.assign(points_ * points_, 0);
    // reps[x]^-1 as a full permutation, parent before child in BFS order.
    auto fill_row = [&](std::uint32_t x, const Perm &rep_inverse) {
      for (std::size_t y = 0; y < points_; ++y)
        table_[x * points_ + y] = suborbits_.block_of[rep_inverse[y]];
    };
    if (workers <= 1) {
      std::vector<Perm> rep_inverse(points_);
      for (auto x : transversal_.order) {
        if (x == transversal_.base_index)
          rep_inverse[x] = identity_perm(points_);
        else
          rep_inverse[x] = compose(rep_inverse[transversal_.parent[x]],
                                   actions_.symbol_perm(transversal_.level, transversal_.via[x].inverted()));
        fill_row(x, rep_inverse[x]);
      }
      return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::uint32_t x = w; x < points_; x += workers) {
          Perm inv(points_);
          for (std::uint32_t y = 0; y < points_; ++y)
            inv[y] = apply_rep_inverse(actions_, transversal_, x, y);
          fill_row(x, inv);
        }
      });
    for (auto &t : pool)
      t.join();
  }

  LevelActions actions_;
  Transversal transversal_;
  SuborbitPartition suborbits_;
  std::size_t points_;
  std::vector<std::uint32_t> table_;
};

/// Identities every scheme must satisfy; returns at most `limit` violations.
inline std::vector<std::string> verify_scheme_axioms(const OrbitalScheme &s, std::size_t limit = 10) {
  std::vector<std::string> report;
  auto fail = [&](std::string msg) {
    if (report.size() < limit)
      report.push_back(std::move(msg));
  };
  const std::size_t r = s.rank;
  if (r == 0 || s.valencies.size() != r || s.pairing.size() != r || s.intersection.size() != r * r * r) {
    fail("inconsistent dimensions: rank " + std::to_string(r));
    return report;
  }
  if (s.valencies[0] != 1)
    fail("k_0 = 1 violated: k_0 = " + std::to_string(s.valencies[0]));
  long long total = 0;
  for (auto k : s.valencies)
    total += k;
  if (total != static_cast<long long>(s.points))
    fail("sum_i k_i = N violated: " + std::to_string(total) + " != " + std::to_string(s.points));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (s.p(i, j, k) < 0)
          fail("p[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) + "] is negative");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      if (s.p(i, 0, k) != (i == k ? 1 : 0))
        fail("p[i][0][k] = delta_ik violated at i=" + std::to_string(i) + ", k=" + std::to_string(k) + ": " +
             std::to_string(s.p(i, 0, k)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      long long sum = 0;
      for (std::size_t j = 0; j < r; ++j)
        sum += s.p(i, j, k);
      if (sum != s.valencies[i])
        fail("sum_j p[i][j][k] = k_i violated at i=" + std::to_string(i) + ", k=" + std::to_string(k) + ": " +
             std::to_string(sum) + " != " + std::to_string(s.valencies[i]));
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      long long sum = 0;
      for (std::size_t k = 0; k < r; ++k)
        sum += s.p(i, j, k) * s.valencies[k];
      if (sum != s.valencies[i] * s.valencies[j])
        fail("k_i k_j = sum_k p[i][j][k] k_k violated at i=" + std::to_string(i) + ", j=" + std::to_string(j) +
             ": " + std::to_string(sum) + " != " + std::to_string(s.valencies[i] * s.valencies[j]));
    }
  if (s.pairing[0] != 0)
    fail("0* = 0 violated: 0* = " + std::to_string(s.pairing[0]));
  for (std::size_t i = 0; i < r; ++i) {
    const auto t = s.pairing[i];
    if (t >= r) {
      fail("pairing of class " + std::to_string(i) + " out of range");
      continue;
    }
    if (s.pairing[t] != i)
      fail("pairing is not an involution at class " + std::to_string(i));
    if (s.valencies[t] != s.valencies[i])
      fail("k_{i*} = k_i violated at i=" + std::to_string(i));
  }
  return report;
}

/// Intersection numbers by counting: with y a representative of class k,
/// p[i][j][k] = #{z : label(base,z) = i, label(z,y) = j}.
inline OrbitalScheme build_scheme(const PairLabeler &labeler, const SchemeOptions &opts = {}) {
  const auto &part = labeler.suborbits();
  OrbitalScheme s;
  s.points = labeler.points();
  s.rank = part.rank();
  const std::size_t r = s.rank;
  for (const auto &b : part.blocks)
    s.valencies.push_back(static_cast<long long>(b.size()));
  s.intersection.assign(r * r * r, 0);

  std::vector<std::uint32_t> reps;
  for (const auto &b : part.blocks)
    reps.push_back(opts.last_representative ? b.back() : b.front());

  const std::uint32_t base = labeler.base();
  for (std::size_t i = 0; i < r; ++i)
    s.pairing.push_back(labeler.label(reps[i], base));

  const unsigned workers = std::max(1u, opts.workers);
  std::vector<std::vector<long long>> partial(workers, std::vector<long long>(r * r * r, 0));
  auto count = [&](unsigned w) {
    auto &acc = partial[w];
    for (std::uint32_t z = w; z < s.points; z += workers) {
      const std::size_t i = part.block_of[z];
      for (std::size_t k = 0; k < r; ++k)
        ++acc[(i * r + labeler.label(z, reps[k])) * r + k];
    }
  };
  if (workers == 1) {
    count(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(count, w);
    for (auto &t : pool)
      t.join();
  }
  for (const auto &acc : partial)
    for (std::size_t e = 0; e < acc.size(); ++e)
      s.intersection[e] += acc[e];

  if (auto report = verify_scheme_axioms(s); !report.empty())
    throw IntegrityError("orbital scheme violates its axioms: " + report.front());
  return s;
}

inline OrbitalScheme build_scheme(const WreathPresentation &pres, int n, const Ray &ray,
                                  const SchemeOptions &opts = {}) {
  return build_scheme(PairLabeler(pres, n, ray, opts), opts);
}

/// True iff p[i][j][k] = p[j][i][k] everywhere (the Hecke algebra is abelian).
inline bool is_commutative(const OrbitalScheme &s) {
  for (std::size_t i = 0; i < s.rank; ++i)
    for (std::size_t j = i + 1; j < s.rank; ++j)
      for (std::size_t k = 0; k < s.rank; ++k)
        if (s.p(i, j, k) != s.p(j, i, k))
          return false;
  return true;
}

/// Number of double cosets P_n g P_n.
inline std::size_t hecke_dimension(const OrbitalScheme &s) { return s.rank; }

} // namespace selfsim

#endif // SELFSIM_ORBITAL_SCHEME_HPP
