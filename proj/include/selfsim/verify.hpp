#ifndef SELFSIM_VERIFY_HPP
#define SELFSIM_VERIFY_HPP

// Randomized invariant suites for one group at one level. Every suite runs a
// fixed number of cases drawn from a seeded generator and records the first
// failure it sees.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "level_quotient.hpp"
#include "orbital_scheme.hpp"
#include "spectral.hpp"
#include "wreath.hpp"

namespace selfsim {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return cases > 0 && failures == 0; }
};

struct VerifyReport {
  std::vector<PropertyResult> results;

  bool passed() const {
    for (const auto &r : results)
      if (!r.passed())
        return false;
    return !results.empty();
  }
};

struct VerifyOptions {
  std::uint64_t seed = default_seed;
  std::size_t cases = 200;
  std::size_t max_word_length = 8;
  int max_action_level = 6;
};

namespace detail {

class Sampler {
public:
  Sampler(const WreathPresentation &pres, std::uint64_t seed) : pres_(pres), rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) { // inclusive
    return lo + static_cast<std::size_t>(rng_() % (hi - lo + 1));
  }

  Word word(std::size_t max_length) {
    std::vector<Symbol> syms(uniform(0, max_length));
    for (auto &s : syms)
      s = {static_cast<std::uint32_t>(uniform(0, pres_.generator_count() - 1)), uniform(0, 1) == 1};
    return Word(std::move(syms));
  }

  Vertex vertex(int level) {
    std::vector<Letter> letters(static_cast<std::size_t>(level));
    for (auto &x : letters)
      x = static_cast<Letter>(uniform(1, static_cast<std::size_t>(pres_.degree())));
    return Vertex(pres_.degree(), std::move(letters));
  }

  /// Inserts g g^-1 pairs at random positions.
  Word pad_with_cancelling_pairs(const Word &w, std::size_t pairs) {
    auto syms = w.symbols();
    for (std::size_t k = 0; k < pairs; ++k) {
      const Symbol s{static_cast<std::uint32_t>(uniform(0, pres_.generator_count() - 1)), uniform(0, 1) == 1};
      const auto at = static_cast<std::ptrdiff_t>(uniform(0, syms.size()));
      syms.insert(syms.begin() + at, {s, s.inverted()});
    }
    return Word(std::move(syms));
  }

  std::mt19937_64 &engine() { return rng_; }

private:
  const WreathPresentation &pres_;
  std::mt19937_64 rng_;
};

class Recorder {
public:
  Recorder(std::string name) { result_.name = std::move(name); }
  void check(bool ok, const std::string &what) {
    ++result_.cases;
    if (ok)
      return;
    if (result_.failures++ == 0)
      result_.first_failure = what;
  }
  PropertyResult finish() && { return std::move(result_); }

private:
  PropertyResult result_;
};

} // namespace detail

/// Runs every invariant suite for the presentation at level n. When `entry`
/// is given, the catalog's expected rank and degrees are checked too.
inline VerifyReport verify_all(const WreathPresentation &pres, int n, const Ray &ray, const VerifyOptions &opts = {},
                               const CatalogEntry *entry = nullptr) {
  VerifyReport report;
  detail::Sampler sample(pres, opts.seed);
  const int action_level = std::max(n, 1) < opts.max_action_level ? std::max(n, 1) : opts.max_action_level;
  auto show = [&](const Word &w) { return pres.render(w); };

  {
    detail::Recorder rec("action compatibility");
    for (std::size_t c = 0; c < opts.cases; ++c) {
      const Word u = sample.word(opts.max_word_length), v = sample.word(opts.max_word_length);
      const Vertex x = sample.vertex(static_cast<int>(sample.uniform(0, static_cast<std::size_t>(action_level))));
      rec.check(act(pres, u * v, x) == act(pres, u, act(pres, v, x)),
                "u=" + show(u) + " v=" + show(v) + " x=" + x.to_string());
    }
    report.results.push_back(std::move(rec).finish());
  }
  {
    detail::Recorder rec("cocycle identity");
    for (std::size_t c = 0; c < opts.cases; ++c) {
      const Word w = sample.word(opts.max_word_length);
      const int k = static_cast<int>(sample.uniform(0, static_cast<std::size_t>(action_level)));
      const int m = static_cast<int>(sample.uniform(0, static_cast<std::size_t>(action_level - k)));
      const Vertex sigma = sample.vertex(k), tau = sample.vertex(m);
      rec.check(act(pres, w, sigma.concat(tau)) == act(pres, w, sigma).concat(act(pres, section(pres, w, sigma), tau)),
                "w=" + show(w) + " sigma=" + sigma.to_string() + " tau=" + tau.to_string());
    }
    report.results.push_back(std::move(rec).finish());
  }
  {
    detail::Recorder rec("inverse identity");
    for (std::size_t c = 0; c < opts.cases; ++c) {
      const Word w = sample.word(opts.max_word_length);
      const Vertex x = sample.vertex(static_cast<int>(sample.uniform(0, static_cast<std::size_t>(action_level))));
      rec.check(act(pres, w.inverse(), act(pres, w, x)) == x, "w=" + show(w) + " x=" + x.to_string());
    }
    report.results.push_back(std::move(rec).finish());
  }
  {
    detail::Recorder rec("free reduction invariance");
    for (std::size_t c = 0; c < opts.cases; ++c) {
      const Word padded = sample.pad_with_cancelling_pairs(sample.word(opts.max_word_length), sample.uniform(1, 3));
      const Vertex x = sample.vertex(action_level);
      rec.check(act(pres, pres.reduce(padded), x) == act(pres, padded, x), "w=" + show(padded) + " x=" + x.to_string());
    }
    report.results.push_back(std::move(rec).finish());
  }
  {
    detail::Recorder rec("level permutation restricts to level 1");
    const LevelActions actions(pres, action_level);
    const std::size_t block = actions.points(action_level) / static_cast<std::size_t>(pres.degree());
    for (std::size_t c = 0; c < opts.cases; ++c) {
      const Word w = sample.word(opts.max_word_length);
      const Perm top = actions.word_perm(1, w);
      const Perm full = actions.word_perm(action_level, w);
      bool ok = true;
      for (std::size_t x = 0; x < full.size(); ++x)
        ok = ok && full[x] / block == top[x / block];
      rec.check(ok, "w=" + show(w));
    }
    report.results.push_back(std::move(rec).finish());
  }

  const PairLabeler labeler(pres, n, ray);
  const OrbitalScheme scheme = build_scheme(labeler);
  {
    detail::Recorder rec("Schreier generators fix the base vertex");
    for (const auto &sg : schreier_generators(labeler.actions(), labeler.transversal()))
      rec.check(sg.perm[labeler.base()] == labeler.base() &&
                    labeler.actions().apply(n, sg.word, labeler.base()) == labeler.base(),
                "w=" + show(sg.word));
    report.results.push_back(std::move(rec).finish());
  }
  {
    detail::Recorder rec("pair labels are G-invariant");
    const auto points = labeler.points();
    for (std::size_t c = 0; c < opts.cases; ++c) {
      const Word g = sample.word(2 * opts.max_word_length);
      const auto x = static_cast<std::uint32_t>(sample.uniform(0, points - 1));
      const auto y = static_cast<std::uint32_t>(sample.uniform(0, points - 1));
      const auto &acts = labeler.actions();
      rec.check(labeler.label(x, y) == labeler.label(acts.apply(n, g, x), acts.apply(n, g, y)),
                "g=" + show(g) + " x=" + std::to_string(x) + " y=" + std::to_string(y));
    }
    report.results.push_back(std::move(rec).finish());
  }
  {
    detail::Recorder rec("scheme axioms");
    const auto violations = verify_scheme_axioms(scheme);
    rec.check(violations.empty(), violations.empty() ? "" : violations.front());
    SchemeOptions other;
    other.last_representative = true;
    rec.check(build_scheme(labeler, other) == scheme, "intersection numbers depend on the class representative");
    rec.check(is_commutative(scheme), "Hecke algebra is not commutative");
    if (entry)
      rec.check(hecke_dimension(scheme) == static_cast<std::size_t>(entry->expected_rank(n)),
                "rank " + std::to_string(scheme.rank) + " != expected " + std::to_string(entry->expected_rank(n)));
    // recount p[i][j][k] from a random pair (x, y) in class k
    const auto points = labeler.points();
    for (std::size_t c = 0; c < opts.cases; ++c) {
      const auto x = static_cast<std::uint32_t>(sample.uniform(0, points - 1));
      const auto y = static_cast<std::uint32_t>(sample.uniform(0, points - 1));
      const std::size_t i = sample.uniform(0, scheme.rank - 1), j = sample.uniform(0, scheme.rank - 1);
      const std::size_t k = labeler.label(x, y);
      long long count = 0;
      for (std::uint32_t z = 0; z < points; ++z)
        if (labeler.label(x, z) == i && labeler.label(z, y) == j)
          ++count;
      rec.check(count == scheme.p(i, j, k), "p[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                                                std::to_string(k) + "] recounted at x=" + std::to_string(x) +
                                                " y=" + std::to_string(y));
    }
    report.results.push_back(std::move(rec).finish());
  }
  {
    detail::Recorder rec("multiplicities are seed-independent");
    if (is_commutative(scheme)) {
      const auto reference = sorted_degrees(spectral_decomposition(scheme, opts.seed).multiplicities);
      if (entry)
        rec.check(reference == entry->expected_degrees(n), "degrees differ from the catalog's expected degrees");
      for (std::size_t c = 0; c < opts.cases; ++c) {
        const std::uint64_t s = sample.engine()();
        rec.check(sorted_degrees(spectral_decomposition(scheme, s).multiplicities) == reference,
                  "seed " + std::to_string(s));
      }
    } else {
      rec.check(false, "scheme is not commutative");
    }
    report.results.push_back(std::move(rec).finish());
  }
  return report;
}

} // namespace selfsim

#endif // SELFSIM_VERIFY_HPP
