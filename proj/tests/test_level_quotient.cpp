#include <gtest/gtest.h>
#include <set>

#include <selfsim/catalog.hpp>
#include <selfsim/level_quotient.hpp>

#include "oracles.hpp"

using namespace selfsim;

namespace {

std::vector<std::vector<std::string>> blocks(const WreathPresentation &pres, int n, const Ray &ray) {
  return stabilizer_suborbits(pres, n, ray).block_strings();
}

using Blocks = std::vector<std::vector<std::string>>;

} // namespace

TEST(Transversal, GrigorchukLevelOne) {
  const auto e = builtin("grigorchuk");
  const auto tr = orbit_transversal(e.presentation, 1, e.default_ray);
  EXPECT_EQ(tr.base.to_string(), "2");
  EXPECT_TRUE(tr.reps[1].empty());
  EXPECT_EQ(e.presentation.render(tr.reps[0]), "a");
}

TEST(Transversal, LevelZero) {
  const auto e = builtin("gupta-sidki");
  const auto tr = orbit_transversal(e.presentation, 0, e.default_ray);
  ASSERT_EQ(tr.reps.size(), 1u);
  EXPECT_TRUE(tr.reps[0].empty());
}

TEST(Transversal, GammaLevelOne) {
  const auto e = builtin("gamma");
  const auto tr = orbit_transversal(e.presentation, 1, e.default_ray);
  // a = (1 2 3) sends 3 to 1 and 1 to 2.
  EXPECT_TRUE(tr.reps[2].empty());
  EXPECT_EQ(e.presentation.render(tr.reps[0]), "a");
  EXPECT_EQ(e.presentation.render(tr.reps[1]), "a a");
}

TEST(Transversal, RepresentativesReachTheirVertex) {
  for (auto key : builtin_keys()) {
    const auto e = builtin(key);
    const int n = e.degree() == 2 ? 6 : 4;
    const auto tr = orbit_transversal(e.presentation, n, e.default_ray);
    for (std::size_t x = 0; x < tr.reps.size(); ++x)
      EXPECT_EQ(act(e.presentation, tr.reps[x], tr.base).index(), x) << key;
  }
}

TEST(Transversal, NotTransitive) {
  const auto pres = parse_presentation("degree: 2\ngen b = perm () | b, b\n");
  try {
    orbit_transversal(pres, 2, Ray::rightmost(2));
    FAIL();
  } catch (const NotTransitiveError &e) {
    EXPECT_EQ(e.reached(), 1u);
  }
}

TEST(SchreierGenerators, GrigorchukLevelOne) {
  const auto e = builtin("grigorchuk");
  const auto words = schreier_generators(e.presentation, 1, e.default_ray);
  std::vector<std::string> rendered;
  for (const auto &w : words)
    rendered.push_back(e.presentation.render(w));
  EXPECT_NE(std::find(rendered.begin(), rendered.end(), "b"), rendered.end());
  // (s=a, x=2): u_1^-1 a u_2 = a a reduces to the empty word, which is dropped.
  for (const auto &w : words)
    EXPECT_FALSE(w.empty());
}

TEST(SchreierGenerators, FixTheBaseVertex) {
  for (auto key : builtin_keys()) {
    const auto e = builtin(key);
    for (int n = 1; n <= 4; ++n) {
      const Vertex base = ray_prefix(e.default_ray, n);
      for (const auto &w : schreier_generators(e.presentation, n, e.default_ray))
        EXPECT_EQ(act(e.presentation, w, base), base) << key << " " << e.presentation.render(w);
    }
  }
}

TEST(SchreierGenerators, DeduplicatedByPermutation) {
  const auto e = builtin("gupta-sidki");
  const LevelActions actions(e.presentation, 3);
  const auto gens = schreier_generators(actions, orbit_transversal(actions, 3, e.default_ray));
  std::set<Perm> perms;
  for (const auto &g : gens)
    EXPECT_TRUE(perms.insert(g.perm).second);
}

TEST(Suborbits, GrigorchukLevelTwo) {
  const auto e = builtin("grigorchuk");
  EXPECT_EQ(blocks(e.presentation, 2, e.default_ray), (Blocks{{"22"}, {"21"}, {"11", "12"}}));
}

TEST(Suborbits, GuptaSidkiLevelOne) {
  const auto e = builtin("gupta-sidki");
  EXPECT_EQ(blocks(e.presentation, 1, e.default_ray), (Blocks{{"3"}, {"1"}, {"2"}}));
}

TEST(Suborbits, LevelZeroIsTheRoot) {
  for (auto key : builtin_keys()) {
    const auto e = builtin(key);
    EXPECT_EQ(blocks(e.presentation, 0, e.default_ray), (Blocks{{"-"}}));
  }
}

TEST(Suborbits, OtherBaseRay) {
  // Stabilizer of 1 in the level-1 action of the Grigorchuk group.
  const auto e = builtin("grigorchuk");
  EXPECT_EQ(blocks(e.presentation, 2, Ray::parse(2, "1")), (Blocks{{"11"}, {"12"}, {"21", "22"}}));
}

TEST(BfsGroupOrder, GrigorchukSmallLevels) {
  const auto pres = builtin("grigorchuk").presentation;
  for (int n = 1; n <= 3; ++n) {
    const std::size_t brute = oracle::grigorchuk_group_order(n);
    EXPECT_EQ(bfs_group_order(pres, n, 1'000'000), brute) << n;
  }
  EXPECT_EQ(bfs_group_order(pres, 1, 100), 2u);
  EXPECT_EQ(bfs_group_order(pres, 2, 100), 8u);
  EXPECT_EQ(bfs_group_order(pres, 3, 1000), 128u);
}

TEST(BfsGroupOrder, CapReportsPartialCount) {
  try {
    bfs_group_order(builtin("grigorchuk").presentation, 3, 50);
    FAIL();
  } catch (const ResourceError &e) {
    EXPECT_NE(std::string(e.what()).find("50"), std::string::npos);
  }
}

TEST(OracleSuborbits, MatchesSchreierRoute) {
  for (auto key : builtin_keys()) {
    const auto e = builtin(key);
    for (int n = 0; n <= (e.degree() == 2 ? 3 : 2); ++n)
      EXPECT_EQ(oracle_suborbits(e.presentation, n, e.default_ray, 1'000'000),
                stabilizer_suborbits(e.presentation, n, e.default_ray))
          << key << " n=" << n;
  }
}

TEST(OracleSuborbits, SmallCases) {
  const auto grig = builtin("grigorchuk");
  EXPECT_EQ(oracle_suborbits(grig.presentation, 1, grig.default_ray, 100).block_strings(), (Blocks{{"2"}, {"1"}}));
  EXPECT_EQ(oracle_suborbits(grig.presentation, 2, grig.default_ray, 100).block_strings(),
            (Blocks{{"22"}, {"21"}, {"11", "12"}}));
  const auto gamma = builtin("gamma");
  EXPECT_EQ(oracle_suborbits(gamma.presentation, 1, gamma.default_ray, 100).block_strings(),
            (Blocks{{"3"}, {"1"}, {"2"}}));
}

TEST(Suborbits, PartitionInvariants) {
  for (auto key : builtin_keys()) {
    const auto e = builtin(key);
    const auto part = stabilizer_suborbits(e.presentation, 4, e.default_ray);
    std::vector<int> hits(level_size(e.degree(), 4), 0);
    for (const auto &b : part.blocks) {
      ASSERT_FALSE(b.empty());
      for (auto x : b)
        ++hits[x];
    }
    for (int h : hits)
      EXPECT_EQ(h, 1);
    EXPECT_EQ(part.blocks.front(), std::vector<std::uint32_t>{part.base_index});
  }
}
