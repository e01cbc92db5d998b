#include <gtest/gtest.h>

#include <random>

#include <selfsim/catalog.hpp>
#include <selfsim/wreath.hpp>

#include "oracles.hpp"

using namespace selfsim;

namespace {

struct Fixture : ::testing::Test {
  WreathPresentation grig = builtin("grigorchuk").presentation;
  WreathPresentation gamma = builtin("gamma").presentation;
  WreathPresentation gamma_bar = builtin("gamma-bar").presentation;
  WreathPresentation gupta = builtin("gupta-sidki").presentation;

  Vertex v(const WreathPresentation &p, const char *s) const { return Vertex::parse(p.degree(), s); }
  Word w(const WreathPresentation &p, const char *s) const { return p.parse_word(s); }
};

std::string random_grigorchuk_word(std::mt19937_64 &rng, std::size_t max_len) {
  std::string word;
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t k = 0; k < len; ++k)
    word.push_back("abcd"[rng() % 4]);
  return word;
}

std::string spaced(const std::string &word) {
  std::string out;
  for (char c : word) {
    if (!out.empty())
      out += ' ';
    out += c;
  }
  return out.empty() ? "e" : out;
}

} // namespace

using Act = Fixture;

TEST_F(Act, RootSwap) { EXPECT_EQ(act(grig, w(grig, "a"), v(grig, "12")).to_string(), "22"); }

TEST_F(Act, BActsAsAUnderFirstLetter) { EXPECT_EQ(act(grig, w(grig, "b"), v(grig, "12")).to_string(), "11"); }

TEST_F(Act, EmptyWordIsIdentity) { EXPECT_EQ(act(grig, Word{}, v(grig, "2121")).to_string(), "2121"); }

TEST_F(Act, RightmostLetterFirst) {
  // b then a: 12 -> 11 -> 21
  EXPECT_EQ(act(grig, w(grig, "a b"), v(grig, "12")).to_string(), "21");
}

TEST_F(Act, AgreesWithHandCodedGrigorchukAction) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string word = random_grigorchuk_word(rng, 10);
    const int level = static_cast<int>(rng() % 7);
    const Vertex x = Vertex::from_index(2, level, rng() % level_size(2, level));
    EXPECT_EQ(act(grig, w(grig, spaced(word).c_str()), x).to_string(),
              level == 0 ? "-" : oracle::grigorchuk_word_act(word, x.to_string()))
        << word << " on " << x.to_string();
  }
}

TEST_F(Act, InverseLettersInvert) {
  for (const auto *pres : {&gamma, &gamma_bar, &gupta}) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Symbol> syms(rng() % 8);
      for (auto &s : syms)
        s = {static_cast<std::uint32_t>(rng() % 2), rng() % 2 == 1};
      const Word word(syms);
      const Vertex x = Vertex::from_index(3, 5, rng() % 243);
      EXPECT_EQ(act(*pres, word.inverse(), act(*pres, word, x)), x);
      EXPECT_EQ(act(*pres, word * word.inverse(), x), x);
    }
  }
}

using Section = Fixture;

TEST_F(Section, GrigorchukB) {
  EXPECT_EQ(grig.render(section(grig, w(grig, "b"), v(grig, "2"))), "c");
  EXPECT_EQ(grig.render(section(grig, w(grig, "b"), v(grig, "1"))), "a");
  EXPECT_EQ(grig.render(section(grig, w(grig, "b"), v(grig, "22"))), "d");
}

TEST_F(Section, GuptaSidkiT) {
  EXPECT_EQ(gupta.render(section(gupta, w(gupta, "t"), v(gupta, "2"))), "a^-1");
  EXPECT_EQ(gupta.render(section(gupta, w(gupta, "t"), v(gupta, "3"))), "t");
  // (g^-1)|x = (g|g^-1(x))^-1
  EXPECT_EQ(gupta.render(section(gupta, w(gupta, "t^-1"), v(gupta, "2"))), "a");
}

TEST_F(Section, ProductUsesCocycleRule) {
  // (a b)|1 = a|b(1) . b|1 = a ; (b a)|1 = b|a(1) . a|1 = c
  EXPECT_EQ(grig.render(section(grig, w(grig, "a b"), v(grig, "1"))), "a");
  EXPECT_EQ(grig.render(section(grig, w(grig, "b a"), v(grig, "1"))), "c");
}

TEST_F(Section, IsFreelyReduced) {
  // (a r a^-1)|2 = a|1 . r|1 . (a|1)^-1 = a
  const Word sec = section(gamma, w(gamma, "a r a^-1"), v(gamma, "2"));
  EXPECT_EQ(gamma.render(sec), "a");
  EXPECT_TRUE(section(grig, w(grig, "b b"), v(grig, "2")).empty());
}

TEST(Reduce, InvolutionsOnlyWhenDeclared) {
  const auto grig = builtin("grigorchuk").presentation;
  const auto gamma = builtin("gamma").presentation;
  EXPECT_TRUE(grig.reduce(grig.parse_word("a a b b")).empty());
  EXPECT_EQ(grig.render(grig.reduce(grig.parse_word("a^-1 b"))), "a b");
  EXPECT_EQ(gamma.render(gamma.reduce(gamma.parse_word("a a"))), "a a");
  EXPECT_EQ(gamma.render(gamma.reduce(gamma.parse_word("a a a^-1 r r^-1"))), "a");
}

using LevelPermutation = Fixture;

TEST_F(LevelPermutation, RootSwapOnLevelOne) { EXPECT_EQ(level_permutation(grig, w(grig, "a"), 1), (Perm{1, 0})); }

TEST_F(LevelPermutation, DFixesLevelOne) { EXPECT_TRUE(is_identity(level_permutation(grig, w(grig, "d"), 1))); }

TEST_F(LevelPermutation, GammaRootCycle) { EXPECT_EQ(level_permutation(gamma, w(gamma, "a"), 1), (Perm{1, 2, 0})); }

TEST_F(LevelPermutation, MatchesActOnEveryVertex) {
  const Word word = w(gupta, "t a t^-1 a a t");
  const Perm p = level_permutation(gupta, word, 4);
  ASSERT_TRUE(is_bijection(p));
  for (const auto &x : vertices_at_level(3, 4))
    EXPECT_EQ(p[x.index()], act(gupta, word, x).index());
}

TEST_F(LevelPermutation, IsAHomomorphism) {
  const LevelActions actions(gamma_bar, 5);
  const Word u = w(gamma_bar, "a s a s^-1"), x = w(gamma_bar, "s s a^-1");
  EXPECT_EQ(actions.word_perm(5, u * x), compose(actions.word_perm(5, u), actions.word_perm(5, x)));
}

TEST_F(LevelPermutation, RespectsSizeCap) {
  EXPECT_THROW(level_permutation(grig, w(grig, "a"), 12, SizeCap{1000}), ResourceError);
}

TEST_F(LevelPermutation, TrivialityAtLevels) {
  EXPECT_TRUE(is_trivial_at_level(grig, w(grig, "d d"), 5));
  EXPECT_TRUE(is_trivial_at_level(grig, w(grig, "d"), 1));
  // d = (1, b) and b fixes level 1, so d first moves something at level 3.
  ASSERT_EQ(oracle::grigorchuk_act('d', "21"), "21");
  ASSERT_EQ(oracle::grigorchuk_act('d', "211"), "212");
  EXPECT_TRUE(is_trivial_at_level(grig, w(grig, "d"), 2));
  EXPECT_FALSE(is_trivial_at_level(grig, w(grig, "d"), 3));
}

TEST_F(LevelPermutation, OrderAtLevel) {
  EXPECT_EQ(order_at_level(grig, w(grig, "a"), 3), 2);
  EXPECT_EQ(order_at_level(grig, Word{}, 4), 1);
  for (int n = 1; n <= 7; ++n)
    EXPECT_EQ(order_at_level(grig, w(grig, "a b"), n), oracle::grigorchuk_order("ab", n)) << "n=" << n;
  EXPECT_EQ(oracle::grigorchuk_order("ab", 7), 16u); // ab has order 16
}

using Portrait = Fixture;

TEST_F(Portrait, GrigorchukD) {
  const auto node = portrait(grig, w(grig, "d"), 1);
  EXPECT_TRUE(is_identity(node.root_perm));
  ASSERT_EQ(node.children.size(), 2u);
  EXPECT_TRUE(node.children[0].is_leaf);
  EXPECT_TRUE(node.children[0].section.empty());
  EXPECT_EQ(grig.render(node.children[1].section), "b");
}

TEST_F(Portrait, RootSwapHasTrivialLeaves) {
  const auto node = portrait(grig, w(grig, "a"), 1);
  EXPECT_EQ(cycle_notation(node.root_perm), "(1 2)");
  for (const auto &c : node.children)
    EXPECT_TRUE(c.section.empty());
}

TEST_F(Portrait, GammaBarS) {
  const auto node = portrait(gamma_bar, w(gamma_bar, "s"), 1);
  EXPECT_TRUE(is_identity(node.root_perm));
  ASSERT_EQ(node.children.size(), 3u);
  EXPECT_EQ(gamma_bar.render(node.children[0].section), "a");
  EXPECT_EQ(gamma_bar.render(node.children[1].section), "a");
  EXPECT_EQ(gamma_bar.render(node.children[2].section), "s");
}

TEST_F(Portrait, DepthZeroIsALeaf) {
  const auto node = portrait(grig, w(grig, "b"), 0);
  EXPECT_TRUE(node.is_leaf);
  EXPECT_EQ(grig.render(node.section), "b");
  EXPECT_THROW(portrait(grig, w(grig, "b"), -1), UsageError);
}

// Hand-rolled property checks over every builtin.
TEST(WreathProperties, CocycleAndReductionInvariants) {
  std::mt19937_64 rng(2024);
  for (auto key : builtin_keys()) {
    const auto pres = builtin(key).presentation;
    const int d = pres.degree();
    auto random_word = [&](std::size_t max_len) {
      std::vector<Symbol> syms(rng() % (max_len + 1));
      for (auto &s : syms)
        s = {static_cast<std::uint32_t>(rng() % pres.generator_count()), rng() % 2 == 1};
      return Word(syms);
    };
    for (int trial = 0; trial < 200; ++trial) {
      const Word u = random_word(8), x = random_word(8);
      const int k = static_cast<int>(rng() % 4), m = static_cast<int>(rng() % 3);
      const Vertex sigma = Vertex::from_index(d, k, rng() % level_size(d, k));
      const Vertex tau = Vertex::from_index(d, m, rng() % level_size(d, m));
      EXPECT_EQ(act(pres, u * x, sigma), act(pres, u, act(pres, x, sigma)));
      EXPECT_EQ(act(pres, u, sigma.concat(tau)), act(pres, u, sigma).concat(act(pres, section(pres, u, sigma), tau)));
      EXPECT_EQ(act(pres, pres.reduce(u * x), sigma.concat(tau)), act(pres, u * x, sigma.concat(tau)));
    }
  }
}
