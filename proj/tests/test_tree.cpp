#include <gtest/gtest.h>

#include <set>

#include <selfsim/tree.hpp>

using namespace selfsim;

namespace {

std::vector<std::string> strings(const std::vector<Vertex> &vs) {
  std::vector<std::string> out;
  for (const auto &v : vs)
    out.push_back(v.to_string());
  return out;
}

} // namespace

TEST(VerticesAtLevel, RootOnly) { EXPECT_EQ(strings(vertices_at_level(2, 0)), std::vector<std::string>{"-"}); }

TEST(VerticesAtLevel, BinaryLevelTwoIsLexicographic) {
  EXPECT_EQ(strings(vertices_at_level(2, 2)), (std::vector<std::string>{"11", "12", "21", "22"}));
}

TEST(VerticesAtLevel, TernaryLevelTwo) {
  const auto vs = strings(vertices_at_level(3, 2));
  ASSERT_EQ(vs.size(), 9u);
  EXPECT_EQ(std::vector<std::string>(vs.begin(), vs.begin() + 4), (std::vector<std::string>{"11", "12", "13", "21"}));
}

TEST(VerticesAtLevel, IndexRoundTripsAndEntriesAreDistinct) {
  for (int d = 2; d <= 4; ++d)
    for (int n = 0; n <= 5; ++n) {
      const auto vs = vertices_at_level(d, n);
      std::set<Vertex> distinct(vs.begin(), vs.end());
      EXPECT_EQ(distinct.size(), level_size(d, n));
      for (std::size_t i = 0; i < vs.size(); ++i) {
        EXPECT_EQ(vs[i].index(), i);
        EXPECT_EQ(Vertex::from_index(d, n, i), vs[i]);
      }
    }
}

TEST(VerticesAtLevel, SizeCapNamesThePower) {
  try {
    vertices_at_level(3, 5, SizeCap{100});
    FAIL() << "expected ResourceError";
  } catch (const ResourceError &e) {
    EXPECT_NE(std::string(e.what()).find("3^5"), std::string::npos);
  }
}

TEST(Vertex, ParseRejectsOutOfRangeLetters) {
  EXPECT_THROW(Vertex::parse(2, "13"), UsageError);
  EXPECT_THROW(Vertex::parse(3, "1a"), UsageError);
  EXPECT_TRUE(Vertex::parse(3, "-").is_root());
  EXPECT_EQ(Vertex::parse(3, "-").to_string(), "-");
}

TEST(RayPrefix, ConstantRay) {
  const Ray ray = Ray::parse(2, "2");
  EXPECT_EQ(ray_prefix(ray, 3).to_string(), "222");
  EXPECT_TRUE(ray_prefix(ray, 0).is_root());
}

TEST(RayPrefix, HeadThenTail) { EXPECT_EQ(ray_prefix(Ray::parse(3, "13(2)"), 4).to_string(), "1322"); }

TEST(RayPrefix, ExtendsByOneLetter) {
  for (const auto *text : {"dinf", "12", "3(12)", "213"}) {
    const Ray ray = Ray::parse(3, text);
    for (int n = 0; n < 10; ++n)
      EXPECT_EQ(ray_prefix(ray, n + 1).prefix(n), ray_prefix(ray, n)) << text << " n=" << n;
  }
}

TEST(RayParse, DinfIsTheRightmostRay) {
  EXPECT_EQ(ray_prefix(Ray::parse(3, "dinf"), 3).to_string(), "333");
  EXPECT_EQ(ray_prefix(Ray::parse(2, "d^inf"), 2).to_string(), "22");
  EXPECT_THROW(Ray::parse(2, "13"), UsageError);
  EXPECT_THROW(Ray::parse(2, "1()"), UsageError);
}
