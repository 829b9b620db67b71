#include <map>
#include <set>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace hgq {
namespace {

// a(n) = Σ_{k=1}^{n} C(n,k)·a(n-k), a(0) = 1
std::int64_t ordered_bell(int n) {
  std::vector<std::int64_t> a(n + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::int64_t c = 1;  // C(m, k)
    for (int k = 1; k <= m; ++k) {
      c = c * (m - k + 1) / k;
      a[m] += c * a[m - k];
    }
  }
  return a[n];
}

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

TEST(EnumerateSetCompositions, SmallCases) {
  EXPECT_EQ(enumerate_set_compositions(1).size(), 1U);
  auto two = enumerate_set_compositions(2);
  ASSERT_EQ(two.size(), 3U);
  EXPECT_EQ(two[0], trivial_flag(2));
  EXPECT_EQ(two[1], SetComposition(2, {VertexSet{1}, VertexSet{2}}));
  EXPECT_EQ(two[2], SetComposition(2, {VertexSet{2}, VertexSet{1}}));
  EXPECT_EQ(enumerate_set_compositions(4).size(), 75U);
  EXPECT_THROW(enumerate_set_compositions(0), InputError);
}

TEST(EnumerateSetCompositions, CountsMatchOrderedBellRecursion) {
  for (int n = 1; n <= 7; ++n) {
    const auto flags = enumerate_set_compositions(n);
    EXPECT_EQ(static_cast<std::int64_t>(flags.size()), ordered_bell(n)) << "n = " << n;
    std::size_t visited = 0;
    for_each_set_composition(n, [&](std::span<const VertexSet>) { ++visited; });
    EXPECT_EQ(visited, flags.size());
  }
}

TEST(EnumerateSetCompositions, DistinctAndSortedByBlockCount) {
  const auto flags = enumerate_set_compositions(5);
  std::set<std::vector<VertexSet::Mask>> seen;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    std::vector<VertexSet::Mask> key;
    for (VertexSet b : flags[i].blocks()) key.push_back(b.bits());
    EXPECT_TRUE(seen.insert(key).second);
    if (i > 0) {
      EXPECT_LE(flags[i - 1].block_count(), flags[i].block_count());
    }
  }
}

TEST(EnumerateSetCompositions, TypeClassesHaveMultinomialSize) {
  for (int n = 1; n <= 6; ++n) {
    std::map<Composition, std::int64_t> by_type;
    for (const auto& f : enumerate_set_compositions(n)) ++by_type[type_of(f)];
    ASSERT_EQ(by_type.size(), std::size_t{1} << (n - 1));
    for (const auto& [alpha, count] : by_type) {
      std::int64_t expected = factorial(n);
      for (int p : alpha.parts) expected /= factorial(p);
      EXPECT_EQ(count, expected);
      std::int64_t typed = 0;
      for_each_set_composition_of_type(n, alpha, [&](std::span<const VertexSet> blocks) {
        EXPECT_EQ(type_of(blocks), alpha);
        ++typed;
      });
      EXPECT_EQ(typed, expected);
    }
  }
}

TEST(TypeOf, Examples) {
  EXPECT_EQ(type_of(SetComposition(3, {VertexSet{2}, VertexSet{1, 3}})), (Composition{1, 2}));
  EXPECT_EQ(type_of(trivial_flag(4)), (Composition{4}));
  EXPECT_EQ(type_of(finest_flag(3)), (Composition{1, 1, 1}));
}

TEST(CanonicalWeight, Examples) {
  EXPECT_EQ(canonical_weight(SetComposition(3, {VertexSet{3}, VertexSet{1, 2}})),
            (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(canonical_weight(finest_flag(4)), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(canonical_weight(trivial_flag(3)), (std::vector<int>{1, 1, 1}));
}

TEST(CanonicalWeight, IsABijection) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& f : enumerate_set_compositions(n)) {
      const auto w = canonical_weight(f);
      EXPECT_EQ(set_composition_from_weight(w), f);
    }
  }
}

TEST(SetComposition, RejectsInvalidBlocks) {
  EXPECT_THROW(SetComposition(3, {VertexSet{1}, VertexSet{1, 2}}), InputError);
  EXPECT_THROW(SetComposition(3, {VertexSet{1}, VertexSet{2}}), InputError);
  EXPECT_THROW(SetComposition(2, {VertexSet{1, 2}, VertexSet{}}), InputError);
  EXPECT_EQ(SetComposition(3, {VertexSet{2}, VertexSet{1, 3}}).prefix(1), VertexSet{2});
}

TEST(CompositionsOf, Examples) {
  EXPECT_EQ(compositions_of(3),
            (std::vector<Composition>{{3}, {1, 2}, {2, 1}, {1, 1, 1}}));
  EXPECT_EQ(compositions_of(1), (std::vector<Composition>{{1}}));
  EXPECT_EQ(compositions_of(5).size(), 16U);
  EXPECT_EQ(compositions_of(0), (std::vector<Composition>{Composition{}}));
  for (const auto& c : compositions_of(6)) EXPECT_EQ(c.degree(), 6);
}

TEST(Composition, RejectsNonPositiveParts) {
  EXPECT_THROW((Composition{1, 0}), InputError);
}

}  // namespace
}  // namespace hgq
