#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "segcover/error.hpp"
#include "segcover/greedy.hpp"
#include "segcover/instance_io.hpp"
#include "segcover/segmentation.hpp"
#include "segcover/union_find.hpp"

using namespace segcover;

TEST(UnionFind, Basics) {
  UnionFind uf(5);
  EXPECT_EQ(uf.component_count(), 5u);
  EXPECT_TRUE(uf.unite(0, 1));
  EXPECT_FALSE(uf.unite(1, 0));
  EXPECT_TRUE(uf.unite(3, 4));
  EXPECT_TRUE(uf.unite(1, 4));
  EXPECT_EQ(uf.component_count(), 2u);
  EXPECT_EQ(uf.find(0), uf.find(3));
  EXPECT_NE(uf.find(0), uf.find(2));
  EXPECT_EQ(uf.find(uf.find(3)), uf.find(3));
}

TEST(UnionFind, PathsShortAfterFullCompression) {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t n = 1 + gen() % 3000;
    UnionFind uf(n);
    for (std::uint32_t k = 0; k < n; ++k) uf.unite(gen() % n, gen() % n);
    for (std::uint32_t x = 0; x < n; ++x) uf.find(x);
    std::size_t roots = 0;
    for (std::uint32_t x = 0; x < n; ++x) {
      ASSERT_LE(uf.path_length(x), 2u);
      roots += uf.is_root(x);
    }
    ASSERT_EQ(roots, uf.component_count());
  }
}

TEST(FindGroups, Toy12IsOneComponent) {
  const auto seg = find_groups(oracle::toy12());
  ASSERT_EQ(seg.components.size(), 1u);
  EXPECT_EQ(seg.components[0].elements.size(), 12u);
  EXPECT_EQ(seg.components[0].subsets.size(), 7u);
}

TEST(FindGroups, DisjointToy) {
  const Instance inst(3, {{0, 1}, {2}});
  const auto seg = find_groups(inst);
  ASSERT_EQ(seg.components.size(), 2u);
  EXPECT_EQ(seg.components[0].elements, (std::vector<ElementId>{0, 1}));
  EXPECT_EQ(seg.components[0].subsets, (std::vector<SubsetId>{0}));
  EXPECT_EQ(seg.components[1].elements, (std::vector<ElementId>{2}));
  EXPECT_EQ(seg.components[1].subsets, (std::vector<SubsetId>{1}));
  EXPECT_EQ(seg.components[1].subinstance.universe_size(), 1u);
}

TEST(FindGroups, GeneratorBlocks) {
  const auto inst = generate_segmentable({.n = 400, .m = 600, .groups = 4, .seed = 3});
  const auto seg = find_groups(inst);
  ASSERT_EQ(seg.components.size(), 4u);
  for (std::size_t b = 0; b < 4; ++b) {
    EXPECT_EQ(seg.components[b].elements.front(), 100 * b);
    EXPECT_EQ(seg.components[b].elements.back(), 100 * b + 99);
  }
}

TEST(FindGroups, MatchesBfsOracle) {
  std::mt19937_64 gen(500);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + gen() % 2000;
    const std::size_t m = 1 + gen() % 1500;
    const auto inst = oracle::random_instance(gen, n, m, 1 + gen() % 4);
    const auto seg = find_groups(inst);
    const auto ref = oracle::bfs_components(inst);
    ASSERT_EQ(seg.components.size(), ref.size());
    std::vector<bool> seen_subset(m, false);
    for (std::size_t c = 0; c < ref.size(); ++c) {
      ASSERT_EQ(seg.components[c].elements, ref[c]);
      for (auto s : seg.components[c].subsets) {
        ASSERT_FALSE(seen_subset[s]);
        seen_subset[s] = true;
      }
    }
    ASSERT_TRUE(std::all_of(seen_subset.begin(), seen_subset.end(), [](bool b) { return b; }));
  }
}

TEST(Merge, TwoComponentsOneSubsetEach) {
  const Instance inst(3, {{0, 1}, {2}});
  const auto seg = find_groups(inst);
  std::vector<Cover> partials;
  for (const auto& c : seg.components) {
    const std::vector<SubsetId> one{0};
    partials.push_back(Cover::from_ids(c.subinstance, one));
  }
  const auto merged = merge_partial_covers(inst, seg, partials);
  EXPECT_EQ(merged.size(), 2u);
  EXPECT_TRUE(cover_is_feasible(merged, inst));
}

TEST(Merge, Toy12OptimumPassesThrough) {
  const auto inst = oracle::toy12();
  const auto seg = find_groups(inst);
  const std::vector<SubsetId> ids{0, 1, 5};
  const std::vector<Cover> partials{Cover::from_ids(seg.components[0].subinstance, ids)};
  const auto merged = merge_partial_covers(inst, seg, partials);
  EXPECT_EQ(merged.chosen(), ids);
}

TEST(Merge, InfeasiblePartialNamesComponent) {
  const Instance inst(3, {{0, 1}, {2}});
  const auto seg = find_groups(inst);
  const std::vector<SubsetId> one{0};
  std::vector<Cover> partials{Cover::from_ids(seg.components[0].subinstance, one),
                              Cover(seg.components[1].subinstance.universe_size())};
  try {
    merge_partial_covers(inst, seg, partials);
    FAIL() << "expected ContractError";
  } catch (const ContractError& e) {
    EXPECT_NE(std::string(e.what()).find("component 1"), std::string::npos) << e.what();
  }
  partials.pop_back();
  EXPECT_THROW(merge_partial_covers(inst, seg, partials), UsageError);
}

TEST(Merge, GreedyPerComponentAlwaysFeasible) {
  std::mt19937_64 gen(88);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = oracle::random_segmentable(gen, 40 + gen() % 300, 8, 6, 6);
    const auto seg = find_groups(inst);
    ASSERT_EQ(seg.components.size(), 8u);
    std::vector<Cover> partials;
    std::size_t sum = 0;
    for (const auto& c : seg.components) {
      partials.push_back(greedy_solve(c.subinstance));
      sum += partials.back().size();
    }
    const auto merged = merge_partial_covers(inst, seg, partials);
    ASSERT_TRUE(cover_is_feasible(merged, inst));
    ASSERT_EQ(merged.size(), sum);
  }
}

TEST(RestrictTo, DropsEmptyRestrictions) {
  const auto inst = oracle::toy12();
  const std::vector<ElementId> side{0, 4};  // elements 1 and 5
  const auto comp = restrict_to(inst, side);
  EXPECT_EQ(comp.subsets, (std::vector<SubsetId>{0, 6}));
  EXPECT_EQ(comp.subinstance.universe_size(), 2u);
}

TEST(SegmentationCsv, Layout) {
  const Instance inst(3, {{0, 1}, {2}});
  EXPECT_EQ(segmentation_csv(find_groups(inst)), "component,elements,subsets\n0,2,1\n1,1,1\n");
}
