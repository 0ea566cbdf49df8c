#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "segcover/error.hpp"
#include "segcover/instance.hpp"
#include "segcover/succinct_set.hpp"

using namespace segcover;

namespace {

SuccinctSet from_naive(std::size_t cap, const oracle::NaiveSet& s) {
  std::vector<ElementId> v(s.begin(), s.end());
  return SuccinctSet::from_elements(cap, v);
}

oracle::NaiveSet to_naive(const SuccinctSet& s) {
  const auto v = s.to_vector();
  return {v.begin(), v.end()};
}

// 1-based element list to a 12-element set.
SuccinctSet toy(std::initializer_list<ElementId> one_based) {
  SuccinctSet s(12);
  for (auto e : one_based) s.set(e - 1);
  return s;
}

bool padding_clear(const SuccinctSet& s) {
  const std::size_t rem = s.capacity() % 64;
  if (rem == 0 || s.words().empty()) return true;
  return (s.words().back() >> rem) == 0;
}

}  // namespace

TEST(SuccinctSet, IntersectionCountExamples) {
  EXPECT_EQ(set_intersection_count(toy({2, 3, 6, 7, 9, 10}), SuccinctSet::full(12)), 6u);
  EXPECT_EQ(set_intersection_count(SuccinctSet(12), toy({1, 2, 3})), 0u);
  EXPECT_EQ(set_intersection_count(toy({1, 2, 5, 6, 9}), toy({1, 4, 5, 8, 11, 12})), 2u);
}

TEST(SuccinctSet, DifferenceExamples) {
  SuccinctSet u = SuccinctSet::full(12);
  set_difference_inplace(u, toy({2, 3, 6, 7, 9, 10}));
  EXPECT_EQ(u, toy({1, 4, 5, 8, 11, 12}));

  SuccinctSet a = toy({1, 7, 12});
  set_difference_inplace(a, SuccinctSet(12));
  EXPECT_EQ(a, toy({1, 7, 12}));
  set_difference_inplace(a, toy({1, 7, 12}));
  EXPECT_TRUE(a.empty());
}

TEST(SuccinctSet, SubsetExamples) {
  EXPECT_TRUE(is_subset(toy({1, 5}), toy({1, 2, 5, 6, 9})));
  EXPECT_TRUE(is_subset(SuccinctSet(12), toy({3})));
  EXPECT_FALSE(is_subset(toy({2, 3, 4}), toy({2, 3, 6, 7, 9, 10})));
}

TEST(SuccinctSet, CapacityMismatchIsUsageError) {
  SuccinctSet a(10), b(11);
  EXPECT_THROW(set_intersection_count(a, b), UsageError);
  EXPECT_THROW(set_difference_inplace(a, b), UsageError);
  EXPECT_THROW(is_subset(a, b), UsageError);
  EXPECT_THROW(a |= b, UsageError);
  EXPECT_THROW(a.set(10), UsageError);
}

TEST(SuccinctSet, FullSetHasCanonicalPadding) {
  for (std::size_t cap : {0u, 1u, 63u, 64u, 65u, 127u, 128u, 1000u}) {
    const auto f = SuccinctSet::full(cap);
    EXPECT_EQ(f.count(), cap);
    EXPECT_TRUE(f.all());
    EXPECT_TRUE(padding_clear(f));
  }
}

TEST(SuccinctSet, FirstAndIteration) {
  SuccinctSet s(200);
  EXPECT_EQ(s.first(), 200u);
  s.set(130);
  s.set(64);
  EXPECT_EQ(s.first(), 64u);
  std::vector<ElementId> seen;
  s.for_each([&](ElementId e) { seen.push_back(e); });
  EXPECT_EQ(seen, (std::vector<ElementId>{64, 130}));
}

TEST(SuccinctSet, AgreesWithNaiveOracle) {
  std::mt19937_64 gen(20240611);
  std::uniform_int_distribution<std::uint32_t> cap_dist(1, 10000);
  std::uniform_real_distribution<double> p_dist(0.0, 0.6);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t cap = trial < 50 ? static_cast<std::uint32_t>(trial + 1) : cap_dist(gen);
    const auto na = oracle::random_naive_set(gen, cap, p_dist(gen));
    const auto nb = oracle::random_naive_set(gen, cap, p_dist(gen));
    const auto a = from_naive(cap, na);
    const auto b = from_naive(cap, nb);
    ASSERT_EQ(a.count(), na.size());
    ASSERT_EQ(to_naive(a | b), oracle::naive_union(na, nb));
    ASSERT_EQ(to_naive(a & b), oracle::naive_intersection(na, nb));
    ASSERT_EQ(to_naive(a - b), oracle::naive_difference(na, nb));
    ASSERT_EQ(a.intersection_count(b), oracle::naive_intersection(na, nb).size());
    ASSERT_EQ(a.intersects(b), !oracle::naive_intersection(na, nb).empty());
    ASSERT_EQ(is_subset(a, b), oracle::naive_subset(na, nb));
    ASSERT_EQ(is_subset(a & b, a), true);
    for (const auto& r : {a | b, a & b, a - b}) ASSERT_TRUE(padding_clear(r));
  }
}

TEST(Instance, RejectsInvalidFamilies) {
  EXPECT_THROW(Instance(3, {{0, 1}, {}}), UsageError);
  EXPECT_THROW(Instance(3, {{0, 1}, {3}}), UsageError);
  EXPECT_THROW(Instance(3, {{0, 1}}), UsageError);
}

TEST(Instance, NormalizesMembers) {
  const Instance inst(4, {{3, 1, 1, 0}, {2}});
  EXPECT_EQ(std::vector<ElementId>(inst.members(0).begin(), inst.members(0).end()),
            (std::vector<ElementId>{0, 1, 3}));
  EXPECT_EQ(inst.subset(0).count(), 3u);
  EXPECT_EQ(inst.max_subset_size(), 3u);
  EXPECT_EQ(inst.total_size(), 4u);
}

TEST(Incidence, DegreesOfToy12) {
  const auto inst = oracle::toy12();
  const auto inc = build_incidence(inst);
  EXPECT_EQ(inc.degree(11), 1u);  // element 12: S6 only
  EXPECT_EQ(inc.degree(8), 3u);   // element 9: S1, S4, S6
  std::size_t total = 0;
  for (ElementId e = 0; e < 12; ++e) total += inc.degree(e);
  EXPECT_EQ(total, inst.total_size());
}

TEST(Cover, FeasibilityExamples) {
  const auto inst = oracle::toy12();
  const std::vector<SubsetId> opt{0, 1, 5};
  EXPECT_TRUE(cover_is_feasible(Cover::from_ids(inst, opt), inst));
  EXPECT_FALSE(cover_is_feasible(Cover(12), inst));
  const std::vector<SubsetId> greedy{3, 4, 0, 5};
  EXPECT_TRUE(cover_is_feasible(Cover::from_ids(inst, greedy), inst));
}

TEST(Cover, RejectsUnknownAndDuplicateIds) {
  const auto inst = oracle::toy12();
  const std::vector<SubsetId> unknown{0, 9};
  EXPECT_THROW(Cover::from_ids(inst, unknown), UsageError);
  const std::vector<SubsetId> dup{0, 0};
  EXPECT_THROW(Cover::from_ids(inst, dup), UsageError);
}

TEST(Cover, FeasibilityMatchesElementwiseCheck) {
  std::mt19937_64 gen(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = oracle::random_instance(gen, 30, 12, 6);
    std::vector<SubsetId> ids;
    for (SubsetId s = 0; s < inst.subset_count(); ++s) {
      if (gen() % 2) ids.push_back(s);
    }
    const auto c = Cover::from_ids(inst, ids);
    bool every = true;
    for (ElementId e = 0; e < inst.universe_size(); ++e) {
      bool hit = false;
      for (auto s : ids) {
        for (auto x : inst.members(s)) hit = hit || x == e;
      }
      every = every && hit;
    }
    ASSERT_EQ(cover_is_feasible(c, inst), every);
    ASSERT_EQ(c.covered().count(), [&] {
      oracle::NaiveSet u;
      for (auto s : ids) u.insert(inst.members(s).begin(), inst.members(s).end());
      return u.size();
    }());
  }
}
