#include <gtest/gtest.h>

#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "oracles.hpp"
#include "segcover/error.hpp"
#include "segcover/mst_partition.hpp"
#include "segcover/preprocess.hpp"
#include "segcover/union_find.hpp"

using namespace segcover;

namespace {

WeightedCoGraph graph(std::vector<ElementId> vertices, std::vector<WeightedEdge> edges) {
  std::sort(edges.begin(), edges.end());
  return {std::move(vertices), std::move(edges)};
}

// Heaviest spanning tree weight by enumerating every (V-1)-edge selection.
std::uint64_t brute_force_mst_weight(const WeightedCoGraph& g) {
  const std::size_t nv = g.vertices.size();
  const std::size_t ne = g.edges.size();
  auto index = [&](ElementId x) {
    return static_cast<std::uint32_t>(
        std::lower_bound(g.vertices.begin(), g.vertices.end(), x) - g.vertices.begin());
  };
  std::uint64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != nv - 1) continue;
    std::vector<std::uint32_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0u);
    std::function<std::uint32_t(std::uint32_t)> root = [&](std::uint32_t x) {
      return parent[x] == x ? x : root(parent[x]);
    };
    bool acyclic = true;
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < ne && acyclic; ++i) {
      if (!(mask >> i & 1u)) continue;
      const auto a = root(index(g.edges[i].u)), b = root(index(g.edges[i].v));
      if (a == b) acyclic = false;
      parent[a] = b;
      w += g.edges[i].weight;
    }
    if (acyclic) best = std::max(best, w);
  }
  return best;
}

WeightedCoGraph random_connected_graph(std::mt19937_64& gen, std::size_t nv, std::size_t extra) {
  std::vector<ElementId> vertices(nv);
  std::iota(vertices.begin(), vertices.end(), ElementId{0});
  std::set<std::pair<ElementId, ElementId>> used;
  std::vector<WeightedEdge> edges;
  auto add = [&](ElementId a, ElementId b) {
    if (a == b) return;
    if (a > b) std::swap(a, b);
    if (!used.insert({a, b}).second) return;
    edges.push_back({a, b, static_cast<std::uint32_t>(1 + gen() % 4)});
  };
  for (ElementId v = 1; v < nv; ++v) add(static_cast<ElementId>(gen() % v), v);
  for (std::size_t k = 0; k < extra; ++k) add(gen() % nv, gen() % nv);
  return graph(vertices, edges);
}

}  // namespace

TEST(CoGraph, ToyResidualEdgeWeights) {
  const auto inst = oracle::toy12();
  const auto r = reduce(inst, {.mode = ReduceMode::one_pass});
  const auto g = build_cograph(inst, SuccinctSet::full(12) - r.covered);
  EXPECT_EQ(g.vertices, (std::vector<ElementId>{0, 1, 2, 3, 4, 5, 6, 7}));
  const auto it = std::find_if(g.edges.begin(), g.edges.end(),
                               [](const WeightedEdge& e) { return e.u == 1 && e.v == 2; });
  ASSERT_NE(it, g.edges.end());
  EXPECT_EQ(it->weight, 2u);  // elements 2 and 3 share S3 and S4
}

TEST(CoGraph, TriangleAndDisjoint) {
  const Instance tri(3, {{0, 1, 2}});
  const auto g = build_cograph(tri);
  EXPECT_EQ(g.edges, (std::vector<WeightedEdge>{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}));
  const Instance disjoint(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(build_cograph(disjoint).edges, (std::vector<WeightedEdge>{{0, 1, 1}, {2, 3, 1}}));
}

TEST(CoGraph, ParallelMatchesSerial) {
  std::mt19937_64 gen(81);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = oracle::random_instance(gen, 2 + gen() % 300, 1 + gen() % 100, 12);
    SuccinctSet vs(inst.universe_size());
    for (ElementId e = 0; e < inst.universe_size(); ++e) {
      if (gen() % 4) vs.set(e);
    }
    const auto ref = build_cograph_serial(inst, vs);
    for (int t : {1, 2, 4}) {
      const auto g = build_cograph(inst, vs, t);
      ASSERT_EQ(g.vertices, ref.vertices);
      ASSERT_EQ(g.edges, ref.edges);
    }
  }
}

TEST(Mst, ToyResidualCut) {
  const auto inst = oracle::toy12();
  const auto r = reduce(inst, {.mode = ReduceMode::one_pass});
  const auto bp = mst_bipartition(build_cograph(inst, SuccinctSet::full(12) - r.covered));
  EXPECT_EQ(bp.cut, (WeightedEdge{1, 2, 2}));
  EXPECT_EQ(bp.weights[0], 5u);
  EXPECT_EQ(bp.weights[1], 6u);
  EXPECT_EQ(bp.sides[0], (std::vector<ElementId>{0, 1, 4, 5}));
  EXPECT_EQ(bp.sides[1], (std::vector<ElementId>{2, 3, 6, 7}));
}

TEST(Mst, PathEnumeratesBothCuts) {
  // a-b weight 2, b-c weight 1: cutting a-b leaves {a} | {b,c} with 0 vs 1,
  // cutting b-c leaves {a,b} | {c} with 2 vs 0.
  const auto bp = mst_bipartition(graph({0, 1, 2}, {{0, 1, 2}, {1, 2, 1}}));
  ASSERT_EQ(bp.candidates.size(), 2u);
  EXPECT_EQ(bp.cut, (WeightedEdge{0, 1, 2}));
  EXPECT_EQ(bp.sides[0], (std::vector<ElementId>{0}));
  EXPECT_EQ(bp.sides[1], (std::vector<ElementId>{1, 2}));
}

TEST(Mst, StarTieBreaksLexicographically) {
  const auto bp = mst_bipartition(graph({0, 1, 2, 3}, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}}));
  EXPECT_EQ(bp.cut, (WeightedEdge{0, 1, 1}));
  EXPECT_EQ(bp.weights[0], 2u);
  EXPECT_EQ(bp.weights[1], 0u);
}

TEST(Mst, DisconnectedAndTinyRejected) {
  EXPECT_THROW(mst_bipartition(graph({0, 1, 2, 3}, {{0, 1, 1}, {2, 3, 1}})), UsageError);
  EXPECT_THROW(mst_bipartition(graph({0}, {})), UsageError);
}

TEST(Mst, WeightMatchesBruteForce) {
  std::mt19937_64 gen(82);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_connected_graph(gen, 2 + gen() % 7, gen() % 8);
    std::uint64_t w = 0;
    const auto tree = maximum_spanning_tree(g);
    ASSERT_EQ(tree.size(), g.vertices.size() - 1);
    for (const auto& e : tree) w += e.weight;
    ASSERT_EQ(w, brute_force_mst_weight(g));
  }
}

TEST(Mst, SidesAreTreeComponentsWithInternalWeights) {
  std::mt19937_64 gen(83);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_connected_graph(gen, 2 + gen() % 30, gen() % 40);
    const auto bp = mst_bipartition(g);
    std::map<ElementId, std::vector<std::pair<ElementId, std::uint32_t>>> adj;
    for (const auto& e : bp.tree) {
      if (e == bp.cut) continue;
      adj[e.u].push_back({e.v, e.weight});
      adj[e.v].push_back({e.u, e.weight});
    }
    for (int side = 0; side < 2; ++side) {
      ASSERT_FALSE(bp.sides[side].empty());
      std::set<ElementId> seen{bp.sides[side].front()};
      std::queue<ElementId> q;
      q.push(bp.sides[side].front());
      std::uint64_t twice = 0;
      while (!q.empty()) {
        const auto x = q.front();
        q.pop();
        for (auto [y, w] : adj[x]) {
          twice += w;
          if (seen.insert(y).second) q.push(y);
        }
      }
      ASSERT_EQ(std::vector<ElementId>(seen.begin(), seen.end()), bp.sides[side]);
      ASSERT_EQ(twice / 2, bp.weights[side]);
    }
    ASSERT_EQ(bp.sides[0].size() + bp.sides[1].size(), g.vertices.size());
    for (const auto& c : bp.candidates) {
      const auto d = [](const CandidateCut& x) {
        return std::max(x.first_weight, x.second_weight) - std::min(x.first_weight, x.second_weight);
      };
      ASSERT_GE(d(c), std::max(bp.weights[0], bp.weights[1]) - std::min(bp.weights[0], bp.weights[1]));
    }
  }
}

TEST(GraspMst, ToyResidualFeasible) {
  const auto inst = oracle::toy12();
  const auto r = reduce(inst, {.mode = ReduceMode::one_pass});
  SuParams p;
  p.source = SegmentationSource::mst_bipartition;
  const auto c = grasp_mst_solve(r.residual, p);
  EXPECT_TRUE(cover_is_feasible(c, r.residual));
}

TEST(GraspMst, AlwaysFeasibleOnConnectedInstances) {
  std::mt19937_64 gen(84);
  int runs = 0;
  for (int trial = 0; trial < 200 && runs < 60; ++trial) {
    const auto inst = oracle::random_instance(gen, 10 + gen() % 120, 10 + gen() % 80, 15);
    if (oracle::bfs_components(inst).size() != 1) continue;
    ++runs;
    SuParams p;
    p.grasp.num_iter = 10;
    p.grasp.seed = trial;
    p.threads = 2;
    const auto c = grasp_mst_solve(inst, p);
    ASSERT_TRUE(cover_is_feasible(c, inst));
  }
  EXPECT_GT(runs, 20);
}

TEST(GraspMst, SegmentableRejected) {
  const Instance inst(3, {{0, 1}, {2}});
  EXPECT_THROW(grasp_mst_solve(inst, {}), UsageError);
}

TEST(MstDiagnostics, Layout) {
  const auto bp = mst_bipartition(graph({0, 1, 2}, {{0, 1, 2}, {1, 2, 1}}));
  const auto text = mst_diagnostics(bp);
  EXPECT_EQ(text.rfind("tree_u,tree_v,weight\n", 0), 0u);
  EXPECT_NE(text.find("cut_u,cut_v,weight,w1,w2\n0,1,2,0,1\n"), std::string::npos);
}
