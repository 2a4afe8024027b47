// Copyright 2026 The streamcc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "streamcc/cost.hpp"
#include "streamcc/gen.hpp"
#include "streamcc/reference.hpp"
#include "streamcc/streaming.hpp"

namespace streamcc {
namespace {

using testing::naive_cost;
using testing::naive_opt;
using testing::random_graph;
using testing::random_permutation;

constexpr VertexId a = 0, b = 1, c = 2, d = 3;

PositiveGraph graph(std::size_t n, std::vector<Edge> edges) {
  return PositiveGraph(n, edges);
}

Clustering stream_of(const PositiveGraph& g, const Permutation& pi,
                     std::size_t k) {
  return cluster_stream(g.edges(), g.size(), k, pi).clustering;
}

TEST(RevealPivotTest, TriangleIsOneClusterWithZeroCost) {
  const auto g = graph(3, {{a, b}, {a, c}, {b, c}});
  const auto res = reveal_pivot(g, Permutation::identity(3), 2);
  EXPECT_EQ(res.clustering.num_clusters(), 1u);
  EXPECT_EQ(res.diagnostics.p_plus, 0);
  EXPECT_EQ(res.diagnostics.p_minus, 0);
  EXPECT_EQ(res.diagnostics.singleton_cost(), 0);
}

// Path a-b-c, pi identity, k = 1. Step 1 makes a a pivot with b and cuts
// (b, c) at the pivot step. Step 2 reveals the clustered b, so c's counter
// reaches 1 = k and c becomes a singleton with nothing left to cut.
TEST(RevealPivotTest, PathWithCapacityOneHandTrace) {
  const auto g = graph(3, {{a, b}, {b, c}});
  const auto res = reveal_pivot(g, Permutation::identity(3), 1);
  const auto& cl = res.clustering;
  const auto& diag = res.diagnostics;
  EXPECT_EQ(cl.cluster_of(a), cl.cluster_of(b));
  EXPECT_EQ(cl.role(a), Role::kPivot);
  EXPECT_EQ(cl.role(b), Role::kMember);
  EXPECT_EQ(cl.role(c), Role::kSingleton);
  EXPECT_EQ(diag.p_plus, 1);
  EXPECT_EQ(diag.p_minus, 0);
  EXPECT_EQ(diag.singleton_cut, (std::vector<std::int64_t>{0, 0, 0}));
  EXPECT_EQ(diag.cut_before, (std::vector<std::int64_t>{0, 1, 1}));
  EXPECT_EQ(diag.counter[c], 1u);
  EXPECT_EQ(diag.total_cost(), 1);
  EXPECT_EQ(disagreement_cost(cl, g).total, 1);
}

// Star with a on top and k = 1: every leaf's only kept neighbour is a.
TEST(RevealPivotTest, StarWithCapacityOneCollapses) {
  const auto g = graph(4, {{b, a}, {c, a}, {d, a}});
  const auto res = reveal_pivot(g, Permutation::identity(4), 1);
  EXPECT_EQ(res.clustering.num_clusters(), 1u);
  EXPECT_EQ(res.diagnostics.total_cost(), 3);
}

// A singleton made at a step where two adjacent vertices hit k together:
// the edge between them is charged once, to the better-ranked one.
TEST(RevealPivotTest, SimultaneousSingletonsShareEdgeOnce) {
  // 0 pivots {0, 1}; 2 and 3 are adjacent to each other and to 1 only.
  // Revealing 1 (clustered) bumps both counters to k = 1 at once.
  const auto g = graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  const auto pi = Permutation::from_order({0, 1, 2, 3});
  const auto res = reveal_pivot(g, pi, 1);
  const auto& diag = res.diagnostics;
  EXPECT_EQ(res.clustering.role(2), Role::kSingleton);
  EXPECT_EQ(res.clustering.role(3), Role::kSingleton);
  EXPECT_EQ(diag.singleton_cut[2], 1);
  EXPECT_EQ(diag.singleton_cut[3], 0);
  EXPECT_EQ(diag.cut_before[3], 2);
  EXPECT_EQ(diag.total_cost(), disagreement_cost(res.clustering, g).total);
}

TEST(RevealPivotTest, LargeCapacityMatchesClassicPivot) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 15;
    const auto g = random_graph(rng, n, 0.4);
    const auto pi = random_permutation(rng, n);
    const auto res = reveal_pivot(g, pi, n + rng() % 3);
    EXPECT_EQ(res.diagnostics.singleton_cost(), 0);
    EXPECT_EQ(res.clustering.num_singletons(), 0u);
    EXPECT_EQ(res.clustering, classic_pivot(g, pi));
  }
}

TEST(RevealPivotTest, RejectsMismatchedPermutation) {
  EXPECT_THROW(reveal_pivot(graph(3, {}), Permutation::identity(2), 2), Error);
  EXPECT_THROW(reveal_pivot(graph(3, {}), Permutation::identity(3), 0), Error);
}

TEST(ClassicPivotTest, CompleteGraphIsOneCluster) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < 5; ++u) {
    for (VertexId v = u + 1; v < 5; ++v) edges.push_back({u, v});
  }
  const auto g = graph(5, edges);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(classic_pivot(g, permutation_from_seed(5, seed)).num_clusters(), 1u);
  }
}

TEST(ClassicPivotTest, EmptyGraphIsAllPivots) {
  const auto cl = classic_pivot(graph(3, {}), permutation_from_seed(3, 1));
  EXPECT_EQ(cl.num_clusters(), 3u);
  EXPECT_EQ(cl.num_with_role(Role::kPivot), 3u);
}

// 5-cycle 0-1-2-3-4-0 under identity order: 0 takes {1, 4}; 2 takes 3.
TEST(ClassicPivotTest, FiveCycleHandTrace) {
  const auto g = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto clusters = classic_pivot(g, Permutation::identity(5)).clusters();
  EXPECT_EQ(clusters, (std::vector<std::vector<VertexId>>{{0, 1, 4}, {2, 3}}));
}

TEST(BruteForceOptTest, SmallHandInstances) {
  const auto tri = brute_force_opt(graph(3, {{a, b}, {a, c}, {b, c}}));
  EXPECT_EQ(tri.cost, 0);
  EXPECT_EQ(tri.clustering.num_clusters(), 1u);
  // Path: all 5 partitions of {a,b,c} cost >= 1; the first in
  // restricted-growth order achieving it is the single cluster 000.
  const auto path = brute_force_opt(graph(3, {{a, b}, {b, c}}));
  EXPECT_EQ(path.cost, 1);
  EXPECT_EQ(path.clustering.num_clusters(), 1u);
  // Star K_{1,3}: center with one leaf, or everything apart, cost 2.
  EXPECT_EQ(brute_force_opt(graph(4, {{a, b}, {a, c}, {a, d}})).cost, 2);
  EXPECT_EQ(brute_force_opt(graph(3, {})).clustering.num_clusters(), 3u);
}

TEST(BruteForceOptTest, MatchesExhaustiveLabelings) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto g = random_graph(rng, n, 0.5);
    const auto opt = brute_force_opt(g);
    ASSERT_EQ(opt.cost, naive_opt(g));
    ASSERT_EQ(naive_cost(opt.clustering, g), opt.cost);
  }
}

TEST(BruteForceOptTest, CapacityCap) {
  try {
    brute_force_opt(graph(13, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleCapacity);
  }
  EXPECT_EQ(brute_force_opt(graph(12, {{0, 1}})).cost, 0);
}

// The streaming clusterer and the sequential reveal agree exactly under a
// shared ranking, and the reveal's accounting reproduces the clustering's
// cost term by term.
TEST(RevealPivotTest, AgreesWithStreamingAndAccountsForEveryDisagreement) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 25;
    const auto g = random_graph(rng, n, std::uniform_real_distribution<>(0, 0.7)(rng));
    const auto pi = random_permutation(rng, n);
    const std::size_t k = 2 + rng() % 6;
    const auto res = reveal_pivot(g, pi, k);
    ASSERT_EQ(res.clustering, stream_of(g, pi, k));

    const auto& diag = res.diagnostics;
    const auto cost = disagreement_cost(res.clustering, g);
    ASSERT_EQ(cost.total, diag.total_cost());
    ASSERT_EQ(cost.cut_positive, diag.p_plus + diag.singleton_cost());
    ASSERT_EQ(cost.joined_negative, diag.p_minus);
    std::int64_t half_edges = 0;
    for (VertexId v = 0; v < n; ++v) {
      half_edges += diag.cut_before[v] + diag.singleton_cut[v];
      if (res.clustering.role(v) == Role::kSingleton) {
        ASSERT_EQ(diag.counter[v], k);
        ASSERT_EQ(diag.cut_before[v] + diag.singleton_cut[v],
                  diag.closed_degree[v] - 1);
      } else {
        ASSERT_EQ(diag.singleton_cut[v], 0);
        ASSERT_LT(diag.counter[v], k);
      }
    }
    ASSERT_EQ(half_edges, 2 * cost.cut_positive);
  }
}

TEST(RevealPivotTest, PotentialTraceStartsAtZeroAndMatchesFormula) {
  std::mt19937_64 rng(4);
  const auto g = random_graph(rng, 9, 0.4);
  const auto pi = random_permutation(rng, 9);
  const auto res = reveal_pivot(g, pi, 2, /*trace_phi=*/true);
  const auto& d = res.diagnostics;
  ASSERT_EQ(d.phi_trace.size(), 10u);
  for (std::int64_t phi : d.phi_trace.front()) EXPECT_EQ(phi, 0);
  for (VertexId v = 0; v < 9; ++v) {
    const std::int64_t x = d.cut_before[v];
    EXPECT_EQ(d.phi_trace.back()[v],
              x - static_cast<std::int64_t>(d.counter[v]) * (d.closed_degree[v] - x));
  }
  EXPECT_TRUE(reveal_pivot(g, pi, 2).diagnostics.phi_trace.empty());
}

TEST(SubmartingaleProbeTest, IsolatedVertexHasNoDrift) {
  const auto g = graph(4, {{0, 1}, {1, 2}});
  const auto probe = submartingale_probe(g, 2, 3, 2000, 1);
  ASSERT_EQ(probe.increments.size(), 4u);
  for (const auto& step : probe.increments) {
    EXPECT_EQ(step.mean, 0.0);
    EXPECT_EQ(step.std_error, 0.0);
  }
}

// Star center, n = 5, k = 2, 10^5 trials: each step's mean increment and the
// final potential are nonnegative up to 3 standard errors.
TEST(SubmartingaleProbeTest, StarCenterDriftIsNonnegative) {
  const auto g = generate(InstanceSpec{Star{5}, 0});
  const auto probe = submartingale_probe(g, 2, 0, 100000, 2024);
  for (const auto& step : probe.increments) {
    EXPECT_GE(step.mean, -3 * step.std_error);
  }
  EXPECT_GE(probe.final_potential.mean, -3 * probe.final_potential.std_error);
}

TEST(SubmartingaleProbeTest, RejectsBadArguments) {
  const auto g = graph(3, {});
  EXPECT_THROW(submartingale_probe(g, 2, 3, 10, 0), Error);
  EXPECT_THROW(submartingale_probe(g, 2, 0, 0, 0), Error);
}

}  // namespace
}  // namespace streamcc
