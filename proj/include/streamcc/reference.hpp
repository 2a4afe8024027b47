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

#ifndef STREAMCC_REFERENCE_HPP_
#define STREAMCC_REFERENCE_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "streamcc/core.hpp"
#include "streamcc/stats.hpp"

namespace streamcc {

/// Accounting of a sequential-reveal run. All counts are positive-edge or
/// vertex-pair counts; the implicit self edge of each vertex is never cut.
struct Diagnostics {
  /// Positive edges cut at pivot steps.
  std::int64_t p_plus = 0;
  /// Negative pairs joined at pivot steps.
  std::int64_t p_minus = 0;
  /// Positive edges cut when the vertex was made a singleton (0 otherwise).
  std::vector<std::int64_t> singleton_cut;
  /// Positive edges incident to the vertex cut before the end of the run, or
  /// before it was made a singleton.
  std::vector<std::int64_t> cut_before;
  /// Positive degree counting the vertex itself.
  std::vector<std::int64_t> closed_degree;
  /// Final counter of already-clustered neighbours revealed while the vertex
  /// was unclustered.
  std::vector<std::size_t> counter;
  /// phi_trace[t - 1][v] is the potential of v at the start of step t, for
  /// t = 1..n+1. Empty unless tracing was requested.
  std::vector<std::vector<std::int64_t>> phi_trace;

  std::int64_t singleton_cost() const {
    return std::accumulate(singleton_cut.begin(), singleton_cut.end(),
                           std::int64_t{0});
  }

  /// Equals the disagreement cost of the produced clustering.
  std::int64_t total_cost() const { return p_plus + p_minus + singleton_cost(); }
};

struct RevealResult {
  Clustering clustering;
  Diagnostics diagnostics;
};

/// Sequential-reveal form of the capped Pivot algorithm, driven by an explicit
/// permutation (the vertex revealed at step t is pi.at_rank(t)).
///
/// A revealed unclustered vertex becomes a pivot and takes all unclustered
/// positive neighbours. A revealed clustered vertex bumps the counter of each
/// unclustered neighbour; neighbours whose counter reaches k become
/// singletons, processed in rank order when several hit k at one step (an
/// edge between two of them is charged to the better-ranked one).
///
/// Unlike the streaming path this accepts k = 1.
inline RevealResult reveal_pivot(const PositiveGraph& g, const Permutation& pi,
                                 std::size_t k, bool trace_phi = false) {
  const std::size_t n = g.size();
  if (pi.size() != n) {
    throw Error(ErrorCode::kInvalidInstance, "permutation size mismatch");
  }
  if (k == 0) throw Error(ErrorCode::kParameter, "k must be positive");

  Diagnostics d;
  d.singleton_cut.assign(n, 0);
  d.cut_before.assign(n, 0);
  d.counter.assign(n, 0);
  d.closed_degree.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    d.closed_degree[v] = static_cast<std::int64_t>(g.closed_degree(v));
  }

  std::vector<bool> clustered(n, false);
  std::vector<VertexId> leader(n);
  std::vector<Role> role(n, Role::kSingleton);
  std::vector<std::size_t> joined_at(n, 0);
  std::vector<VertexId> members;
  std::vector<VertexId> newly_single;

  auto record_phi = [&] {
    auto& row = d.phi_trace.emplace_back(n);
    for (VertexId v = 0; v < n; ++v) {
      const std::int64_t x = d.cut_before[v];
      row[v] = (clustered[v] ? x : 0) -
               static_cast<std::int64_t>(d.counter[v]) *
                   (d.closed_degree[v] - x);
    }
  };
  if (trace_phi) record_phi();

  for (std::size_t t = 1; t <= n; ++t) {
    const VertexId w = pi.at_rank(static_cast<Rank>(t));
    if (!clustered[w]) {
      members.assign(1, w);
      for (VertexId y : g.neighbors(w)) {
        if (!clustered[y]) members.push_back(y);
      }
      for (VertexId x : members) {
        clustered[x] = true;
        joined_at[x] = t;
        leader[x] = w;
        role[x] = x == w ? Role::kPivot : Role::kMember;
      }
      std::int64_t inside_twice = 0;
      for (VertexId x : members) {
        for (VertexId y : g.neighbors(x)) {
          if (joined_at[y] == t) {
            ++inside_twice;
          } else if (!clustered[y]) {
            ++d.p_plus;
            ++d.cut_before[x];
            ++d.cut_before[y];
          }
        }
      }
      const auto size = static_cast<std::int64_t>(members.size());
      d.p_minus += size * (size - 1) / 2 - inside_twice / 2;
    } else {
      newly_single.clear();
      for (VertexId v : g.neighbors(w)) {
        if (!clustered[v] && ++d.counter[v] == k) newly_single.push_back(v);
      }
      std::sort(newly_single.begin(), newly_single.end(),
                [&](VertexId a, VertexId b) { return pi.rank(a) < pi.rank(b); });
      for (VertexId v : newly_single) {
        clustered[v] = true;
        leader[v] = v;
        role[v] = Role::kSingleton;
        for (VertexId y : g.neighbors(v)) {
          if (!clustered[y]) {
            ++d.singleton_cut[v];
            ++d.cut_before[y];
          }
        }
      }
    }
    if (trace_phi) record_phi();
  }
  return RevealResult{Clustering::from_leaders(leader, std::move(role)),
                      std::move(d)};
}

/// Uncapped Pivot: in rank order, each still-unclustered vertex opens a
/// cluster with all of its unclustered positive neighbours.
inline Clustering classic_pivot(const PositiveGraph& g, const Permutation& pi) {
  const std::size_t n = g.size();
  if (pi.size() != n) {
    throw Error(ErrorCode::kInvalidInstance, "permutation size mismatch");
  }
  std::vector<bool> clustered(n, false);
  std::vector<VertexId> leader(n);
  std::vector<Role> role(n, Role::kMember);
  for (VertexId w : pi.order()) {
    if (clustered[w]) continue;
    clustered[w] = true;
    leader[w] = w;
    role[w] = Role::kPivot;
    for (VertexId y : g.neighbors(w)) {
      if (!clustered[y]) {
        clustered[y] = true;
        leader[y] = w;
      }
    }
  }
  return Clustering::from_leaders(leader, std::move(role));
}

inline constexpr std::size_t kBruteForceMaxVertices = 12;

struct OptimalClustering {
  Clustering clustering;
  std::int64_t cost = 0;
};

/// Exact minimum-disagreement clustering by enumerating set partitions as
/// restricted growth strings, with branch-and-bound on the partial cost.
/// Ties go to the first partition in restricted-growth-string order.
inline OptimalClustering brute_force_opt(const PositiveGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) throw Error(ErrorCode::kInvalidInstance, "empty graph");
  if (n > kBruteForceMaxVertices) {
    throw Error(ErrorCode::kOracleCapacity,
                "brute force supports at most " +
                    std::to_string(kBruteForceMaxVertices) +
                    " vertices, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbors(u)) adj[u] |= 1u << v;
  }

  std::vector<ClusterId> labels(n, 0);
  std::vector<ClusterId> best_labels;
  std::vector<std::uint32_t> block(n, 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();

  auto search = [&](auto&& self, std::size_t i, std::int64_t cost,
                    std::size_t blocks) -> void {
    if (cost >= best) return;
    if (i == n) {
      best = cost;
      best_labels = labels;
      return;
    }
    const std::uint32_t earlier = (1u << i) - 1;
    for (std::size_t b = 0; b <= blocks; ++b) {
      const std::uint32_t mask = block[b];
      // Positive edges to earlier vertices outside b are cut; non-edges to
      // earlier vertices inside b are joined.
      const int delta = std::popcount(adj[i] & earlier & ~mask) +
                        std::popcount(~adj[i] & mask);
      labels[i] = static_cast<ClusterId>(b);
      block[b] |= 1u << i;
      self(self, i + 1, cost + delta, std::max(blocks, b + 1));
      block[b] &= ~(1u << i);
    }
  };
  search(search, 0, 0, 0);

  return OptimalClustering{Clustering::from_partition(best_labels), best};
}

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct PotentialProbe {
  VertexId vertex = 0;
  /// increments[t - 1] estimates E[Phi_{t+1}(v) - Phi_t(v)] for t = 1..n.
  std::vector<Estimate> increments;
  /// Estimate of E[Phi_{n+1}(v)].
  Estimate final_potential;
};

/// Monte Carlo estimate of the per-step drift of the potential
/// Phi_t(v) = [v clustered] * X_t(v) - K_t(v) * (D(v) - X_t(v)) for every
/// vertex, over `trials` independent uniform permutations. A nonnegative
/// drift at every step is the expected outcome.
inline std::vector<PotentialProbe> submartingale_probe_all(
    const PositiveGraph& g, std::size_t k, std::size_t trials,
    std::uint64_t seed) {
  const std::size_t n = g.size();
  if (n == 0) throw Error(ErrorCode::kInvalidInstance, "empty graph");
  if (trials == 0) throw Error(ErrorCode::kParameter, "trials must be positive");

  std::vector<std::vector<RunningStats>> steps(n, std::vector<RunningStats>(n));
  std::vector<RunningStats> finals(n);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Permutation pi = permutation_from_seed(n, derive_seed(seed, trial));
    const auto trace = reveal_pivot(g, pi, k, true).diagnostics.phi_trace;
    for (VertexId v = 0; v < n; ++v) {
      for (std::size_t t = 0; t < n; ++t) {
        steps[v][t].add(static_cast<double>(trace[t + 1][v] - trace[t][v]));
      }
      finals[v].add(static_cast<double>(trace[n][v]));
    }
  }

  std::vector<PotentialProbe> out(n);
  for (VertexId v = 0; v < n; ++v) {
    out[v].vertex = v;
    for (const RunningStats& s : steps[v]) {
      out[v].increments.push_back({s.mean(), s.std_error()});
    }
    out[v].final_potential = {finals[v].mean(), finals[v].std_error()};
  }
  return out;
}

inline PotentialProbe submartingale_probe(const PositiveGraph& g,
                                          std::size_t k, VertexId v,
                                          std::size_t trials,
                                          std::uint64_t seed) {
  if (v >= g.size()) {
    throw Error(ErrorCode::kInvalidInstance, "probe vertex out of range");
  }
  return submartingale_probe_all(g, k, trials, seed)[v];
}

}  // namespace streamcc

#endif  // STREAMCC_REFERENCE_HPP_
