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

#ifndef STREAMCC_COST_HPP_
#define STREAMCC_COST_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "streamcc/core.hpp"
#include "streamcc/reference.hpp"
#include "streamcc/stats.hpp"
#include "streamcc/streaming.hpp"

namespace streamcc {

struct CostReport {
  std::int64_t cut_positive = 0;
  std::int64_t joined_negative = 0;
  std::int64_t total = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

/// Disagreements under the complete-graph objective. Negative pairs are never
/// enumerated: a cluster C joins |C|(|C|-1)/2 pairs, of which the positive
/// edges inside C agree. O(n + m).
inline CostReport disagreement_cost(const Clustering& c,
                                    const PositiveGraph& g) {
  if (c.size() != g.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "clustering covers " + std::to_string(c.size()) +
                    " vertices, graph has " + std::to_string(g.size()));
  }
  std::vector<std::int64_t> size(c.num_clusters(), 0);
  for (ClusterId id : c.assignment()) ++size[id];

  CostReport report;
  std::int64_t inside = 0;
  for (VertexId u = 0; u < g.size(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (u >= v) continue;
      if (c.cluster_of(u) == c.cluster_of(v)) {
        ++inside;
      } else {
        ++report.cut_positive;
      }
    }
  }
  std::int64_t joined_pairs = 0;
  for (std::int64_t s : size) joined_pairs += s * (s - 1) / 2;
  report.joined_negative = joined_pairs - inside;
  report.total = report.cut_positive + report.joined_negative;
  return report;
}

/// The capped streaming clusterer with parameter k.
struct CappedStream {
  std::size_t k = 2;
  bool halved = false;
};

/// Uncapped Pivot baseline.
struct ClassicPivot {};

using Algorithm = std::variant<CappedStream, ClassicPivot>;

/// Runs `algorithm` on g under pi. The streaming variant consumes g's edges
/// in sorted order.
inline Clustering run_algorithm(const Algorithm& algorithm,
                                const PositiveGraph& g,
                                std::span<const Edge> edges,
                                const Permutation& pi) {
  if (const auto* capped = std::get_if<CappedStream>(&algorithm)) {
    StreamState state(g.size(), capped->k, pi, capped->halved);
    for (const Edge& e : edges) state.ingest_edge(e.u, e.v);
    return state.finalize();
  }
  return classic_pivot(g, pi);
}

struct CostEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  /// Fraction of runs whose clustering has at least one singleton.
  double singleton_rate = 0.0;
  std::size_t trials = 0;
};

/// Monte Carlo over `trials` permutations; trial i uses
/// permutation_from_seed(n, derive_seed(seed, i)).
inline CostEstimate estimate_expected_cost(const PositiveGraph& g,
                                           const Algorithm& algorithm,
                                           std::size_t trials,
                                           std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::kParameter, "trials must be positive");
  if (g.size() == 0) throw Error(ErrorCode::kInvalidInstance, "empty graph");
  const std::vector<Edge> edges = g.edges();
  RunningStats cost;
  std::size_t with_singleton = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Permutation pi =
        permutation_from_seed(g.size(), derive_seed(seed, trial));
    const Clustering c = run_algorithm(algorithm, g, edges, pi);
    cost.add(static_cast<double>(disagreement_cost(c, g).total));
    with_singleton += c.num_singletons() > 0;
  }
  return CostEstimate{cost.mean(), cost.std_error(),
                      static_cast<double>(with_singleton) /
                          static_cast<double>(trials),
                      trials};
}

inline constexpr std::size_t kExactExpectationMaxVertices = 9;

struct ExactExpectation {
  /// Sum of costs over all n! permutations.
  std::int64_t total_cost = 0;
  std::uint64_t permutations = 0;
  std::uint64_t runs_with_singleton = 0;

  double mean() const {
    return static_cast<double>(total_cost) / static_cast<double>(permutations);
  }
};

/// Expected cost by running `algorithm` under every permutation of the
/// vertices (lexicographic order of the rank list).
inline ExactExpectation exact_expected_cost(const PositiveGraph& g,
                                            const Algorithm& algorithm) {
  const std::size_t n = g.size();
  if (n == 0) throw Error(ErrorCode::kInvalidInstance, "empty graph");
  if (n > kExactExpectationMaxVertices) {
    throw Error(ErrorCode::kOracleCapacity,
                "permutation enumeration supports at most " +
                    std::to_string(kExactExpectationMaxVertices) +
                    " vertices");
  }
  const std::vector<Edge> edges = g.edges();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  ExactExpectation out;
  do {
    const Clustering c =
        run_algorithm(algorithm, g, edges, Permutation::from_order(order));
    out.total_cost += disagreement_cost(c, g).total;
    out.runs_with_singleton += c.num_singletons() > 0;
    ++out.permutations;
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

struct RatioReport {
  std::int64_t opt = 0;
  double mean_cost = 0.0;
  double std_error = 0.0;
  /// OPT = 0: no ratio is defined; the mean cost was checked to be 0.
  bool exact_instance = false;
  double ratio = std::numeric_limits<double>::quiet_NaN();
  /// mean +- 3 standard errors, divided by OPT.
  double ratio_ci_low = std::numeric_limits<double>::quiet_NaN();
  double ratio_ci_high = std::numeric_limits<double>::quiet_NaN();
  /// 3 + 6 / (k - 1).
  double bound = 0.0;
};

inline double approximation_bound(std::size_t k) {
  return 3.0 + 6.0 / static_cast<double>(k - 1);
}

/// Mean capped-stream cost over `trials` permutations relative to the exact
/// optimum (brute force, so g must be small).
inline RatioReport approximation_ratio(const PositiveGraph& g, std::size_t k,
                                       std::size_t trials,
                                       std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::kParameter, "k must be at least 2");
  RatioReport report;
  report.opt = brute_force_opt(g).cost;
  const CostEstimate est =
      estimate_expected_cost(g, CappedStream{k}, trials, seed);
  report.mean_cost = est.mean;
  report.std_error = est.std_error;
  report.bound = approximation_bound(k);
  if (report.opt == 0) {
    report.exact_instance = true;
    if (est.mean != 0.0) {
      throw Error(ErrorCode::kInvariant,
                  "instance has a zero-cost clustering but the mean cost is " +
                      std::to_string(est.mean));
    }
    return report;
  }
  const auto opt = static_cast<double>(report.opt);
  report.ratio = est.mean / opt;
  report.ratio_ci_low = (est.mean - 3.0 * est.std_error) / opt;
  report.ratio_ci_high = (est.mean + 3.0 * est.std_error) / opt;
  return report;
}

}  // namespace streamcc

#endif  // STREAMCC_COST_HPP_
