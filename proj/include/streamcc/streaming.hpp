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

#ifndef STREAMCC_STREAMING_HPP_
#define STREAMCC_STREAMING_HPP_

#include <chrono>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <string>
#include <utility>
#include <vector>

#include "streamcc/core.hpp"

namespace streamcc {

struct RunStats {
  std::uint64_t edges_seen = 0;
  std::uint64_t positive_edges = 0;
  std::uint64_t negative_edges = 0;
  std::uint64_t self_loops = 0;
  // Negative records for a pair currently retained as positive. Pairs whose
  // positive record was already evicted, or arrives later, are not
  // detectable in O(kn) memory and are not counted.
  std::uint64_t conflicting_labels = 0;
  std::size_t peak_entries = 0;
  double init_seconds = 0.0;
  double stream_seconds = 0.0;
  double finalize_seconds = 0.0;
};

/// Semi-streaming state: one capped neighbour queue per vertex, all ranked by
/// the same permutation. Memory is at most k entries per vertex.
///
/// In halved mode a neighbour is only recorded by the endpoint it outranks
/// (v goes into A(u) only if rank(v) < rank(u)); the final clustering is the
/// same, and every stored neighbour is better-ranked than its owner.
class StreamState {
 public:
  StreamState(std::size_t n, std::size_t k, Permutation pi,
              bool halved = false)
      : k_(k), pi_(std::move(pi)), halved_(halved) {
    if (k < 2) {
      throw Error(ErrorCode::kParameter,
                  "k must be at least 2 (got " + std::to_string(k) + ")");
    }
    if (n == 0) {
      throw Error(ErrorCode::kInvalidInstance, "n must be at least 1");
    }
    if (pi_.size() != n) {
      throw Error(ErrorCode::kInvalidInstance,
                  "permutation ranks " + std::to_string(pi_.size()) +
                      " vertices, expected " + std::to_string(n));
    }
    queues_.reserve(n);
    for (VertexId u = 0; u < n; ++u) {
      queues_.emplace_back(k);
      queues_.back().insert(u, pi_.rank(u));
    }
    stats_.peak_entries = total_entries_ = n;
  }

  void ingest_edge(VertexId u, VertexId v, Label label = Label::kPositive) {
    ++stats_.edges_seen;
    const std::size_t n = queues_.size();
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kStreamFormat,
                  "edge #" + std::to_string(stats_.edges_seen) + " (" +
                      std::to_string(u) + ", " + std::to_string(v) +
                      "): vertex id out of range for n = " +
                      std::to_string(n));
    }
    if (label == Label::kNegative) {
      ++stats_.negative_edges;
      if (u != v && (queues_[u].contains(pi_.rank(v)) ||
                     queues_[v].contains(pi_.rank(u)))) {
        ++stats_.conflicting_labels;
      }
      return;
    }
    if (u == v) {
      ++stats_.self_loops;
      return;
    }
    ++stats_.positive_edges;
    const Rank ru = pi_.rank(u);
    const Rank rv = pi_.rank(v);
    if (!halved_ || ru < rv) offer(v, u, ru);
    if (!halved_ || rv < ru) offer(u, v, rv);
    STREAMCC_DCHECK(total_entries_ <= k_ * n);
  }

  void ingest_edge(const LabeledEdge& e) { ingest_edge(e.u, e.v, e.label); }

  /// Pivot selection sweep. Vertices are visited in rank order; each joins the
  /// best-ranked entry of its queue that is itself or an existing pivot, and
  /// becomes a singleton if there is none. O(kn) total.
  Clustering finalize() const {
    const std::size_t n = queues_.size();
    std::vector<VertexId> leader(n);
    std::vector<Role> role(n, Role::kSingleton);
    std::vector<bool> is_pivot(n, false);
    for (VertexId u : pi_.order()) {
      leader[u] = u;
      for (const RankedVertex& entry : queues_[u].entries()) {
        if (entry.vertex == u) {
          role[u] = Role::kPivot;
          is_pivot[u] = true;
          break;
        }
        if (is_pivot[entry.vertex]) {
          role[u] = Role::kMember;
          leader[u] = entry.vertex;
          break;
        }
      }
    }
    return Clustering::from_leaders(leader, std::move(role));
  }

  std::size_t size() const noexcept { return queues_.size(); }
  std::size_t k() const noexcept { return k_; }
  bool halved() const noexcept { return halved_; }
  const Permutation& permutation() const noexcept { return pi_; }
  const CappedRankQueue& queue(VertexId u) const { return queues_[u]; }
  std::size_t total_entries() const noexcept { return total_entries_; }
  const RunStats& stats() const noexcept { return stats_; }

 private:
  void offer(VertexId owner, VertexId vertex, Rank rank) {
    CappedRankQueue& q = queues_[owner];
    const std::size_t before = q.size();
    if (q.insert(vertex, rank)) {
      total_entries_ += q.size() - before;
      if (total_entries_ > stats_.peak_entries) {
        stats_.peak_entries = total_entries_;
      }
    }
  }

  std::size_t k_;
  Permutation pi_;
  bool halved_;
  std::vector<CappedRankQueue> queues_;
  std::size_t total_entries_ = 0;
  RunStats stats_;
};

struct StreamResult {
  Clustering clustering;
  RunStats stats;
};

namespace internal {

template <typename T>
LabeledEdge as_labeled(const T& e) {
  if constexpr (std::same_as<T, LabeledEdge>) {
    return e;
  } else {
    return LabeledEdge{e.u, e.v, Label::kPositive};
  }
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace internal

/// Pull-style edge source: returns the next edge, or nullopt at the end.
template <typename F>
concept EdgePuller = requires(F f) {
  { f() } -> std::convertible_to<std::optional<LabeledEdge>>;
};

/// Range of LabeledEdge, or of Edge (all positive). Iterated exactly once.
template <typename R>
concept EdgeRange = std::ranges::input_range<R> &&
    (std::same_as<std::ranges::range_value_t<R>, LabeledEdge> ||
     std::same_as<std::ranges::range_value_t<R>, Edge>);

/// init -> ingest every edge once -> finalize, with phase timing.
template <typename Source>
  requires EdgePuller<Source> || EdgeRange<Source>
StreamResult cluster_stream(Source&& source, std::size_t n, std::size_t k,
                            Permutation pi, bool halved = false) {
  auto start = std::chrono::steady_clock::now();
  StreamState state(n, k, std::move(pi), halved);
  const double init_seconds = internal::seconds_since(start);

  start = std::chrono::steady_clock::now();
  if constexpr (EdgePuller<Source>) {
    while (std::optional<LabeledEdge> e = source()) state.ingest_edge(*e);
  } else {
    for (const auto& e : source) state.ingest_edge(internal::as_labeled(e));
  }
  const double stream_seconds = internal::seconds_since(start);

  start = std::chrono::steady_clock::now();
  StreamResult result{state.finalize(), state.stats()};
  result.stats.init_seconds = init_seconds;
  result.stats.stream_seconds = stream_seconds;
  result.stats.finalize_seconds = internal::seconds_since(start);
  return result;
}

template <typename Source>
  requires EdgePuller<Source> || EdgeRange<Source>
StreamResult cluster_stream(Source&& source, std::size_t n, std::size_t k,
                            std::uint64_t seed, bool halved = false) {
  if (n == 0) throw Error(ErrorCode::kInvalidInstance, "n must be at least 1");
  return cluster_stream(std::forward<Source>(source), n, k,
                        permutation_from_seed(n, seed), halved);
}

}  // namespace streamcc

#endif  // STREAMCC_STREAMING_HPP_
