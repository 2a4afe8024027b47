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

#ifndef STREAMCC_GEN_HPP_
#define STREAMCC_GEN_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "streamcc/core.hpp"

namespace streamcc {

/// Disjoint positive cliques of the given sizes (vertices numbered
/// consecutively), after which every pair's label is flipped independently
/// with probability flip_prob.
struct PlantedPartition {
  std::vector<std::size_t> sizes;
  double flip_prob = 0.0;
};

struct RandomPositive {
  std::size_t n = 0;
  double edge_prob = 0.0;
};

struct CompleteClique {
  std::size_t n = 0;
};

/// 0 - 1 - ... - (n-1).
struct Path {
  std::size_t n = 0;
};

/// Vertex 0 joined to each of 1..n-1.
struct Star {
  std::size_t n = 0;
};

struct Empty {
  std::size_t n = 0;
};

using InstanceKind = std::variant<PlantedPartition, RandomPositive,
                                  CompleteClique, Path, Star, Empty>;

struct InstanceSpec {
  InstanceKind kind;
  std::uint64_t seed = 0;
};

namespace internal {

inline void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kSpec,
                std::string(name) + " must lie in [0, 1], got " +
                    std::to_string(p));
  }
}

inline void require_vertices(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kSpec, "instance needs at least 1 vertex");
}

}  // namespace internal

/// Pure function of `spec`: random kinds draw one Bernoulli per vertex pair
/// (u < v, lexicographic) from SplitMix64(seed).
inline PositiveGraph generate(const InstanceSpec& spec) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  SplitMix64 rng(spec.seed);

  auto all_pairs = [&](auto&& positive) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (positive(u, v)) edges.push_back(Edge{u, v});
      }
    }
  };

  if (const auto* planted = std::get_if<PlantedPartition>(&spec.kind)) {
    internal::require_probability(planted->flip_prob, "flip_prob");
    if (planted->sizes.empty()) {
      throw Error(ErrorCode::kSpec, "planted partition needs cluster sizes");
    }
    std::vector<std::size_t> block;
    for (std::size_t b = 0; b < planted->sizes.size(); ++b) {
      if (planted->sizes[b] == 0) {
        throw Error(ErrorCode::kSpec, "cluster sizes must be at least 1");
      }
      block.insert(block.end(), planted->sizes[b], b);
    }
    n = block.size();
    all_pairs([&](VertexId u, VertexId v) {
      const bool planted_positive = block[u] == block[v];
      return planted_positive != rng.bernoulli(planted->flip_prob);
    });
  } else if (const auto* random = std::get_if<RandomPositive>(&spec.kind)) {
    internal::require_probability(random->edge_prob, "edge_prob");
    n = random->n;
    internal::require_vertices(n);
    all_pairs([&](VertexId, VertexId) {
      return rng.bernoulli(random->edge_prob);
    });
  } else if (const auto* clique = std::get_if<CompleteClique>(&spec.kind)) {
    n = clique->n;
    internal::require_vertices(n);
    all_pairs([](VertexId, VertexId) { return true; });
  } else if (const auto* path = std::get_if<Path>(&spec.kind)) {
    n = path->n;
    internal::require_vertices(n);
    for (VertexId u = 0; u + 1 < n; ++u) edges.push_back(Edge{u, u + 1});
  } else if (const auto* star = std::get_if<Star>(&spec.kind)) {
    n = star->n;
    internal::require_vertices(n);
    for (VertexId v = 1; v < n; ++v) edges.push_back(Edge{0, v});
  } else {
    n = std::get<Empty>(spec.kind).n;
    internal::require_vertices(n);
  }
  return PositiveGraph(n, edges);
}

enum class StreamOrder { kSorted, kReversed, kShuffled, kInterleaved };

struct EmitOptions {
  StreamOrder order = StreamOrder::kSorted;
  /// Used by kShuffled only.
  std::uint64_t shuffle_seed = 0;
  /// Also emit every non-positive pair, labeled negative.
  bool include_negatives = false;
};

/// Edge stream for g. Every positive edge appears exactly once.
///   kSorted:      (u, v) with u < v, lexicographic.
///   kReversed:    kSorted backwards.
///   kShuffled:    Fisher-Yates over SplitMix64(shuffle_seed); each record's
///                 endpoints are also swapped with probability 1/2.
///   kInterleaved: alternately the first and last remaining sorted record,
///                 so edges of low- and high-id vertices arrive interleaved.
inline std::vector<LabeledEdge> emit_stream(const PositiveGraph& g,
                                            const EmitOptions& options = {}) {
  std::vector<LabeledEdge> sorted;
  if (options.include_negatives) {
    for (VertexId u = 0; u < g.size(); ++u) {
      for (VertexId v = u + 1; v < g.size(); ++v) {
        sorted.push_back(LabeledEdge{
            u, v, g.has_edge(u, v) ? Label::kPositive : Label::kNegative});
      }
    }
  } else {
    for (const Edge& e : g.edges()) {
      sorted.push_back(LabeledEdge{e.u, e.v, Label::kPositive});
    }
  }

  switch (options.order) {
    case StreamOrder::kSorted:
      return sorted;
    case StreamOrder::kReversed:
      std::reverse(sorted.begin(), sorted.end());
      return sorted;
    case StreamOrder::kShuffled: {
      SplitMix64 rng(options.shuffle_seed);
      for (std::size_t i = sorted.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i));
        std::swap(sorted[i - 1], sorted[j]);
      }
      for (LabeledEdge& e : sorted) {
        if (rng.next() & 1) std::swap(e.u, e.v);
      }
      return sorted;
    }
    case StreamOrder::kInterleaved: {
      std::vector<LabeledEdge> out;
      out.reserve(sorted.size());
      std::size_t lo = 0;
      std::size_t hi = sorted.size();
      while (lo < hi) {
        out.push_back(sorted[lo++]);
        if (lo < hi) out.push_back(sorted[--hi]);
      }
      return out;
    }
  }
  return sorted;
}

inline std::vector<LabeledEdge> emit_stream(const PositiveGraph& g,
                                            StreamOrder order,
                                            std::uint64_t shuffle_seed = 0) {
  return emit_stream(g, EmitOptions{order, shuffle_seed, false});
}

}  // namespace streamcc

#endif  // STREAMCC_GEN_HPP_
