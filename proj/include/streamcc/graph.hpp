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

#ifndef STREAMCC_GRAPH_HPP_
#define STREAMCC_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "streamcc/error.hpp"
#include "streamcc/types.hpp"

namespace streamcc {

/// Full positive adjacency of a complete +/- instance; every pair not stored
/// here is negative. Self loops are not stored: consumers treat every vertex
/// as its own positive neighbour, so N(u) = neighbors(u) + {u}.
///
/// Only the oracles and the evaluator hold one of these. The streaming
/// clusterer never does.
class PositiveGraph {
 public:
  PositiveGraph() = default;

  /// Self loops are dropped and duplicate edges collapsed.
  PositiveGraph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw Error(ErrorCode::kInvalidInstance,
                    "edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                        " out of range for n = " + std::to_string(n));
      }
      if (e.u == e.v) continue;
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      num_edges_ += list.size();
    }
    num_edges_ /= 2;
  }

  explicit PositiveGraph(std::size_t n) : adjacency_(n) {}

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  /// Positive neighbours excluding the vertex itself, ascending.
  std::span<const VertexId> neighbors(VertexId u) const {
    return adjacency_[u];
  }

  /// |N(u)| under the self-neighbour convention.
  std::size_t closed_degree(VertexId u) const {
    return adjacency_[u].size() + 1;
  }

  bool has_edge(VertexId u, VertexId v) const {
    if (u == v) return false;
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  /// Every positive edge once, as (min, max), lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
      for (VertexId v : adjacency_[u]) {
        if (u < v) out.push_back(Edge{u, v});
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t num_edges_ = 0;
};

}  // namespace streamcc

#endif  // STREAMCC_GRAPH_HPP_
