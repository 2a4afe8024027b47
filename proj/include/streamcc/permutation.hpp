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

#ifndef STREAMCC_PERMUTATION_HPP_
#define STREAMCC_PERMUTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "streamcc/error.hpp"
#include "streamcc/rng.hpp"
#include "streamcc/types.hpp"

namespace streamcc {

/// A bijection V -> {1..n}. Stores both directions so that rank lookups and
/// rank-order sweeps are O(1) per vertex.
class Permutation {
 public:
  /// `order[i]` is the vertex holding rank i + 1.
  static Permutation from_order(std::vector<VertexId> order) {
    if (order.empty()) {
      throw Error(ErrorCode::kInvalidInstance, "permutation over zero vertices");
    }
    std::vector<Rank> rank(order.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const VertexId v = order[i];
      if (v >= order.size() || rank[v] != 0) {
        throw Error(ErrorCode::kInvalidInstance,
                    "order is not a permutation of 0..n-1");
      }
      rank[v] = static_cast<Rank>(i + 1);
    }
    return Permutation(std::move(order), std::move(rank));
  }

  static Permutation identity(std::size_t n) {
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    return from_order(std::move(order));
  }

  /// Inverse of `rank`: `ranks[v]` must be a bijection onto {1..n}.
  static Permutation from_ranks(std::span<const Rank> ranks) {
    std::vector<VertexId> order(ranks.size(), 0);
    std::vector<bool> seen(ranks.size(), false);
    for (std::size_t v = 0; v < ranks.size(); ++v) {
      const Rank r = ranks[v];
      if (r < 1 || r > ranks.size() || seen[r - 1]) {
        throw Error(ErrorCode::kInvalidInstance,
                    "ranks are not a bijection onto 1..n");
      }
      seen[r - 1] = true;
      order[r - 1] = static_cast<VertexId>(v);
    }
    return from_order(std::move(order));
  }

  std::size_t size() const noexcept { return order_.size(); }
  Rank rank(VertexId v) const { return rank_[v]; }
  VertexId at_rank(Rank r) const { return order_[r - 1]; }

  /// Vertices from highest to lowest ranked.
  std::span<const VertexId> order() const noexcept { return order_; }
  std::span<const Rank> ranks() const noexcept { return rank_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Permutation(std::vector<VertexId> order, std::vector<Rank> rank)
      : order_(std::move(order)), rank_(std::move(rank)) {}

  std::vector<VertexId> order_;
  std::vector<Rank> rank_;
};

/// Uniform random permutation of n vertices. Fisher-Yates over SplitMix64:
/// start from the identity order and, for i = n-1 down to 1, swap positions i
/// and j = below(i + 1). The resulting order lists vertices by rank.
inline Permutation permutation_from_seed(std::size_t n, std::uint64_t seed) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidInstance, "n must be at least 1");
  }
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  SplitMix64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(order[i], order[j]);
  }
  return Permutation::from_order(std::move(order));
}

}  // namespace streamcc

#endif  // STREAMCC_PERMUTATION_HPP_
