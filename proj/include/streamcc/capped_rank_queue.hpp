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

#ifndef STREAMCC_CAPPED_RANK_QUEUE_HPP_
#define STREAMCC_CAPPED_RANK_QUEUE_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "streamcc/error.hpp"
#include "streamcc/types.hpp"

namespace streamcc {

struct RankedVertex {
  VertexId vertex = 0;
  Rank rank = 0;

  friend constexpr bool operator==(const RankedVertex&,
                                   const RankedVertex&) = default;
};

/// Keeps the `capacity` best-ranked (numerically smallest rank) vertices out
/// of everything ever inserted. Entries are held in a flat array sorted by
/// rank: membership and the insertion point are found by binary search in
/// O(log k) comparisons, and a rank-order scan for the clustering sweep is a
/// plain forward iteration that can stop at the first hit.
///
/// Ranks come from one permutation, so equal ranks mean the same vertex and
/// re-inserting a present vertex is a no-op.
class CappedRankQueue {
 public:
  explicit CappedRankQueue(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) {
      throw Error(ErrorCode::kParameter, "queue capacity must be at least 1");
    }
  }

  /// Returns true if the kept set changed.
  bool insert(VertexId vertex, Rank rank) {
    if (entries_.size() == capacity_ && rank > entries_.back().rank) {
      return false;
    }
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), rank,
        [](const RankedVertex& e, Rank r) { return e.rank < r; });
    if (it != entries_.end() && it->rank == rank) return false;
    if (entries_.size() == capacity_) {
      // Evict first so the size never exceeds the cap, even transiently.
      const auto offset = it - entries_.begin();
      entries_.pop_back();
      it = entries_.begin() + offset;
    }
    entries_.insert(it, RankedVertex{vertex, rank});
    STREAMCC_DCHECK(entries_.size() <= capacity_);
    return true;
  }

  bool contains(Rank rank) const {
    return std::binary_search(
        entries_.begin(), entries_.end(), RankedVertex{0, rank},
        [](const RankedVertex& a, const RankedVertex& b) {
          return a.rank < b.rank;
        });
  }

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool full() const noexcept { return entries_.size() == capacity_; }

  /// Lowest-ranked kept entry; the next one to be evicted.
  const RankedVertex& worst() const { return entries_.back(); }

  /// Kept entries, best-ranked first.
  std::span<const RankedVertex> entries() const noexcept { return entries_; }

 private:
  std::size_t capacity_;
  std::vector<RankedVertex> entries_;
};

}  // namespace streamcc

#endif  // STREAMCC_CAPPED_RANK_QUEUE_HPP_
